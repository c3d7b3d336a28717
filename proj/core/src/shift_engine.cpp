#include "haarshift/shift_engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace haarshift {

CaseClass classify(DyadicInterval i, DyadicInterval k) {
  if (half_line(i) != half_line(k)) return CaseClass::OppositeHalfLines;
  if (i == k) return CaseClass::Equal;
  if (strictly_contains(i, k)) return CaseClass::Interior;
  if (strictly_contains(k, i)) return CaseClass::Covering;
  return CaseClass::GapSameHalfLine;
}

const char* case_name(CaseClass c) {
  switch (c) {
    case CaseClass::Equal: return "equal";
    case CaseClass::Interior: return "interior";
    case CaseClass::Covering: return "covering";
    case CaseClass::GapSameHalfLine: return "gap";
    case CaseClass::OppositeHalfLines: return "opposite-half-lines";
  }
  return "?";
}

Sqrt2Scalar RestrictedShiftForm::norm2() const {
  Sqrt2Scalar total = constant.squared() * Sqrt2Scalar(interval_size(k)) + haar.squared();
  for (const auto& [l, c] : inner) total += c.squared();
  return total;
}

bool RestrictedShiftForm::is_zero() const {
  return constant.is_zero() && haar.is_zero() && inner.empty();
}

Sqrt2Scalar ancestor_sum(DyadicInterval i, DyadicInterval k, DyadicInterval base) {
  if (half_line(i) != half_line(k) || half_line(i) != half_line(base))
    throw std::invalid_argument("ancestor_sum: opposite half-lines");
  if (half_line(i) == HalfLineSign::negative)
    return -ancestor_sum(reflect(i), reflect(k), reflect(base));

  // Summands are the strict ancestors of I that strictly contain base; the
  // smallest of them is the walk's start.
  const DyadicInterval common = *meet(i, base);
  const DyadicInterval start = common == i || common == base ? parent(common) : common;
  if (!strictly_contains(start, parent(k)))
    throw std::invalid_argument("ancestor_sum: summands must see K inside a grandchild");

  // Walk to one level above the zero-anchored apex of the first summand; from
  // there on every term is -2^{-m} (I and K both sit in the lower-lower
  // grandchild), a geometric tail with exact value -2^{-(a+1)}.
  const std::int64_t a = apex(start).scale;
  Rational total = 0;
  for (DyadicInterval l = start; l.scale <= a + 1; l = parent(l))
    total += Rational(haar_sign(l, i) * shift_haar_sign(l, k)) * pow2(-l.scale);
  total -= pow2(-(a + 1));
  return Sqrt2Scalar(total);
}

namespace {

RestrictedShiftForm zero_form(DyadicInterval k) { return RestrictedShiftForm{k, 0, 0, {}}; }

// Scales every part of the form.
RestrictedShiftForm scaled(RestrictedShiftForm form, const Sqrt2Scalar& factor) {
  form.constant *= factor;
  form.haar *= factor;
  for (auto& [l, c] : form.inner) c *= factor;
  return form;
}

}  // namespace

RestrictedShiftForm reflect_form(const RestrictedShiftForm& form) {
  RestrictedShiftForm out;
  out.k = reflect(form.k);
  out.constant = -form.constant;
  out.haar = form.haar;
  for (const auto& [l, c] : form.inner) out.inner.emplace(reflect(l), -c);
  return out;
}

RestrictedShiftForm restricted_indicator_shift(DyadicInterval i, DyadicInterval k) {
  const CaseClass cc = classify(i, k);
  if (cc == CaseClass::OppositeHalfLines) return zero_form(k);
  if (half_line(i) == HalfLineSign::negative)
    return reflect_form(restricted_indicator_shift(reflect(i), reflect(k)));

  const Sqrt2Scalar size_i{interval_size(i)};
  RestrictedShiftForm form = zero_form(k);
  switch (cc) {
    case CaseClass::Interior:
      form.constant = size_i * ancestor_sum(i, k, i);
      break;
    case CaseClass::Equal:
    case CaseClass::Covering: {
      const DyadicInterval khat = parent(k);
      form.constant = size_i * ancestor_sum(i, k, khat);
      form.haar = size_i * Sqrt2Scalar(child_sign(k)) * haar_value(khat, i) *
                  Sqrt2Scalar::pow2_half(-1);
      for (DyadicInterval l = parent(i); contains(k, l); l = parent(l))
        form.inner.emplace(l, size_i * haar_value(l, i));
      break;
    }
    case CaseClass::GapSameHalfLine: {
      // Ancestors of I between I and the meet are disjoint from K and vanish;
      // everything at or above the meet is an observation-2 constant, except
      // the parent of K when the meet IS the parent, which contributes h_K.
      const DyadicInterval lmeet = *meet(i, k);
      form.constant = size_i * ancestor_sum(i, k, parent(k));
      if (lmeet == parent(k))
        form.haar = size_i * Sqrt2Scalar(child_sign(k)) * haar_value(lmeet, i) *
                    Sqrt2Scalar::pow2_half(-1);
      break;
    }
    default:
      break;
  }
  return form;
}

Sqrt2Scalar interior_mean_constant(DyadicInterval i, DyadicInterval k) {
  if (!strictly_contains(i, k))
    throw std::invalid_argument("interior_mean_constant: K must be strictly inside I");
  if (half_line(i) == HalfLineSign::negative)
    return -interior_mean_constant(reflect(i), reflect(k));
  return Sqrt2Scalar(interval_size(i)) * ancestor_sum(i, k, i);
}

RestrictedShiftForm restricted_shift(const DyadicFunction& f, DyadicInterval k) {
  const DyadicInterval i = f.root();
  if (half_line(i) != half_line(k)) return zero_form(k);

  RestrictedShiftForm form = scaled(restricted_indicator_shift(i, k), f.mean());
  form.k = k;
  const DyadicInterval khat = parent(k);
  const Sqrt2Scalar inv_sqrt2 = Sqrt2Scalar::pow2_half(-1);
  for (const auto& [j, c] : f.coefficients()) {
    if (contains(k, j)) {
      // Full shifted atom lands inside K.
      auto [it, inserted] = form.inner.emplace(j, c);
      if (!inserted) it->second += c;
    } else if (j == khat) {
      form.haar += c * Sqrt2Scalar(child_sign(k)) * inv_sqrt2;
    } else if (strictly_contains(j, khat)) {
      form.constant += c * shift_haar_value(j, k);
    }
    // Remaining case: J disjoint from K, contributes nothing.
  }
  for (auto it = form.inner.begin(); it != form.inner.end();)
    it = it->second.is_zero() ? form.inner.erase(it) : std::next(it);
  return form;
}

Sqrt2Scalar interior_norm2(const DyadicFunction& f, DyadicInterval k) {
  const DyadicInterval i = f.root();
  if (!strictly_contains(i, k))
    throw std::invalid_argument("interior_norm2: K must be strictly inside root");
  const DyadicInterval khat = parent(k);
  Sqrt2Scalar bracket = f.mean() * interior_mean_constant(i, k);
  Sqrt2Scalar tail_sum = 0;  // Σ_{J ⊆ K} |f̂(J)|²
  for (const auto& [j, c] : f.coefficients()) {
    if (contains(k, j))
      tail_sum += c.squared();
    else if (strictly_contains(j, khat))
      bracket += c * shift_haar_value(j, k);
  }
  const Sqrt2Scalar half(Rational(1, 2));
  return bracket.squared() * Sqrt2Scalar(interval_size(k)) +
         f.coefficient(khat).squared() * half + tail_sum;
}

DyadicFunction shift_zero_mean(const DyadicFunction& f) {
  if (!f.mean().is_zero())
    throw std::invalid_argument("shift_zero_mean: nonzero mean part");
  DyadicFunction out(f.root(), f.depth() + 1);
  const Sqrt2Scalar inv_sqrt2 = Sqrt2Scalar::pow2_half(-1);
  for (const auto& [j, c] : f.coefficients()) {
    const Sqrt2Scalar step = c * inv_sqrt2;
    out.add_coefficient(child_plus(j), step);
    out.add_coefficient(child_minus(j), -step);
  }
  return out;
}

int min_synthesis_depth(const RestrictedShiftForm& form) {
  std::int64_t depth = form.haar.is_zero() ? 0 : 1;  // h_K needs one level
  for (const auto& [l, c] : form.inner)
    depth = std::max(depth, form.k.scale - l.scale + 2);
  return static_cast<int>(depth);
}

LeafVector synthesize_form(const RestrictedShiftForm& form, int depth) {
  if (depth < min_synthesis_depth(form))
    throw std::invalid_argument("synthesize_form: depth too shallow for stored atoms");
  LeafVector out;
  out.root = form.k;
  out.depth = depth;
  const std::size_t n = std::size_t{1} << depth;
  out.values.assign(n, Sqrt2Scalar(0));
  for (std::size_t j = 0; j < n; ++j) {
    const DyadicInterval leaf = out.leaf(j);
    Sqrt2Scalar v = form.constant;
    if (!form.haar.is_zero()) v += form.haar * haar_value(form.k, leaf);
    for (const auto& [l, c] : form.inner)
      if (contains(l, leaf)) v += c * shift_haar_value(l, leaf);
    out.values[j] = std::move(v);
  }
  return out;
}

LeafVector shift_full(const DyadicFunction& f, DyadicInterval window) {
  const std::int64_t out_leaf_scale = f.root().scale - f.depth() - 1;
  const int depth = static_cast<int>(std::max<std::int64_t>(window.scale - out_leaf_scale, 0));
  if (half_line(f.root()) != half_line(window)) {
    LeafVector zero;
    zero.root = window;
    zero.depth = depth;
    zero.values.assign(std::size_t{1} << depth, Sqrt2Scalar(0));
    return zero;
  }
  const RestrictedShiftForm form = restricted_shift(f, window);
  return synthesize_form(form, std::max(depth, min_synthesis_depth(form)));
}

}  // namespace haarshift
