#include "haarshift/dyadic_function.hpp"

#include <cassert>
#include <stdexcept>

namespace haarshift {

DyadicFunction::DyadicFunction(DyadicInterval root, int depth, Sqrt2Scalar mean)
    : root_(root), depth_(depth), mean_(std::move(mean)) {
  if (depth < 0) throw std::invalid_argument("DyadicFunction: negative depth");
}

void DyadicFunction::set_coefficient(DyadicInterval j, Sqrt2Scalar value) {
  if (!contains(root_, j) || j.scale < root_.scale - depth_ + 1)
    throw std::invalid_argument("DyadicFunction: coefficient outside the tree");
  if (value.is_zero())
    coeffs_.erase(j);
  else
    coeffs_[j] = std::move(value);
}

void DyadicFunction::add_coefficient(DyadicInterval j, const Sqrt2Scalar& value) {
  set_coefficient(j, coefficient(j) + value);
}

Sqrt2Scalar DyadicFunction::coefficient(DyadicInterval j) const {
  const auto it = coeffs_.find(j);
  return it == coeffs_.end() ? Sqrt2Scalar(0) : it->second;
}

DyadicFunction analyze_counting(const LeafVector& v, std::size_t& field_ops) {
  const std::size_t n = std::size_t{1} << v.depth;
  if (v.values.size() != n)
    throw std::invalid_argument("analyze: leaf count must be 2^depth");
  DyadicFunction f(v.root, v.depth);
  std::vector<Sqrt2Scalar> level = v.values;
  const Sqrt2Scalar half(Rational(1, 2));
  for (int d = v.depth; d > 0; --d) {
    const std::int64_t node_scale = v.root.scale - d + 1;
    std::vector<Sqrt2Scalar> up(level.size() / 2);
    for (std::size_t j = 0; j < up.size(); ++j) {
      const Sqrt2Scalar& lo = level[2 * j];
      const Sqrt2Scalar& hi = level[2 * j + 1];
      // <f, h_J> = (hi - lo) * (child size) / sqrt(|J|) = (hi - lo) * 2^{(scale-2)/2}
      Sqrt2Scalar coef = (hi - lo) * Sqrt2Scalar::pow2_half(node_scale - 2);
      up[j] = (lo + hi) * half;
      field_ops += 4;
      DyadicInterval node{node_scale, (v.root.index << (d - 1)) + static_cast<std::int64_t>(j)};
      if (!coef.is_zero()) f.set_coefficient(node, std::move(coef));
    }
    level = std::move(up);
  }
  f.set_mean(level[0]);
  return f;
}

DyadicFunction analyze(const LeafVector& v) {
  std::size_t ops = 0;
  return analyze_counting(v, ops);
}

LeafVector synthesize(const DyadicFunction& f) {
  LeafVector out;
  out.root = f.root();
  out.depth = f.depth();
  std::vector<Sqrt2Scalar> level{f.mean()};
  for (int d = 0; d < f.depth(); ++d) {
    const std::int64_t node_scale = f.root().scale - d;
    std::vector<Sqrt2Scalar> down(level.size() * 2);
    for (std::size_t j = 0; j < level.size(); ++j) {
      DyadicInterval node{node_scale, (f.root().index << d) + static_cast<std::int64_t>(j)};
      const Sqrt2Scalar c = f.coefficient(node);
      const Sqrt2Scalar step = c * Sqrt2Scalar::pow2_half(-node_scale);
      down[2 * j] = level[j] - step;
      down[2 * j + 1] = level[j] + step;
    }
    level = std::move(down);
  }
  out.values = std::move(level);
  return out;
}

Sqrt2Scalar mean(const DyadicFunction& f) { return f.mean(); }

Sqrt2Scalar norm2(const DyadicFunction& f) {
  Sqrt2Scalar total = f.mean().squared() * Sqrt2Scalar(interval_size(f.root()));
  for (const auto& [j, c] : f.coefficients()) total += c.squared();
  return total;
}

Sqrt2Scalar inner_product(const DyadicFunction& f, const DyadicFunction& g) {
  if (f.root() == g.root()) {
    Sqrt2Scalar total = f.mean() * g.mean() * Sqrt2Scalar(interval_size(f.root()));
    const auto& fc = f.coefficients();
    const auto& gc = g.coefficients();
    const auto& small = fc.size() <= gc.size() ? fc : gc;
    const auto& large = fc.size() <= gc.size() ? gc : fc;
    for (const auto& [j, c] : small) {
      const auto it = large.find(j);
      if (it != large.end()) total += c * it->second;
    }
    return total;
  }
  const auto common = meet(f.root(), g.root());
  if (!common) throw std::invalid_argument("inner_product: no common dyadic embedding");
  const int depth_f = static_cast<int>(common->scale - f.root().scale) + f.depth();
  const int depth_g = static_cast<int>(common->scale - g.root().scale) + g.depth();
  const int depth = std::max(depth_f, depth_g);
  return inner_product(embed(f, *common, depth), embed(g, *common, depth));
}

DyadicFunction embed(const DyadicFunction& f, DyadicInterval new_root, int new_depth) {
  if (!contains(new_root, f.root())) throw std::invalid_argument("embed: root not enlarged");
  const std::int64_t leaf = f.root().scale - f.depth();
  if (new_root.scale - new_depth > leaf) throw std::invalid_argument("embed: insufficient depth");
  if (new_root == f.root()) {
    DyadicFunction out(new_root, new_depth, f.mean());
    for (const auto& [j, c] : f.coefficients()) out.set_coefficient(j, c);
    return out;
  }
  // 1_I = (|I|/|R|) 1_R + |I| Σ_{I ⊊ L ⊆ R} h_L(I) h_L, so the old mean turns
  // into a mean scaled by |I|/|R| plus indicator coefficients along the chain.
  const Rational size_ratio = interval_size(f.root()) / interval_size(new_root);
  DyadicFunction out(new_root, new_depth, f.mean() * Sqrt2Scalar(size_ratio));
  const Sqrt2Scalar mass = f.mean() * Sqrt2Scalar(interval_size(f.root()));
  DyadicInterval l = parent(f.root());
  while (true) {
    out.set_coefficient(l, mass * haar_value(l, f.root()));
    if (l == new_root) break;
    l = parent(l);
  }
  for (const auto& [j, c] : f.coefficients()) out.set_coefficient(j, c);
  return out;
}

DyadicFunction restrict(const DyadicFunction& f, DyadicInterval k) {
  if (!contains(f.root(), k)) throw std::invalid_argument("restrict: K outside root");
  const std::int64_t leaf = f.root().scale - f.depth();
  if (k.scale < leaf) throw std::invalid_argument("restrict: K below leaf scale");
  const LeafVector leaves = synthesize(f);
  const int new_depth = static_cast<int>(k.scale - leaf);
  LeafVector cut;
  cut.root = k;
  cut.depth = new_depth;
  const std::size_t n = std::size_t{1} << new_depth;
  const std::size_t offset =
      static_cast<std::size_t>((k.index << new_depth) - (f.root().index << f.depth()));
  cut.values.assign(leaves.values.begin() + static_cast<std::ptrdiff_t>(offset),
                    leaves.values.begin() + static_cast<std::ptrdiff_t>(offset + n));
  return analyze(cut);
}

DyadicFunction haar_atom(DyadicInterval i) {
  DyadicFunction f(i, 1);
  f.set_coefficient(i, 1);
  return f;
}

DyadicFunction indicator(DyadicInterval i) { return DyadicFunction(i, 0, 1); }

}  // namespace haarshift
