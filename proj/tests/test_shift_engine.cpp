#include <doctest.h>

#include "test_helpers.hpp"

using namespace haarshift;
using testutil::leaf_inner;
using testutil::random_function;
using testutil::random_interval;
using testutil::truncated_ancestor_sum;

namespace {

std::vector<double> to_doubles(const LeafVector& v) {
  std::vector<double> out(v.values.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = v.values[j].to_double();
  return out;
}

// Random pair with K strictly inside I.
std::pair<DyadicInterval, DyadicInterval> random_interior(std::mt19937_64& rng,
                                                          int max_rel = 4) {
  const auto i = testutil::random_interval(rng, -2, 4, 20);
  std::uniform_int_distribution<int> rel(1, max_rel);
  const int r = rel(rng);
  std::uniform_int_distribution<std::int64_t> pos(0, (std::int64_t{1} << r) - 1);
  return {i, DyadicInterval{i.scale - r, (i.index << r) + pos(rng)}};
}

}  // namespace

TEST_CASE("classify follows the set relations") {
  CHECK(classify({0, 0}, {2, 0}) == CaseClass::Covering);
  CHECK(classify({2, 0}, {0, 3}) == CaseClass::Interior);
  CHECK(classify({1, 1}, {0, 0}) == CaseClass::GapSameHalfLine);
  CHECK(classify({0, 0}, {0, 0}) == CaseClass::Equal);
  CHECK(classify({0, 0}, {0, -1}) == CaseClass::OppositeHalfLines);
}

TEST_CASE("shift of a single haar atom") {
  const auto shifted = shift_zero_mean(haar_atom({1, 0}));
  const auto inv_sqrt2 = Sqrt2Scalar::pow2_half(-1);
  CHECK(shifted.coefficient({0, 1}) == inv_sqrt2);
  CHECK(shifted.coefficient({0, 0}) == -inv_sqrt2);
  CHECK(shifted.mean().is_zero());
  CHECK(shifted.depth() == 2);
  CHECK_THROWS_AS(shift_zero_mean(indicator({0, 0})), std::invalid_argument);
}

TEST_CASE("shift preserves the norm of zero-mean functions") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 40; ++t) {
    const auto f =
        random_function(rng, random_interval(rng, -2, 2, 30), 6, /*zero_mean=*/true);
    CHECK(norm2(shift_zero_mean(f)) == norm2(f));
  }
}

TEST_CASE("shift acts linearly and matches the truncated oracle on zero-mean input") {
  DyadicFunction f({1, 0}, 2);
  f.set_coefficient({0, 0}, 1);
  f.set_coefficient({1, 0}, 1);
  const auto atoms = shift_zero_mean(f);
  const auto via_sum_a = shift_zero_mean(haar_atom({0, 0}));
  const auto via_sum_b = shift_zero_mean(haar_atom({1, 0}));
  const auto lhs = synthesize(atoms);
  DyadicFunction sum({1, 0}, 3);
  for (const auto& g : {via_sum_a, via_sum_b})
    for (const auto& [j, c] : g.coefficients()) sum.add_coefficient(j, c);
  CHECK(lhs.values == synthesize(sum).values);

  // zero-mean input: the oracle is exact at any ancestor height
  const auto leaves = synthesize(f);
  const auto got = oracle::restricted_values({1, 0}, 2, to_doubles(leaves), {1, 0}, 3, 4);
  const auto expect = to_doubles(lhs);
  REQUIRE(got.size() == expect.size());
  for (std::size_t j = 0; j < got.size(); ++j)
    CHECK(std::abs(got[j] - expect[j]) <= 1e-14);
}

TEST_CASE("ancestor_sum walk equals the directly truncated series") {
  // prerequisite for trusting the closed-form tail
  struct Config {
    DyadicInterval i, k, base;
  };
  const std::vector<Config> configs = {
      {{0, 0}, {0, 3}, {1, 1}},    // gap, base = parent(K)
      {{0, 2}, {0, 1}, {1, 0}},    // gap, base = parent(K)
      {{0, 5}, {0, 6}, {1, 2}},    // gap inside [4,8)
      {{2, 0}, {0, 3}, {2, 0}},    // interior, base = I
      {{2, 0}, {0, 1}, {2, 0}},    // interior, base = I
      {{0, 0}, {0, 0}, {1, 0}},    // equal, base = parent(I)
      {{0, 0}, {0, 1}, {1, 0}},    // covering-style base
      {{0, 9}, {0, 12}, {2, 2}},   // gap-deep, base = child of the meet
  };
  for (const auto& cfg : configs) {
    const auto closed = ancestor_sum(cfg.i, cfg.k, cfg.base);
    REQUIRE(closed.is_rational());
    const Rational truncated = truncated_ancestor_sum(cfg.i, cfg.k, cfg.base, 40);
    CHECK(abs(closed.rational_part() - truncated) <= pow2(-38));
  }

  // catalogued values
  CHECK(ancestor_sum({0, 0}, {0, 3}, {1, 1}) == Sqrt2Scalar(Rational(-1, 4)));
  CHECK(ancestor_sum({0, 2}, {0, 1}, {1, 0}) == Sqrt2Scalar(Rational(-1, 2)));
  // pair inside the non-anchored child of its apex: the sum above the apex cancels
  CHECK(ancestor_sum({0, 5}, {0, 6}, {3, 0}).is_zero());

  CHECK_THROWS_AS(ancestor_sum({0, 0}, {0, -1}, {1, 0}), std::invalid_argument);
  // first summand would be the parent of K, which is not constant on K
  CHECK_THROWS_AS(ancestor_sum({0, 0}, {0, 1}, {0, 0}), std::invalid_argument);
}

TEST_CASE("restricted indicator shift: catalogued exact forms") {
  // interior: K inside the lower child of a zero-anchored I
  const auto interior = restricted_indicator_shift({2, 0}, {1, 0});
  CHECK(interior.constant == Sqrt2Scalar(-1));
  CHECK(interior.haar.is_zero());
  CHECK(interior.inner.empty());

  // gap with the catalogued value -1/2
  const auto gap1 = restricted_indicator_shift({0, 2}, {0, 1});
  CHECK(gap1.constant == Sqrt2Scalar(Rational(-1, 2)));
  CHECK(gap1.is_zero() == false);

  // gap with the catalogued value -1/4
  const auto gap2 = restricted_indicator_shift({0, 0}, {0, 3});
  CHECK(gap2.constant == Sqrt2Scalar(Rational(-1, 4)));
  CHECK(gap2.haar.is_zero());
  CHECK(gap2.inner.empty());

  // covering: full three-part form
  const auto cov = restricted_indicator_shift({0, 0}, {1, 0});
  CHECK(cov.constant == Sqrt2Scalar(Rational(-1, 4)));
  CHECK(cov.haar == Sqrt2Scalar(Rational(0), Rational(1, 4)));
  REQUIRE(cov.inner.size() == 1);
  CHECK(cov.inner.at({1, 0}) == Sqrt2Scalar(Rational(0), Rational(-1, 2)));
  CHECK(cov.norm2() == Sqrt2Scalar(Rational(3, 4)));

  // self-restriction: constant and half-height haar part
  const auto self_anchored = restricted_indicator_shift({0, 0}, {0, 0});
  CHECK(self_anchored.constant == Sqrt2Scalar(Rational(-1, 2)));
  CHECK(self_anchored.haar == Sqrt2Scalar(Rational(1, 2)));
  const auto self_shifted = restricted_indicator_shift({0, 1}, {0, 1});
  CHECK(self_shifted.constant.is_zero());
  CHECK(self_shifted.haar == Sqrt2Scalar(Rational(1, 2)));

  // opposite half-lines vanish identically
  CHECK(restricted_indicator_shift({0, 0}, {3, -1}).is_zero());
  CHECK(restricted_indicator_shift({2, -1}, {0, 5}).is_zero());
}

TEST_CASE("the three parts of a form are mutually orthogonal at leaf level") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 30; ++t) {
    auto i = random_interval(rng, -2, 2, 10);
    DyadicInterval k = i;
    std::uniform_int_distribution<int> up(1, 3);
    for (int u = up(rng); u-- > 0;) k = parent(k);
    const auto form = restricted_indicator_shift(i, k);
    const int depth = std::max(min_synthesis_depth(form), 1);

    RestrictedShiftForm constant_part{form.k, form.constant, 0, {}};
    RestrictedShiftForm haar_part{form.k, 0, form.haar, {}};
    RestrictedShiftForm inner_part{form.k, 0, 0, form.inner};
    const auto a = synthesize_form(constant_part, depth);
    const auto b = synthesize_form(haar_part, depth);
    const auto c = synthesize_form(inner_part, depth);
    CHECK(leaf_inner(a, b).is_zero());
    CHECK(leaf_inner(a, c).is_zero());
    CHECK(leaf_inner(b, c).is_zero());
    // orthogonality makes the norm identity exact
    const auto whole = synthesize_form(form, depth);
    CHECK(leaf_inner(whole, whole) == form.norm2());
  }
}

TEST_CASE("covering bound holds exactly over a small universe") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 200; ++t) {
    const auto i = random_interval(rng, -3, 3, 40);
    DyadicInterval k = i;
    std::uniform_int_distribution<int> up(0, 4);
    for (int u = up(rng); u-- > 0;) k = parent(k);
    const auto n2 = restricted_indicator_shift(i, k).norm2();
    const Sqrt2Scalar size_i{interval_size(i)};
    const Sqrt2Scalar bound =
        Sqrt2Scalar(interval_size(i) * (1 - Rational(3, 4) * interval_size(i) / interval_size(k)));
    CHECK(n2 >= bound);
    CHECK(n2 <= size_i);
  }
}

TEST_CASE("gap constants are bounded by 1/2 and scale as |I||K|/|meet|^2") {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 200; ++t) {
    const auto i = random_interval(rng, -3, 3, 40, /*mirrored=*/false);
    auto k = random_interval(rng, -3, 3, 40, /*mirrored=*/false);
    if (classify(i, k) != CaseClass::GapSameHalfLine) continue;
    const auto rep = restricted_indicator_shift(i, k);
    const Sqrt2Scalar constant_norm = rep.norm2();
    CHECK(constant_norm * Sqrt2Scalar(2) <= Sqrt2Scalar(interval_size(i)));
  }
}

TEST_CASE("gap case is rank one: only the mean survives") {
  std::mt19937_64 rng(45);
  for (int t = 0; t < 60; ++t) {
    const auto i = random_interval(rng, -2, 2, 20, false);
    auto k = random_interval(rng, -2, 2, 20, false);
    const auto cc = classify(i, k);
    if (cc != CaseClass::GapSameHalfLine && cc != CaseClass::OppositeHalfLines) continue;
    const auto f = random_function(rng, i, 4);
    const auto form = restricted_shift(f, k);
    const auto base = restricted_indicator_shift(i, k);
    CHECK(form.constant == f.mean() * base.constant);
    CHECK(form.haar == f.mean() * base.haar);
    CHECK(form.inner.empty());

    auto g = random_function(rng, i, 4, /*zero_mean=*/true);
    CHECK(restricted_shift(g, k).is_zero());
  }
}

TEST_CASE("zero-mean functions are invisible outside their support") {
  const auto w = zero_mean_gap_witness({0, 0});
  CHECK(norm2(w) == Sqrt2Scalar(1));
  CHECK(restricted_shift(w, {0, 1}).is_zero());
  CHECK(restricted_shift(w, {1, 1}).is_zero());
}

TEST_CASE("interior norms agree along both computation paths") {
  std::mt19937_64 rng(46);
  for (int t = 0; t < 80; ++t) {
    const auto [i, k] = random_interior(rng);
    const int depth = static_cast<int>(i.scale - k.scale) + 1;
    const auto f = random_function(rng, i, depth);
    const auto form = restricted_shift(f, k);
    CHECK(interior_norm2(f, k) == form.norm2());
    const auto leaves = synthesize_form(form, std::max(1, min_synthesis_depth(form)));
    CHECK(leaf_inner(leaves, leaves) == form.norm2());
  }
}

TEST_CASE("covering norm identity: mean part plus coefficient energy") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 60; ++t) {
    const auto i = random_interval(rng, -2, 2, 20);
    DyadicInterval k = i;
    std::uniform_int_distribution<int> up(1, 3);
    for (int u = up(rng); u-- > 0;) k = parent(k);
    const auto f = random_function(rng, i, 3);
    Sqrt2Scalar coeff_energy = 0;
    for (const auto& [j, c] : f.coefficients()) coeff_energy += c.squared();
    const auto expected =
        f.mean().squared() * restricted_indicator_shift(i, k).norm2() + coeff_energy;
    CHECK(restricted_shift(f, k).norm2() == expected);
  }
}

TEST_CASE("odd symmetry relates reflected pairs") {
  std::mt19937_64 rng(48);
  for (int t = 0; t < 80; ++t) {
    const auto i = random_interval(rng, -2, 3, 30, false);
    const auto k = random_interval(rng, -2, 3, 30, false);
    const auto form = restricted_indicator_shift(i, k);
    const auto mirrored = restricted_indicator_shift(reflect(i), reflect(k));
    const int depth = std::max({min_synthesis_depth(form), min_synthesis_depth(mirrored), 1});
    const auto a = synthesize_form(form, depth);
    const auto b = synthesize_form(mirrored, depth);
    REQUIRE(a.values.size() == b.values.size());
    for (std::size_t j = 0; j < a.values.size(); ++j)
      CHECK(b.values[j] == -a.values[a.values.size() - 1 - j]);
  }
}

TEST_CASE("restricted_shift spot values against the independent oracle") {
  std::mt19937_64 rng(49);
  const double bound = std::ldexp(1.0, 4 - 24);
  for (int t = 0; t < 25; ++t) {
    const auto i = random_interval(rng, -1, 2, 6);
    const auto k = random_interval(rng, -1, 2, 6);
    const int depth = 2;
    const auto f = random_function(rng, i, depth, false, /*allow_sqrt2=*/false);
    const auto leaves = synthesize(f);
    const std::int64_t out_leaf = i.scale - depth - 1;
    const int out_depth = static_cast<int>(std::max<std::int64_t>(k.scale - out_leaf, 0));
    const auto form = restricted_shift(f, k);
    const auto exact =
        synthesize_form(form, std::max(out_depth, min_synthesis_depth(form)));
    const auto approx =
        oracle::restricted_values(i, depth, to_doubles(leaves), k, out_depth, 24);
    const std::size_t ratio = exact.values.size() / approx.size();
    for (std::size_t r = 0; r < approx.size(); ++r)
      for (std::size_t s = 0; s < ratio; ++s)
        CHECK(std::abs(approx[r] - exact.values[r * ratio + s].to_double()) <=
              bound * 16);
  }
}

TEST_CASE("shift_full tiles a window exactly") {
  // shifting a haar atom over its own interval reproduces the shifted atom
  const auto h = haar_atom({1, 0});
  const auto full = shift_full(h, {1, 0});
  const auto expected = synthesize(shift_zero_mean(h));
  CHECK(full.values == expected.values);

  // disjoint half-line gives the zero function
  const auto zero = shift_full(indicator({0, 0}), {1, -1});
  for (const auto& v : zero.values) CHECK(v.is_zero());

  // window beside the support carries the gap constant
  const auto beside = shift_full(indicator({0, 0}), {0, 1});
  const auto form = restricted_shift(indicator({0, 0}), {0, 1});
  const auto direct = synthesize_form(form, beside.depth);
  CHECK(beside.values == direct.values);
}

TEST_CASE("extremal interior function is annihilated in the catalogued example") {
  const auto f = extremal_interior({2, 0}, {0, 0});
  CHECK(norm2(f) == Sqrt2Scalar(2));
  CHECK(restricted_shift(f, {0, 0}).norm2().is_zero());
  CHECK(interior_norm2(f, {0, 0}).is_zero());
}
