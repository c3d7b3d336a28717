#include <doctest.h>

#include "test_helpers.hpp"

using namespace haarshift;
using testutil::leaf_inner;
using testutil::random_function;
using testutil::random_interval;
using testutil::random_scalar;

namespace {

LeafVector make_leaves(DyadicInterval root, std::vector<Sqrt2Scalar> values) {
  LeafVector v;
  v.root = root;
  v.depth = 0;
  while ((std::size_t{1} << v.depth) < values.size()) ++v.depth;
  v.values = std::move(values);
  return v;
}

}  // namespace

TEST_CASE("analyze: constants, a single atom, a two-point transform") {
  const auto constant = analyze(make_leaves({2, 0}, {3, 3, 3, 3}));
  CHECK(constant.mean() == Sqrt2Scalar(3));
  CHECK(constant.coefficients().empty());

  const auto atom = analyze(make_leaves({0, 0}, {-1, 1}));
  CHECK(atom.mean().is_zero());
  CHECK(atom.coefficient({0, 0}) == Sqrt2Scalar(1));

  const auto two = analyze(make_leaves({1, 0}, {0, Sqrt2Scalar::sqrt2()}));
  CHECK(two.mean() == Sqrt2Scalar(Rational(0), Rational(1, 2)));
  CHECK(two.coefficient({1, 0}) == Sqrt2Scalar(1));
}

TEST_CASE("synthesize inverts analyze exactly") {
  DyadicFunction constant({1, 0}, 2, 1);
  const auto leaves = synthesize(constant);
  for (const auto& v : leaves.values) CHECK(v == Sqrt2Scalar(1));

  const auto haar = synthesize(haar_atom({0, 0}));
  CHECK(haar.values == std::vector<Sqrt2Scalar>{-1, 1});

  std::mt19937_64 rng(31);
  for (int t = 0; t < 60; ++t) {
    const auto root = random_interval(rng, -3, 3, 40);
    const auto f = random_function(rng, root, 6);
    CHECK(analyze(synthesize(f)) == f);
  }
}

TEST_CASE("norm2 matches the leaf-level integral") {
  CHECK(norm2(indicator({1, 0})) == Sqrt2Scalar(2));
  CHECK(norm2(haar_atom({5, -7})) == Sqrt2Scalar(1));
  CHECK(norm2(embed(indicator({1, 1}), {2, 0}, 1)) == Sqrt2Scalar(2));

  std::mt19937_64 rng(32);
  for (int t = 0; t < 60; ++t) {
    const auto f = random_function(rng, random_interval(rng, -3, 3, 40), 5);
    const auto leaves = synthesize(f);
    CHECK(norm2(f) == leaf_inner(leaves, leaves));
  }
}

TEST_CASE("inner products: orthonormality and cross-root embedding") {
  // Haar atoms over a depth-4 tree are orthonormal
  const DyadicInterval root{0, 0};
  std::vector<DyadicInterval> nodes;
  for (int lvl = 0; lvl < 4; ++lvl)
    for (std::int64_t pos = 0; pos < (1 << lvl); ++pos)
      nodes.push_back({root.scale - lvl, pos});
  for (const auto& a : nodes)
    for (const auto& b : nodes) {
      const auto ip = inner_product(haar_atom(a), haar_atom(b));
      CHECK(ip == (a == b ? Sqrt2Scalar(1) : Sqrt2Scalar(0)));
    }

  CHECK(inner_product(indicator({2, 0}), haar_atom({1, 1})).is_zero());
  CHECK(inner_product(indicator({0, 0}), indicator({1, 0})) == Sqrt2Scalar(1));
  CHECK_THROWS_AS(inner_product(indicator({0, 0}), indicator({0, -1})),
                  std::invalid_argument);
}

TEST_CASE("Parseval: coefficient-space inner equals the leaf integral") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 50; ++t) {
    const auto root = random_interval(rng, -2, 2, 30);
    const auto f = random_function(rng, root, 5);
    const auto g = random_function(rng, root, 5);
    CHECK(inner_product(f, g) == leaf_inner(synthesize(f), synthesize(g)));
    CHECK(inner_product(f, g) == inner_product(g, f));
    CHECK(inner_product(f, f) == norm2(f));
  }
}

TEST_CASE("embed preserves the function and its norm") {
  const auto small = indicator({0, 0});
  const auto embedded = embed(small, {2, 0}, 2);
  CHECK(synthesize(embedded).values ==
        std::vector<Sqrt2Scalar>{1, 0, 0, 0});
  CHECK_THROWS_AS(embed(small, {2, 0}, 1), std::invalid_argument);

  std::mt19937_64 rng(34);
  for (int t = 0; t < 60; ++t) {
    auto root = random_interval(rng, -2, 2, 30);
    const auto f = random_function(rng, root, 3);
    DyadicInterval big = root;
    for (int up = 0; up < 3; ++up) big = parent(big);
    const auto lifted = embed(f, big, 3 + 3);
    CHECK(norm2(lifted) == norm2(f));
    CHECK(restrict(lifted, root) == f);  // embedding then restricting back
    CHECK(mean(lifted) * Sqrt2Scalar(interval_size(big)) ==
          mean(f) * Sqrt2Scalar(interval_size(root)));
  }
}

TEST_CASE("restrict is the leafwise product with an indicator") {
  const auto ind = embed(indicator({2, 0}), {2, 0}, 1);
  CHECK(restrict(ind, {1, 0}) == indicator({1, 0}));

  const auto h = haar_atom({1, 0});
  const auto cut = restrict(h, {0, 1});
  CHECK(cut.mean() == Sqrt2Scalar::pow2_half(-1));
  CHECK(cut.coefficients().empty());

  CHECK_THROWS_AS(restrict(indicator({1, 0}), {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(restrict(haar_atom({1, 0}), {1, 1}), std::invalid_argument);

  std::mt19937_64 rng(35);
  for (int t = 0; t < 60; ++t) {
    const auto root = random_interval(rng, -2, 2, 30);
    const auto f = random_function(rng, root, 4);
    std::uniform_int_distribution<int> rel(0, 3);
    const int r = rel(rng);
    std::uniform_int_distribution<std::int64_t> pos(0, (1 << r) - 1);
    const DyadicInterval k{root.scale - r, (root.index << r) + pos(rng)};
    const auto cut2 = restrict(f, k);
    CHECK(norm2(cut2) <= norm2(f));
  }
}

TEST_CASE("mean extraction via the indicator pairing") {
  std::mt19937_64 rng(36);
  for (int t = 0; t < 50; ++t) {
    const auto root = random_interval(rng, -2, 2, 30);
    const auto f = random_function(rng, root, 4);
    CHECK(mean(f) ==
          inner_product(f, indicator(root)) * Sqrt2Scalar(interval_size(root)).inverse());
  }
}

TEST_CASE("cascade stays within the operation budget") {
  std::mt19937_64 rng(37);
  for (int depth : {4, 6, 8}) {
    const auto f = random_function(rng, {0, 0}, depth);
    std::size_t ops = 0;
    analyze_counting(synthesize(f), ops);
    CHECK(ops <= 4 * (std::size_t{1} << depth));
  }
}

TEST_CASE("structural invariants of the coefficient tree") {
  DyadicFunction f({1, 0}, 2);
  CHECK_THROWS_AS(f.set_coefficient({1, 1}, 1), std::invalid_argument);   // outside root
  CHECK_THROWS_AS(f.set_coefficient({-2, 0}, 1), std::invalid_argument);  // below leaves
  f.set_coefficient({0, 1}, 1);
  f.set_coefficient({0, 1}, 0);  // exact zero removes the entry
  CHECK(f.coefficients().empty());
}
