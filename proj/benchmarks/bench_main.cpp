#include "haarshift/bounds_audit.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace haarshift;

namespace {

DyadicFunction make_function(int depth) {
  std::mt19937_64 rng(97);
  std::uniform_int_distribution<int> num(-8, 8);
  DyadicFunction f({0, 0}, depth, Sqrt2Scalar(Rational(num(rng), 3)));
  for (int lvl = 0; lvl < depth; ++lvl)
    for (std::int64_t pos = 0; pos < (std::int64_t{1} << lvl); ++pos)
      f.set_coefficient({-lvl, pos}, Sqrt2Scalar(Rational(num(rng), 5)));
  return f;
}

void BM_AnalyzeSynthesize(benchmark::State& state) {
  const auto f = make_function(static_cast<int>(state.range(0)));
  const auto leaves = synthesize(f);
  for (auto _ : state) {
    auto g = analyze(leaves);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_AnalyzeSynthesize)->Arg(6)->Arg(8)->Arg(10);

void BM_AncestorSum(benchmark::State& state) {
  const DyadicInterval i{0, 5}, k{0, 6}, base{1, 2};
  for (auto _ : state) {
    auto s = ancestor_sum(i, k, base);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_AncestorSum);

void BM_RestrictedIndicatorShift(benchmark::State& state) {
  const DyadicInterval i{-6, 1000000}, k{-6, 1000063};
  for (auto _ : state) {
    auto form = restricted_indicator_shift(i, k);
    benchmark::DoNotOptimize(form);
  }
}
BENCHMARK(BM_RestrictedIndicatorShift);

void BM_RestrictedShiftNorm(benchmark::State& state) {
  const auto f = make_function(static_cast<int>(state.range(0)));
  const DyadicInterval k{-2, 1};
  for (auto _ : state) {
    auto n2 = restricted_shift(f, k).norm2();
    benchmark::DoNotOptimize(n2);
  }
}
BENCHMARK(BM_RestrictedShiftNorm)->Arg(4)->Arg(6)->Arg(8);

void BM_OracleColumn(benchmark::State& state) {
  const int depth = 4;
  std::vector<double> leaves(1 << depth, 0.0);
  leaves[3] = 1.0;
  for (auto _ : state) {
    auto vals = oracle::restricted_values({0, 0}, depth, leaves, {2, 0}, 7,
                                          static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(vals);
  }
}
BENCHMARK(BM_OracleColumn)->Arg(16)->Arg(24)->Arg(32);

void BM_SmallestSingular(benchmark::State& state) {
  for (auto _ : state) {
    auto rep = oracle::smallest_singular({0, 0}, {2, 0}, static_cast<int>(state.range(0)),
                                         oracle::DomainConstraint::none);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_SmallestSingular)->Arg(3)->Arg(4)->Arg(5);

void BM_AuditClaims(benchmark::State& state) {
  const UniverseSpec universe{-2, 2, 7, 2};
  for (auto _ : state) {
    auto claims = audit_claims(universe, 3);
    benchmark::DoNotOptimize(claims);
  }
}
BENCHMARK(BM_AuditClaims);

}  // namespace

BENCHMARK_MAIN();
