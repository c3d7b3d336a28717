#pragma once

#include "haarshift/dyadic_interval.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace haarshift {

/// Piecewise-constant data: 2^depth values, the j-th constant on the j-th
/// leaf of root at scale root.scale - depth.
struct LeafVector {
  DyadicInterval root;
  int depth = 0;
  std::vector<Sqrt2Scalar> values;

  std::int64_t leaf_scale() const { return root.scale - depth; }
  DyadicInterval leaf(std::size_t j) const {
    return {leaf_scale(), (root.index << depth) + static_cast<std::int64_t>(j)};
  }
};

/// Function supported on a dyadic root interval, stored as mean plus finite
/// Haar spectrum; absent coefficient = zero. Coefficients live on J ⊆ root
/// with |J| ≥ 2^{root.scale - depth + 1}.
class DyadicFunction {
 public:
  using CoefficientMap = std::map<DyadicInterval, Sqrt2Scalar, CoarseFirst>;

  DyadicFunction() = default;
  DyadicFunction(DyadicInterval root, int depth, Sqrt2Scalar mean = 0);

  const DyadicInterval& root() const { return root_; }
  int depth() const { return depth_; }
  const Sqrt2Scalar& mean() const { return mean_; }
  const CoefficientMap& coefficients() const { return coeffs_; }

  void set_mean(Sqrt2Scalar m) { mean_ = std::move(m); }
  /// Validates the structural invariant (J ⊆ root, above leaf scale).
  void set_coefficient(DyadicInterval j, Sqrt2Scalar value);
  void add_coefficient(DyadicInterval j, const Sqrt2Scalar& value);
  Sqrt2Scalar coefficient(DyadicInterval j) const;

  bool operator==(const DyadicFunction& other) const = default;

 private:
  DyadicInterval root_;
  int depth_ = 0;
  Sqrt2Scalar mean_;
  CoefficientMap coeffs_;
};

/// Bottom-up pairwise cascade; exact, ≤ 4·2^D field operations.
DyadicFunction analyze(const LeafVector& v);
DyadicFunction analyze_counting(const LeafVector& v, std::size_t& field_ops);

/// Exact inverse of analyze (top-down cascade).
LeafVector synthesize(const DyadicFunction& f);

Sqrt2Scalar mean(const DyadicFunction& f);

/// ⟨f⟩²|I| + Σ|f̂(J)|², exact.
Sqrt2Scalar norm2(const DyadicFunction& f);

/// Exact inner product; roots must share a dyadic ancestor.
Sqrt2Scalar inner_product(const DyadicFunction& f, const DyadicFunction& g);

/// Same function viewed on a larger tree; norm2 preserved exactly.
DyadicFunction embed(const DyadicFunction& f, DyadicInterval new_root, int new_depth);

/// Leafwise product with 1_K, re-analyzed on root K. K must be a union of
/// leaves of f (scale(K) ≥ leaf scale) and lie inside the root.
DyadicFunction restrict(const DyadicFunction& f, DyadicInterval k);

/// h_I as a depth-1 function on root I.
DyadicFunction haar_atom(DyadicInterval i);
/// 1_I as a depth-0 function on root I.
DyadicFunction indicator(DyadicInterval i);

}  // namespace haarshift
