#pragma once

#include "haarshift/dyadic_function.hpp"

#include <cstdint>
#include <vector>

namespace haarshift {
namespace oracle {

/// Finite section of the Haar system: atoms h_J for J between the leaves of
/// `window` at `leaf_depth` and the `ancestor_height`-fold parent of the
/// window. The single missing direction is the top mean, whose influence on
/// a window decays like 2^{-ancestor_height}.
struct TruncatedSystem {
  DyadicInterval window;
  int leaf_depth = 0;
  int ancestor_height = 24;
};

/// Dense realization of f ↦ 1_W Ш f over the leaf atoms of the window.
/// Output leaves live one level below the input leaves (the shifted atoms of
/// the deepest coefficients are constant there and nowhere coarser).
struct DenseOperator {
  DyadicInterval window;
  int input_depth = 0;
  int ancestor_height = 0;
  std::size_t rows = 0;  // 2^{input_depth+1}
  std::size_t cols = 0;  // 2^{input_depth}
  std::vector<double> values;  // row-major; raw leaf values, not L2-weighted

  double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

std::size_t max_matrix_leaves();  // 4096 unless HAARSHIFT_MAX_MATRIX overrides

DenseOperator build_matrix(DyadicInterval window, int depth, int ancestor_height);
DenseOperator build_matrix(const TruncatedSystem& system);

/// Values of 1_K Ш f on the leaves of K at `out_depth`, by direct truncated
/// Haar expansion of f (floats; independent of the exact engine). f is given
/// as leaf values on root I at depth D.
std::vector<double> restricted_values(const DyadicInterval& root, int depth,
                                      const std::vector<double>& leaves,
                                      DyadicInterval k, int out_depth,
                                      int ancestor_height);

double restricted_norm(DyadicInterval i, DyadicInterval k, int depth,
                       int ancestor_height, const LeafVector& f);

enum class DomainConstraint { none, zero_mean };

struct SingularReport {
  double sigma_min = 0;
  double sigma_max = 0;
  int rank_numeric = 0;
  std::vector<double> singular_values;  // descending
};

/// Singular values of 1_K Ш restricted to functions supported on I at the
/// given leaf depth (orthonormal domain basis; L²-weighted rows). Dense
/// one-sided Jacobi, deterministic sweep order.
SingularReport smallest_singular(DyadicInterval i, DyadicInterval k, int depth,
                                 DomainConstraint constraint,
                                 int ancestor_height = 40);

struct ConvergenceRow {
  int ancestor_height = 0;
  double max_deviation = 0;
};

/// Max sup-norm deviation between the truncated oracle and the exact engine
/// over all leaf atoms of I at `depth`, per ancestor height.
std::vector<ConvergenceRow> convergence_study(DyadicInterval i, DyadicInterval k,
                                              const std::vector<int>& heights,
                                              int depth = 3);

/// Deterministic one-sided Jacobi on the columns of a row-major m×n matrix;
/// returns singular values in descending order.
std::vector<double> jacobi_singular_values(std::vector<double> matrix,
                                           std::size_t rows, std::size_t cols,
                                           double tol = 1e-14);

}  // namespace oracle
}  // namespace haarshift
