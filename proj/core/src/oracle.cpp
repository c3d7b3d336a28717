#include "haarshift/oracle.hpp"

#include "haarshift/shift_engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace haarshift {
namespace oracle {

namespace {

double pow2d(std::int64_t e) { return std::ldexp(1.0, static_cast<int>(e)); }

// Ancestor of x at the given coarser scale.
DyadicInterval ancestor_at(DyadicInterval x, std::int64_t scale) {
  return {scale, x.index >> (scale - x.scale)};
}

int sign_from_index(std::int64_t idx) { return (idx & 1) ? +1 : -1; }

// Value of the shifted atom of J at a point strictly below its grandchildren.
double shift_atom_value(DyadicInterval j, DyadicInterval x) {
  const int s = sign_from_index(index_at_scale(x, j.scale - 1));
  const int t = sign_from_index(index_at_scale(x, j.scale - 2));
  return s * t * pow2d(-j.scale) * std::sqrt(pow2d(j.scale));  // s*t*2^{-scale/2}
}

}  // namespace

std::size_t max_matrix_leaves() {
  if (const char* env = std::getenv("HAARSHIFT_MAX_MATRIX")) {
    const long v = std::atol(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 4096;
}

std::vector<double> restricted_values(const DyadicInterval& root, int depth,
                                      const std::vector<double>& leaves,
                                      DyadicInterval k, int out_depth,
                                      int ancestor_height) {
  if (leaves.size() != (std::size_t{1} << depth))
    throw std::invalid_argument("oracle: leaf count must be 2^depth");
  if (out_depth < 0) throw std::invalid_argument("oracle: negative output depth");

  // Haar cascade on the input leaves: coef_levels[l][pos] is the coefficient
  // of the node at scale root.scale - l. Level 0 is the root node itself.
  std::vector<std::vector<double>> coef_levels(depth);
  std::vector<double> level = leaves;
  double mean = 0;
  for (int d = depth; d > 0; --d) {
    const std::int64_t node_scale = root.scale - d + 1;
    std::vector<double> up(level.size() / 2);
    std::vector<double>& coefs = coef_levels[d - 1];
    coefs.resize(up.size());
    const double factor = std::sqrt(pow2d(node_scale - 2));
    for (std::size_t j = 0; j < up.size(); ++j) {
      coefs[j] = (level[2 * j + 1] - level[2 * j]) * factor;
      up[j] = 0.5 * (level[2 * j] + level[2 * j + 1]);
    }
    level = std::move(up);
  }
  mean = depth == 0 ? leaves[0] : level[0];

  const double mass = mean * pow2d(root.scale);  // ∫ f
  const std::int64_t cap_scale = root.scale + ancestor_height;
  const std::size_t n_out = std::size_t{1} << out_depth;
  std::vector<double> out(n_out, 0.0);
  for (std::size_t r = 0; r < n_out; ++r) {
    const DyadicInterval x{k.scale - out_depth,
                           (k.index << out_depth) + static_cast<std::int64_t>(r)};
    double v = 0;
    for (std::int64_t js = x.scale + 2; js <= cap_scale; ++js) {
      const DyadicInterval j = ancestor_at(x, js);
      double coef;
      if (js <= root.scale) {
        if (!contains(root, j)) continue;
        const int lvl = static_cast<int>(root.scale - js);
        if (lvl >= depth) continue;  // below coefficient range
        const std::int64_t pos = j.index - (root.index << lvl);
        coef = coef_levels[lvl][static_cast<std::size_t>(pos)];
      } else {
        if (!strictly_contains(j, root)) continue;
        // <f, h_J> for J above the root: the mean carries all of it.
        coef = mass * haar_sign(j, root) * std::sqrt(pow2d(-js));
      }
      if (coef != 0.0) v += coef * shift_atom_value(j, x);
    }
    out[r] = v;
  }
  return out;
}

DenseOperator build_matrix(DyadicInterval window, int depth, int ancestor_height) {
  if ((std::size_t{1} << depth) > max_matrix_leaves())
    throw std::invalid_argument("build_matrix: leaf count exceeds the matrix cap");
  if (ancestor_height > 40) throw std::invalid_argument("build_matrix: ancestor height > 40");
  DenseOperator op;
  op.window = window;
  op.input_depth = depth;
  op.ancestor_height = ancestor_height;
  op.cols = std::size_t{1} << depth;
  op.rows = op.cols * 2;
  op.values.assign(op.rows * op.cols, 0.0);
  const double atom_height = 1.0 / std::sqrt(pow2d(window.scale - depth));
  std::vector<double> leaves(op.cols, 0.0);
  for (std::size_t c = 0; c < op.cols; ++c) {
    leaves[c] = atom_height;  // normalized leaf atom
    const auto col = restricted_values(window, depth, leaves, window, depth + 1,
                                       ancestor_height);
    leaves[c] = 0.0;
    for (std::size_t r = 0; r < op.rows; ++r) op.values[r * op.cols + c] = col[r];
  }
  return op;
}

DenseOperator build_matrix(const TruncatedSystem& system) {
  return build_matrix(system.window, system.leaf_depth, system.ancestor_height);
}

double restricted_norm(DyadicInterval i, DyadicInterval k, int depth,
                       int ancestor_height, const LeafVector& f) {
  std::vector<double> leaves(f.values.size());
  for (std::size_t j = 0; j < leaves.size(); ++j) leaves[j] = f.values[j].to_double();
  const std::int64_t out_leaf = i.scale - depth - 1;
  const int out_depth = static_cast<int>(std::max<std::int64_t>(k.scale - out_leaf, 0));
  const auto vals = restricted_values(i, depth, leaves, k, out_depth, ancestor_height);
  const double leaf_size = pow2d(k.scale - out_depth);
  double sum = 0;
  for (double v : vals) sum += v * v * leaf_size;
  return std::sqrt(sum);
}

std::vector<double> jacobi_singular_values(std::vector<double> matrix,
                                           std::size_t rows, std::size_t cols,
                                           double tol) {
  // Column-major working copy for cache-friendly column rotations.
  std::vector<double> col(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) col[c * rows + r] = matrix[r * cols + c];

  double max_norm2 = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    double s = 0;
    for (std::size_t r = 0; r < rows; ++r) s += col[c * rows + r] * col[c * rows + r];
    max_norm2 = std::max(max_norm2, s);
  }
  const double off_tol = tol * std::max(max_norm2, 1e-300);

  for (int sweep = 0; sweep < 64; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        double app = 0, aqq = 0, apq = 0;
        double* cp = &col[p * rows];
        double* cq = &col[q * rows];
        for (std::size_t r = 0; r < rows; ++r) {
          app += cp[r] * cp[r];
          aqq += cq[r] * cq[r];
          apq += cp[r] * cq[r];
        }
        if (std::abs(apq) <= off_tol) continue;
        rotated = true;
        const double zeta = (aqq - app) / (2.0 * apq);
        const double t = (zeta >= 0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = cs * t;
        for (std::size_t r = 0; r < rows; ++r) {
          const double vp = cp[r];
          const double vq = cq[r];
          cp[r] = cs * vp - sn * vq;
          cq[r] = sn * vp + cs * vq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sigma(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    double s = 0;
    for (std::size_t r = 0; r < rows; ++r) s += col[c * rows + r] * col[c * rows + r];
    sigma[c] = std::sqrt(s);
  }
  std::sort(sigma.begin(), sigma.end(), std::greater<double>());
  return sigma;
}

SingularReport smallest_singular(DyadicInterval i, DyadicInterval k, int depth,
                                 DomainConstraint constraint, int ancestor_height) {
  const std::size_t n_leaves = std::size_t{1} << depth;
  if (n_leaves > max_matrix_leaves())
    throw std::invalid_argument("smallest_singular: domain exceeds the matrix cap");

  const std::int64_t out_leaf = i.scale - depth - 1;
  const std::int64_t out_depth64 = std::max<std::int64_t>(k.scale - out_leaf, 0);
  if ((std::uint64_t{1} << out_depth64) > 2 * max_matrix_leaves())
    throw std::invalid_argument("smallest_singular: window exceeds the matrix cap");
  const int out_depth = static_cast<int>(out_depth64);
  const std::size_t rows = std::size_t{1} << out_depth;
  const double row_weight = std::sqrt(pow2d(k.scale - out_depth));

  // Orthonormal domain basis: the Haar atoms of I down to the leaf scale,
  // plus the normalized indicator when the mean direction is unconstrained.
  std::vector<std::vector<double>> columns;
  for (int lvl = 0; lvl < depth; ++lvl) {
    const std::int64_t js = i.scale - lvl;
    for (std::int64_t pos = 0; pos < (std::int64_t{1} << lvl); ++pos) {
      const DyadicInterval j{js, (i.index << lvl) + pos};
      std::vector<double> colv(rows, 0.0);
      for (std::size_t r = 0; r < rows; ++r) {
        const DyadicInterval x{k.scale - out_depth,
                               (k.index << out_depth) + static_cast<std::int64_t>(r)};
        if (contains(j, x) && j.scale >= x.scale + 2)
          colv[r] = shift_atom_value(j, x);
      }
      columns.push_back(std::move(colv));
    }
  }
  if (constraint == DomainConstraint::none) {
    std::vector<double> leaves(n_leaves, 1.0 / std::sqrt(pow2d(i.scale)));
    columns.push_back(
        restricted_values(i, depth, leaves, k, out_depth, ancestor_height));
  }

  if (columns.empty())
    throw std::invalid_argument("smallest_singular: empty constrained domain");
  const std::size_t cols = columns.size();
  std::vector<double> m(rows * cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) m[r * cols + c] = columns[c][r] * row_weight;

  SingularReport rep;
  rep.singular_values = jacobi_singular_values(std::move(m), rows, cols);
  rep.sigma_max = rep.singular_values.front();
  rep.sigma_min = rep.singular_values.back();
  const double rank_tol = std::max(1e-12, 1e-9 * rep.sigma_max);
  rep.rank_numeric = static_cast<int>(std::count_if(
      rep.singular_values.begin(), rep.singular_values.end(),
      [&](double s) { return s > rank_tol; }));
  return rep;
}

std::vector<ConvergenceRow> convergence_study(DyadicInterval i, DyadicInterval k,
                                              const std::vector<int>& heights,
                                              int depth) {
  const std::int64_t out_leaf = i.scale - depth - 1;
  const int out_depth = static_cast<int>(std::max<std::int64_t>(k.scale - out_leaf, 0));
  const std::size_t n_leaves = std::size_t{1} << depth;

  // Exact engine values per atom, fixed across heights.
  std::vector<std::vector<double>> exact(n_leaves);
  for (std::size_t a = 0; a < n_leaves; ++a) {
    LeafVector atom;
    atom.root = i;
    atom.depth = depth;
    atom.values.assign(n_leaves, Sqrt2Scalar(0));
    atom.values[a] = 1;
    const auto form = restricted_shift(analyze(atom), k);
    const auto leaves = synthesize_form(form, std::max(out_depth, min_synthesis_depth(form)));
    exact[a].resize(leaves.values.size());
    for (std::size_t r = 0; r < exact[a].size(); ++r)
      exact[a][r] = leaves.values[r].to_double();
  }

  std::vector<ConvergenceRow> rows;
  std::vector<double> atom(n_leaves, 0.0);
  for (int h : heights) {
    double max_dev = 0;
    for (std::size_t a = 0; a < n_leaves; ++a) {
      atom[a] = 1.0;
      const auto vals = restricted_values(i, depth, atom, k, out_depth, h);
      atom[a] = 0.0;
      const std::size_t ratio = exact[a].size() / vals.size();
      for (std::size_t r = 0; r < vals.size(); ++r)
        for (std::size_t s = 0; s < ratio; ++s)
          max_dev = std::max(max_dev, std::abs(vals[r] - exact[a][r * ratio + s]));
    }
    rows.push_back({h, max_dev});
  }
  return rows;
}

}  // namespace oracle
}  // namespace haarshift
