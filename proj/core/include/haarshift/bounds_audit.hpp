#pragma once

#include "haarshift/oracle.hpp"
#include "haarshift/shift_engine.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace haarshift {

/// Exact lower-bound constant for a pair, with the printed constant for the
/// same configuration when the claims catalogue states one.
struct BoundReport {
  DyadicInterval i;
  DyadicInterval k;
  CaseClass case_class = CaseClass::OppositeHalfLines;
  Rational exact_constant;                // norm²(1_K Ш 1_I)/|I|
  std::optional<Rational> paper_bound;
  std::optional<Rational> eta_factor;     // (1-η)² when a derivative constraint applies
};

BoundReport bound_constant(DyadicInterval i, DyadicInterval k);

/// The catalogued interior extremal f = -ε(K,I)|I|^{-1/2}·1_I + h_I.
/// Requires K strictly inside I with parent(K) ≠ I. Annihilated by 1_K Ш
/// exactly when the walk constant matches the second-step child sign; see
/// interior_annihilator for a witness that always annihilates.
DyadicFunction extremal_interior(DyadicInterval i, DyadicInterval k);

/// Exact annihilated nonzero witness for every admissible interior pair
/// (K ⊊ I, parent(K) ≠ I): restricted_shift(f, K).norm2() == 0 exactly.
DyadicFunction interior_annihilator(DyadicInterval i, DyadicInterval k);

/// h_I: zero-mean, unit norm, invisible outside its support.
DyadicFunction zero_mean_gap_witness(DyadicInterval i);

/// f(t) = Σ a_k e^{2ikπ(t-left(I))/|I|} on I; norms are spectral and exact
/// in the coefficients.
struct TrigPolynomial {
  DyadicInterval interval;
  std::vector<std::pair<int, std::complex<double>>> coefficients;

  double norm2() const;             // ‖f‖²_{L²(I)} = |I|·Σ|a_k|²
  double derivative_norm2() const;  // ‖f'‖²_{L²(I)} = |I|·Σ(2πk/|I|)²|a_k|²
};

/// Float-mode piecewise-constant function (oracle-side carrier).
struct FloatFunction {
  DyadicInterval root;
  int depth = 0;
  std::vector<double> values;

  double mean() const;
  double norm2() const;
};

struct PwFunction {
  FloatFunction f;
  double eta = 0;  // |I|·‖f'‖ / (2π‖f‖), computed spectrally
};

/// Samples the polynomial (real part) at leaf midpoints.
PwFunction pw_build(const TrigPolynomial& poly, int depth);

struct GapBoundReport {
  Rational exact_constant;
  std::optional<Rational> paper_constant;
  double eta_factor = 0;      // (1-η)²
  double lhs_norm2 = 0;       // ‖1_K Ш f‖² by the rank-one identity
  double rhs_exact = 0;       // (1-η)²·exact_constant·‖f‖²
  std::optional<double> rhs_paper;
  bool holds_exact = false;
};

GapBoundReport gap_lower_bound_check(const FloatFunction& f, DyadicInterval i,
                                     DyadicInterval k, double eta);

/// Machine-readable verdict for one catalogued claim over a finite sweep.
struct ClaimReport {
  std::string claim;
  std::string paper_ref;
  std::string status;  // verified | verified-with-slack | discrepancy
  std::size_t pairs_checked = 0;
  std::vector<std::pair<std::string, std::string>> details;  // stable order
};

struct UniverseSpec {
  std::int64_t scale_min = -6;
  std::int64_t scale_max = 6;
  std::int64_t index_limit = 63;  // indices 0..limit, plus the mirrored ones
  int pair_depth = 3;             // relative depth of structural pair sweeps
};

std::vector<DyadicInterval> enumerate_universe(const UniverseSpec& u);

/// Sweeps every catalogued claim; never aborts on a discrepancy. Order and
/// content are deterministic.
std::vector<ClaimReport> audit_claims(const UniverseSpec& universe, int depth);

struct AgreementReport {
  bool ok = true;
  double max_deviation = 0;
  double bound = 0;
  std::size_t checks = 0;
  std::string worst_pair;
};

/// Engine-vs-oracle sweep over ordered pairs from `intervals` and every leaf
/// atom at depth ≤ atom_depth; the artifact's root trust anchor.
AgreementReport engine_oracle_agreement(const std::vector<DyadicInterval>& intervals,
                                        int atom_depth, int ancestor_height);

}  // namespace haarshift
