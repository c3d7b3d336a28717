#pragma once

#include "haarshift/dyadic_function.hpp"

#include <map>

namespace haarshift {

/// Relative position of an ordered pair (I, K); exactly one case holds, and
/// dyadic structure rules out partial overlap.
enum class CaseClass { Equal, Interior, Covering, GapSameHalfLine, OppositeHalfLines };

CaseClass classify(DyadicInterval i, DyadicInterval k);

const char* case_name(CaseClass c);

/// Exact value of 1_K Ш f as three mutually orthogonal parts:
/// constant·1_K + haar·h_K + Σ_L inner(L)·(shifted atom of L), each inner
/// support L ⊆ K. norm² = constant²·|K| + haar² + Σ inner² exactly.
struct RestrictedShiftForm {
  DyadicInterval k;
  Sqrt2Scalar constant;
  Sqrt2Scalar haar;
  std::map<DyadicInterval, Sqrt2Scalar, CoarseFirst> inner;

  Sqrt2Scalar norm2() const;
  bool is_zero() const;
};

/// Σ_{L ⊋ base} h_L(I)·Шh_L(K) over strict ancestors L of base, exact: a
/// finite walk to one level above the zero-anchored apex plus a closed-form
/// geometric tail. Requires I ⊆ base, parent(base) ⊋ K̂, same half-line.
Sqrt2Scalar ancestor_sum(DyadicInterval i, DyadicInterval k, DyadicInterval base);

/// Closed form of 1_K Ш 1_I for every relative position of I and K.
RestrictedShiftForm restricted_indicator_shift(DyadicInterval i, DyadicInterval k);

/// The constant γ(I,K) with 1_K Ш 1_I = γ·1_K, for K strictly inside I.
Sqrt2Scalar interior_mean_constant(DyadicInterval i, DyadicInterval k);

/// 1_K Ш f for f supported on root(f), any K. The returned form's norm2()
/// is exact via orthogonality.
RestrictedShiftForm restricted_shift(const DyadicFunction& f, DyadicInterval k);

/// ‖1_K Ш f‖² for K strictly inside root(f), evaluated by the closed
/// three-term formula (bracket²·|K| + |f̂(K̂)|²/2 + Σ_{J⊆K}|f̂(J)|²) without
/// assembling the form; must equal restricted_shift(f,k).norm2() exactly.
Sqrt2Scalar interior_norm2(const DyadicFunction& f, DyadicInterval k);

/// Ш on the zero-mean part: each coefficient f̂(J) feeds ±f̂(J)/√2 to the
/// children of J; depth grows by one; norm² is preserved exactly.
DyadicFunction shift_zero_mean(const DyadicFunction& f);

/// Leaf-level 1_W Ш f on an aligned window.
LeafVector shift_full(const DyadicFunction& f, DyadicInterval window);

/// Leaf realization of a form at the given depth below K (needs depth large
/// enough for every stored atom).
LeafVector synthesize_form(const RestrictedShiftForm& form, int depth);
int min_synthesis_depth(const RestrictedShiftForm& form);

/// Image of a form under x ↦ -x combined with the operator's odd symmetry:
/// constant negates, haar coefficient is preserved, inner atoms reflect and
/// negate.
RestrictedShiftForm reflect_form(const RestrictedShiftForm& form);

}  // namespace haarshift
