#pragma once

#include "haarshift/sqrt2_scalar.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace haarshift {

/// Half-open dyadic interval [l·2^k, (l+1)·2^k). Identity is the (scale,
/// index) pair; endpoints are derived values. Negative indices lie in the
/// left half-line; no dyadic interval straddles 0.
struct DyadicInterval {
  std::int64_t scale = 0;
  std::int64_t index = 0;

  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
};

enum class HalfLineSign { positive, negative };

HalfLineSign half_line(DyadicInterval i);

DyadicInterval child_minus(DyadicInterval i);  // left half
DyadicInterval child_plus(DyadicInterval i);   // right half
std::pair<DyadicInterval, DyadicInterval> children(DyadicInterval i);
DyadicInterval parent(DyadicInterval i);

/// -1 if i is the lower child of its parent (even index), +1 otherwise.
int child_sign(DyadicInterval i);

/// Index of the ancestor of i at the given coarser scale.
std::int64_t index_at_scale(DyadicInterval i, std::int64_t scale);

bool contains(DyadicInterval a, DyadicInterval b);
bool strictly_contains(DyadicInterval a, DyadicInterval b);
bool disjoint(DyadicInterval a, DyadicInterval b);

/// +1 iff k lies in the upper child of i, -1 iff in the lower child.
/// Requires k strictly inside i.
int epsilon_child(DyadicInterval k, DyadicInterval i);

/// Minimal dyadic interval containing both, when one exists (same half-line);
/// absent for opposite half-lines.
std::optional<DyadicInterval> meet(DyadicInterval a, DyadicInterval b);

/// Smallest zero-anchored ancestor [0, 2^M) (or [-2^M, 0) on the left).
DyadicInterval apex(DyadicInterval i);

/// The interval -i, reindexed half-open: (k, l) -> (k, -l-1). Involution.
DyadicInterval reflect(DyadicInterval i);

Rational interval_size(DyadicInterval i);   // 2^scale
Rational left_endpoint(DyadicInterval i);   // index * 2^scale

/// Sign of h_l on k, for k inside a child of l.
int haar_sign(DyadicInterval l, DyadicInterval k);
/// h_l(k) = haar_sign · |l|^{-1/2}, exact in Q[√2].
Sqrt2Scalar haar_value(DyadicInterval l, DyadicInterval k);

/// Sign of the shifted atom on k, for k inside a grandchild of l: the value
/// on (l_+)_+ and (l_-)_- is +|l|^{-1/2}, on the two mixed grandchildren
/// -|l|^{-1/2}.
int shift_haar_sign(DyadicInterval l, DyadicInterval k);
Sqrt2Scalar shift_haar_value(DyadicInterval l, DyadicInterval k);

/// Text syntax "k:l", e.g. "-1:5" = [5/2, 3).
std::string format_interval(DyadicInterval i);
std::optional<DyadicInterval> parse_interval(std::string_view text);

/// Strict weak order listing coarse intervals first; deterministic container
/// order for spectra and forms.
struct CoarseFirst {
  bool operator()(const DyadicInterval& a, const DyadicInterval& b) const {
    if (a.scale != b.scale) return a.scale > b.scale;
    return a.index < b.index;
  }
};

}  // namespace haarshift
