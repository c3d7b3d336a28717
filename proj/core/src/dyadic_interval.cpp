#include "haarshift/dyadic_interval.hpp"

#include <cassert>
#include <charconv>
#include <stdexcept>

namespace haarshift {

namespace {
// Scale differences are bounded by the widths tested here; 62 keeps every
// index shift inside int64.
constexpr std::int64_t kMaxScaleDiff = 62;
}  // namespace

HalfLineSign half_line(DyadicInterval i) {
  return i.index >= 0 ? HalfLineSign::positive : HalfLineSign::negative;
}

DyadicInterval child_minus(DyadicInterval i) { return {i.scale - 1, 2 * i.index}; }
DyadicInterval child_plus(DyadicInterval i) { return {i.scale - 1, 2 * i.index + 1}; }

std::pair<DyadicInterval, DyadicInterval> children(DyadicInterval i) {
  return {child_minus(i), child_plus(i)};
}

DyadicInterval parent(DyadicInterval i) { return {i.scale + 1, i.index >> 1}; }

int child_sign(DyadicInterval i) { return (i.index & 1) ? +1 : -1; }

std::int64_t index_at_scale(DyadicInterval i, std::int64_t scale) {
  assert(scale >= i.scale && scale - i.scale <= kMaxScaleDiff);
  return i.index >> (scale - i.scale);
}

bool contains(DyadicInterval a, DyadicInterval b) {
  if (a.scale < b.scale) return false;
  if (a.scale - b.scale > kMaxScaleDiff) {
    // b is tiny relative to a; compare at b's half-line and a's position by
    // ascending b in two steps.
    DyadicInterval mid{b.scale + kMaxScaleDiff, b.index >> kMaxScaleDiff};
    return contains(a, mid);
  }
  return index_at_scale(b, a.scale) == a.index;
}

bool strictly_contains(DyadicInterval a, DyadicInterval b) {
  return a.scale > b.scale && contains(a, b);
}

bool disjoint(DyadicInterval a, DyadicInterval b) {
  return !contains(a, b) && !contains(b, a);
}

int epsilon_child(DyadicInterval k, DyadicInterval i) {
  if (!strictly_contains(i, k))
    throw std::invalid_argument("epsilon_child: K must be strictly inside I");
  const std::int64_t c = index_at_scale(k, i.scale - 1);
  return (c & 1) ? +1 : -1;
}

std::optional<DyadicInterval> meet(DyadicInterval a, DyadicInterval b) {
  if (half_line(a) != half_line(b)) return std::nullopt;
  // Lift the finer interval to the common scale, then ascend until equal.
  std::int64_t k = std::max(a.scale, b.scale);
  std::int64_t ia = index_at_scale(a, k);
  std::int64_t ib = index_at_scale(b, k);
  while (ia != ib) {
    ++k;
    ia >>= 1;
    ib >>= 1;
  }
  return DyadicInterval{k, ia};
}

DyadicInterval apex(DyadicInterval i) {
  const std::int64_t anchor = i.index >= 0 ? 0 : -1;
  while (i.index != anchor) i = parent(i);
  return i;
}

DyadicInterval reflect(DyadicInterval i) { return {i.scale, -i.index - 1}; }

Rational interval_size(DyadicInterval i) { return pow2(i.scale); }

Rational left_endpoint(DyadicInterval i) { return Rational(i.index) * pow2(i.scale); }

int haar_sign(DyadicInterval l, DyadicInterval k) {
  if (!strictly_contains(l, k))
    throw std::invalid_argument("haar_value: K must lie inside a child of L");
  const std::int64_t c = index_at_scale(k, l.scale - 1);
  return (c & 1) ? +1 : -1;
}

Sqrt2Scalar haar_value(DyadicInterval l, DyadicInterval k) {
  return Sqrt2Scalar(haar_sign(l, k)) * Sqrt2Scalar::pow2_half(-l.scale);
}

int shift_haar_sign(DyadicInterval l, DyadicInterval k) {
  if (l.scale < k.scale + 2 || !contains(l, k))
    throw std::invalid_argument("shift_haar_value: K must lie inside a grandchild of L");
  const std::int64_t c = index_at_scale(k, l.scale - 1);
  const std::int64_t g = index_at_scale(k, l.scale - 2);
  const int s = (c & 1) ? +1 : -1;
  const int t = (g & 1) ? +1 : -1;
  return s * t;
}

Sqrt2Scalar shift_haar_value(DyadicInterval l, DyadicInterval k) {
  return Sqrt2Scalar(shift_haar_sign(l, k)) * Sqrt2Scalar::pow2_half(-l.scale);
}

std::string format_interval(DyadicInterval i) {
  return std::to_string(i.scale) + ":" + std::to_string(i.index);
}

std::optional<DyadicInterval> parse_interval(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  DyadicInterval out;
  const auto head = text.substr(0, colon);
  const auto tail = text.substr(colon + 1);
  auto parse_i64 = [](std::string_view s, std::int64_t& v) {
    if (s.empty()) return false;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    return ec == std::errc() && ptr == last;
  };
  if (!parse_i64(head, out.scale) || !parse_i64(tail, out.index)) return std::nullopt;
  return out;
}

}  // namespace haarshift
