#pragma once

#include "haarshift/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace haarshift {

/// Exact element a + b·√2 of the field Q[√2]. Every Haar amplitude ±2^{-k/2}
/// lives here: even k gives a rational, odd k a pure √2 multiple.
class Sqrt2Scalar {
 public:
  Sqrt2Scalar() = default;
  Sqrt2Scalar(long long v) : a_(v) {}  // NOLINT: implicit for integer literals
  explicit Sqrt2Scalar(Rational a) : a_(std::move(a)) {}
  Sqrt2Scalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Sqrt2Scalar sqrt2() { return Sqrt2Scalar(Rational(0), Rational(1)); }

  /// 2^{k/2} exactly.
  static Sqrt2Scalar pow2_half(std::int64_t k) {
    if (k % 2 == 0) return Sqrt2Scalar(pow2(k / 2));
    return Sqrt2Scalar(Rational(0), pow2((k - 1) / 2));
  }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  /// Exact sign of the real number a + b·√2.
  int sign() const;

  Sqrt2Scalar squared() const;
  /// Field inverse; throws std::domain_error on zero.
  Sqrt2Scalar inverse() const;

  double to_double() const;
  /// Canonical text: "p/q", "r/s√2", or "p/q+r/s√2" (sign folded into r/s).
  std::string str() const;

  friend Sqrt2Scalar operator+(const Sqrt2Scalar& x, const Sqrt2Scalar& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend Sqrt2Scalar operator-(const Sqrt2Scalar& x, const Sqrt2Scalar& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend Sqrt2Scalar operator-(const Sqrt2Scalar& x) { return {-x.a_, -x.b_}; }
  friend Sqrt2Scalar operator*(const Sqrt2Scalar& x, const Sqrt2Scalar& y) {
    return {x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend Sqrt2Scalar operator/(const Sqrt2Scalar& x, const Sqrt2Scalar& y) {
    return x * y.inverse();
  }
  Sqrt2Scalar& operator+=(const Sqrt2Scalar& y) { return *this = *this + y; }
  Sqrt2Scalar& operator-=(const Sqrt2Scalar& y) { return *this = *this - y; }
  Sqrt2Scalar& operator*=(const Sqrt2Scalar& y) { return *this = *this * y; }

  friend bool operator==(const Sqrt2Scalar& x, const Sqrt2Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Sqrt2Scalar& x, const Sqrt2Scalar& y) { return !(x == y); }
  friend bool operator<(const Sqrt2Scalar& x, const Sqrt2Scalar& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator>(const Sqrt2Scalar& x, const Sqrt2Scalar& y) { return y < x; }
  friend bool operator<=(const Sqrt2Scalar& x, const Sqrt2Scalar& y) { return !(y < x); }
  friend bool operator>=(const Sqrt2Scalar& x, const Sqrt2Scalar& y) { return !(x < y); }

 private:
  Rational a_;
  Rational b_;
};

std::optional<Sqrt2Scalar> parse_scalar(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Sqrt2Scalar& x);

}  // namespace haarshift
