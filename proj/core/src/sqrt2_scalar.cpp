#include "haarshift/sqrt2_scalar.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace haarshift {

int Sqrt2Scalar::sign() const {
  const int sa = sign_of(a_);
  const int sb = sign_of(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b of opposite sign: compare a^2 against 2 b^2. Equality would make
  // sqrt(2) rational, so it cannot occur for nonzero parts.
  const Rational lhs = a_ * a_;
  const Rational rhs = 2 * b_ * b_;
  return lhs > rhs ? sa : sb;
}

Sqrt2Scalar Sqrt2Scalar::squared() const { return *this * *this; }

Sqrt2Scalar Sqrt2Scalar::inverse() const {
  // 1/(a + b√2) = (a - b√2)/(a² - 2b²); the norm vanishes only at zero.
  const Rational norm = a_ * a_ - 2 * b_ * b_;
  if (norm == 0) throw std::domain_error("Sqrt2Scalar: division by zero");
  return {a_ / norm, -b_ / norm};
}

double Sqrt2Scalar::to_double() const {
  return haarshift::to_double(a_) + haarshift::to_double(b_) * std::sqrt(2.0);
}

std::string Sqrt2Scalar::str() const {
  if (b_ == 0) return format_rational(a_);
  const std::string tail = format_rational(b_) + "√2";
  if (a_ == 0) return tail;
  if (b_ > 0) return format_rational(a_) + "+" + tail;
  return format_rational(a_) + tail;  // negative b carries its own sign
}

namespace {

constexpr std::string_view kRadical = "√2";  // "√2"

// Parses "<rational>√2", "√2", "-√2", "+√2", or a plain rational.
std::optional<Sqrt2Scalar> parse_term(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.size() >= kRadical.size() &&
      text.substr(text.size() - kRadical.size()) == kRadical) {
    auto head = text.substr(0, text.size() - kRadical.size());
    Rational b;
    if (head.empty() || head == "+") {
      b = 1;
    } else if (head == "-") {
      b = -1;
    } else {
      auto parsed = parse_rational(head);
      if (!parsed) return std::nullopt;
      b = *parsed;
    }
    return Sqrt2Scalar(Rational(0), b);
  }
  auto parsed = parse_rational(text);
  if (!parsed) return std::nullopt;
  return Sqrt2Scalar(*parsed);
}

}  // namespace

std::optional<Sqrt2Scalar> parse_scalar(std::string_view text) {
  // Split at the last top-level '+'/'-' that separates the two terms. Signs at
  // position 0 belong to the first term.
  for (std::size_t i = text.size(); i-- > 1;) {
    if (text[i] != '+' && text[i] != '-') continue;
    auto lhs = parse_term(text.substr(0, i));
    if (!lhs || !lhs->is_rational()) continue;
    auto rhs_text = text.substr(text[i] == '+' ? i + 1 : i);
    auto rhs = parse_term(rhs_text);
    if (!rhs || rhs->is_rational()) continue;
    return *lhs + *rhs;
  }
  return parse_term(text);
}

std::ostream& operator<<(std::ostream& os, const Sqrt2Scalar& x) { return os << x.str(); }

}  // namespace haarshift
