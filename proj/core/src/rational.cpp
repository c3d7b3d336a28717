#include "haarshift/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace haarshift {

Rational pow2(std::int64_t e) {
  BigInt one = 1;
  if (e >= 0) return Rational(one << e);
  return Rational(one, one << (-e));
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

int sign_of(const Rational& x) { return x.sign(); }

std::string format_rational(const Rational& x) {
  const BigInt num = numerator(x);
  const BigInt den = denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') i = 1;
  if (i == text.size()) return false;
  for (std::size_t j = i; j < text.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) return false;
  out = BigInt(std::string(text));
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  BigInt num, den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) return std::nullopt;
  } else {
    if (!parse_integer(text.substr(0, slash), num)) return std::nullopt;
    const auto den_text = text.substr(slash + 1);
    if (den_text.empty() || den_text[0] == '+' || den_text[0] == '-') return std::nullopt;
    if (!parse_integer(den_text, den)) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  return Rational(num, den);
}

}  // namespace haarshift
