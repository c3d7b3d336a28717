#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace haarshift {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// 2^e as an exact rational; e may be negative.
Rational pow2(std::int64_t e);

double to_double(const Rational& x);

int sign_of(const Rational& x);

/// Canonical text: "p" when the denominator is 1, else "p/q" in lowest terms,
/// q > 0, sign on the numerator.
std::string format_rational(const Rational& x);

std::optional<Rational> parse_rational(std::string_view text);

}  // namespace haarshift
