// Exact rational numbers and their "p/q" text form.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace lamcoh {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                              boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& value);

double to_double(const Rational& value);

Integer floor(const Rational& value);

}  // namespace lamcoh
