#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace weightvar {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses an exact rational: an optionally signed integer or `p/q`.
/// Decimal points and exponents are rejected. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Comma-separated list of exact rationals, e.g. "3/8,2/8,1/8,-6/8".
std::vector<Rational> parse_rational_list(std::string_view text);

std::string to_string(const Rational& q);

}  // namespace weightvar
