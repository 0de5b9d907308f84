#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tropmod {

/// Exact rational scalar used for every length, offset and radius.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Accepts `p/q` or an integer literal (optional leading '-'); throws ParseError otherwise.
Rational parse_rational(std::string_view text);

/// `p/q` in lowest terms, or `p` when the denominator is 1.
std::string to_string(const Rational& value);

} // namespace tropmod
