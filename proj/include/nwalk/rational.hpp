#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>

namespace nwalk {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
/// Throws ValidationError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& value);

/// Least common multiple of the denominators.
Integer common_denominator(std::span<const Rational> values);

}  // namespace nwalk
