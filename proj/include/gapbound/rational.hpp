#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gapbound {

/// Exact rational number. gmpxx keeps every result of its arithmetic
/// canonical (lowest terms, positive denominator); values built from raw
/// numerator/denominator pairs go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// Parses "num/den" or a plain integer. Rejects empty input, stray
/// characters and zero denominators by throwing Error(ErrorCode::Parse).
Rational parse_rational(std::string_view text);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& value);

/// Least common multiple of the denominators.
Integer common_denominator(const std::vector<Rational>& values);

}  // namespace gapbound
