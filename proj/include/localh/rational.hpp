#pragma once

#include <gmpxx.h>

#include <string>

namespace localh {

// Exact arithmetic is GMP-backed throughout. mpq_class values produced by
// arithmetic are always canonical (lowest terms, positive denominator).
using Integer = mpz_class;
using Rational = mpq_class;

/// Canonicalizing constructor; the mpq_class(num, den) constructor alone
/// does not reduce to lowest terms.
Rational rational(long num, long den = 1);
Rational rational(const Integer& num, const Integer& den);

/// Lossless decimal serialization: "num/den", or "num" when den == 1.
std::string to_string(const Rational& r);

/// Inverse of to_string. Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(const std::string& s);

int sign(const Rational& r) noexcept;
bool is_integer(const Rational& r) noexcept;

/// C(n, k); zero when k < 0, k > n, or n < 0.
Integer binomial(long n, long k);
Integer factorial(unsigned long n);

}  // namespace localh
