#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace chromatic {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational; GMP keeps it canonical (coprime, positive denominator).
using Rational = mpq_class;

bool is_prime(std::uint64_t n);

/// Throws NotPrime unless `p` is prime.
void require_prime(std::uint64_t p);

/// num / den in lowest terms. Throws InvalidArgument when den = 0.
Rational ratio(const Integer& num, const Integer& den);

Integer ipow(const Integer& base, unsigned long exponent);

/// base^exponent for a signed exponent; base must be nonzero when exponent < 0.
Rational rpow(const Rational& base, long exponent);

/// Largest power of `p` dividing `n` (n > 0).
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

Rational parse_rational(const std::string& text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Integral value of `q`; throws InvalidArgument if `q` has a denominator.
Integer to_integer(const Rational& q);

}  // namespace chromatic
