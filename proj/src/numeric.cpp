#include "chromatic/numeric.hpp"

#include "chromatic/error.hpp"

namespace chromatic {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational rpow(const Rational& base, long exponent) {
  if (exponent >= 0) {
    Rational out(ipow(base.get_num(), static_cast<unsigned long>(exponent)),
                 ipow(base.get_den(), static_cast<unsigned long>(exponent)));
    out.canonicalize();
    return out;
  }
  if (base == 0) throw InvalidArgument("zero raised to a negative power");
  return 1 / rpow(base, -exponent);
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw InvalidArgument("p_part of zero");
  std::uint64_t out = 1;
  while (n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw ParseError("not a rational number: '" + text + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

Integer to_integer(const Rational& q) {
  if (q.get_den() != 1) throw InvalidArgument("not an integer: " + q.get_str());
  return q.get_num();
}

}  // namespace chromatic
