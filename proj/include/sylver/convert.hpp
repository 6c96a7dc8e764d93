#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "sylver/field.hpp"

namespace sylver {

/// Image of a rational in F_p; requires the denominator to be coprime to p.
inline PrimeFieldElement to_prime_field(const Rational& r, std::uint64_t p) {
  BigInt num = r.numerator() % p;
  if (num < 0) num += p;
  BigInt den = r.denominator() % p;
  if (den == 0)
    throw std::domain_error("to_prime_field: denominator divisible by the modulus");
  return PrimeFieldElement(num.convert_to<std::uint64_t>(), p) /
         PrimeFieldElement(den.convert_to<std::uint64_t>(), p);
}

/// Exact rational value of a finite double (every finite double is dyadic).
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite input");
  if (x == 0.0) return Rational();
  int exp = 0;
  const double m = std::frexp(x, &exp);
  const auto mant = static_cast<long long>(std::ldexp(m, 53));  // integer by construction
  const int e2 = exp - 53;
  if (e2 >= 0) return Rational(BigInt(mant) << e2);
  return Rational(BigInt(mant), BigInt(1) << -e2);
}

/// Nearest double to a rational, computed by scaling the quotient to ~63
/// significant bits first so huge numerators and denominators cannot
/// overflow along the way. Accurate to a couple of ulps.
inline double double_from_rational(const Rational& r) {
  using boost::multiprecision::msb;
  if (r.is_zero()) return 0.0;
  const BigInt a = boost::multiprecision::abs(r.numerator());
  const BigInt& b = r.denominator();
  const long shift = 63 - (static_cast<long>(msb(a)) - static_cast<long>(msb(b)));
  const BigInt scaled = shift >= 0 ? BigInt((a << shift) / b) : BigInt(a / (b << -shift));
  const double q = std::ldexp(scaled.convert_to<double>(), static_cast<int>(-shift));
  return r.numerator() < 0 ? -q : q;
}

}  // namespace sylver
