#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "sylver/prime_field.hpp"
#include "sylver/rational.hpp"

namespace sylver {

// Every algorithm in this library is generic over a field scalar K. A scalar
// carries its whole context by value (a PrimeFieldElement knows its modulus),
// so constants compatible with an existing element are obtained through the
// *_like functions below rather than through bare literals.

inline Rational zero_like(const Rational&) { return Rational(); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational from_int_like(const Rational&, std::int64_t v) { return Rational(v); }

inline PrimeFieldElement zero_like(const PrimeFieldElement& a) {
  return PrimeFieldElement(0, a.modulus());
}
inline PrimeFieldElement one_like(const PrimeFieldElement& a) {
  return PrimeFieldElement(1, a.modulus());
}
inline PrimeFieldElement from_int_like(const PrimeFieldElement& a, std::int64_t v) {
  return PrimeFieldElement::from_int(v, a.modulus());
}

inline double zero_like(double) { return 0.0; }
inline double one_like(double) { return 1.0; }
inline double from_int_like(double, std::int64_t v) { return static_cast<double>(v); }

/// Multiplicative inverse. Throws std::domain_error on zero.
inline Rational field_inverse(const Rational& a) {
  if (a.is_zero()) throw std::domain_error("Rational: zero is not invertible");
  return Rational(a.denominator(), a.numerator());
}
inline PrimeFieldElement field_inverse(const PrimeFieldElement& a) {
  return PrimeFieldElement(detail::inv_mod(a.value(), a.modulus()), a.modulus());
}
inline double field_inverse(double a) {
  if (a == 0.0) throw std::domain_error("float64: zero is not invertible");
  return 1.0 / a;
}

template <class K>
concept FieldElement = std::copyable<K> && std::equality_comparable<K> &&
    requires(const K& a, const K& b, std::int64_t v) {
      { a + b } -> std::convertible_to<K>;
      { a - b } -> std::convertible_to<K>;
      { a * b } -> std::convertible_to<K>;
      { a / b } -> std::convertible_to<K>;
      { -a } -> std::convertible_to<K>;
      { zero_like(a) } -> std::convertible_to<K>;
      { one_like(a) } -> std::convertible_to<K>;
      { from_int_like(a, v) } -> std::convertible_to<K>;
      { field_inverse(a) } -> std::convertible_to<K>;
    };

/// a^k by binary exponentiation; a^0 == 1 by the empty-product convention,
/// including a == 0.
template <FieldElement K>
K field_pow(const K& a, std::uint64_t k) {
  K result = one_like(a);
  K base = a;
  while (k != 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

/// Exact fields support equality-based verification; float64 reports
/// relative error instead.
template <class K>
inline constexpr bool is_exact_field_v = true;
template <>
inline constexpr bool is_exact_field_v<double> = false;

template <class K>
struct FieldName;
template <>
struct FieldName<Rational> {
  static constexpr const char* value = "rational";
};
template <>
struct FieldName<PrimeFieldElement> {
  static constexpr const char* value = "prime";
};
template <>
struct FieldName<double> {
  static constexpr const char* value = "float64";
};

enum class FieldKind { rational, prime, float64 };

/// Runtime selection of the field realization. A prime modulus is validated
/// once here, not per element.
struct FieldConfig {
  FieldKind kind = FieldKind::rational;
  std::uint64_t p = kDefaultPrime;

  static FieldConfig rational() { return {FieldKind::rational, kDefaultPrime}; }

  static FieldConfig prime(std::uint64_t p = kDefaultPrime) {
    if (p < 3 || p % 2 == 0 || p >= kMaxPrimeModulus || !is_prime_u64(p))
      throw std::invalid_argument("FieldConfig: modulus must be an odd prime below 2^63");
    return {FieldKind::prime, p};
  }

  static FieldConfig float64() { return {FieldKind::float64, kDefaultPrime}; }

  std::string name() const {
    switch (kind) {
      case FieldKind::rational: return "rational";
      case FieldKind::prime: return "prime";
      case FieldKind::float64: return "float64";
    }
    return "unknown";
  }
};

}  // namespace sylver
