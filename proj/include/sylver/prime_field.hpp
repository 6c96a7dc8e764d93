#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sylver {

/// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

/// Default campaign modulus: the Mersenne prime 2^61 - 1.
inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 61) - 1;

/// Largest supported modulus (exclusive); keeps a + b free of 64-bit overflow.
inline constexpr std::uint64_t kMaxPrimeModulus = std::uint64_t{1} << 63;

namespace detail {

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e != 0) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

/// Inverse of a modulo prime p via the extended Euclidean algorithm.
/// Throws std::domain_error when a == 0.
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw std::domain_error("PrimeFieldElement: zero is not invertible");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p);
  std::int64_t new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  assert(r == 1);  // p prime, 0 < a < p
  return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(p))
               : static_cast<std::uint64_t>(t);
}

}  // namespace detail

/// Residue modulo an odd prime p. The modulus travels with the element, so
/// values from different fields cannot be combined silently; mixing them is
/// a programming error caught by assertions.
class PrimeFieldElement {
 public:
  PrimeFieldElement(std::uint64_t value, std::uint64_t p) : value_(value % p), p_(p) {
    assert(p >= 3 && p < kMaxPrimeModulus);
  }

  static PrimeFieldElement from_int(std::int64_t v, std::uint64_t p) {
    std::uint64_t r = static_cast<std::uint64_t>(v % static_cast<std::int64_t>(p));
    if (v < 0 && r != 0) r += p;  // v % p is negative-leaning in C++
    return PrimeFieldElement(r, p);
  }

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  std::string str() const { return std::to_string(value_); }

  friend PrimeFieldElement operator-(const PrimeFieldElement& x) {
    return PrimeFieldElement(x.value_ == 0 ? 0 : x.p_ - x.value_, x.p_);
  }

  friend PrimeFieldElement operator+(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    assert(a.p_ == b.p_);
    return PrimeFieldElement(detail::add_mod(a.value_, b.value_, a.p_), a.p_);
  }
  friend PrimeFieldElement operator-(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    assert(a.p_ == b.p_);
    return PrimeFieldElement(detail::sub_mod(a.value_, b.value_, a.p_), a.p_);
  }
  friend PrimeFieldElement operator*(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    assert(a.p_ == b.p_);
    return PrimeFieldElement(detail::mul_mod(a.value_, b.value_, a.p_), a.p_);
  }
  friend PrimeFieldElement operator/(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    assert(a.p_ == b.p_);
    return PrimeFieldElement(detail::mul_mod(a.value_, detail::inv_mod(b.value_, b.p_), a.p_),
                             a.p_);
  }

  PrimeFieldElement& operator+=(const PrimeFieldElement& b) { return *this = *this + b; }
  PrimeFieldElement& operator-=(const PrimeFieldElement& b) { return *this = *this - b; }
  PrimeFieldElement& operator*=(const PrimeFieldElement& b) { return *this = *this * b; }
  PrimeFieldElement& operator/=(const PrimeFieldElement& b) { return *this = *this / b; }

  friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    assert(a.p_ == b.p_);
    return a.value_ == b.value_;
  }
  friend bool operator!=(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    return !(a == b);
  }

  template <class Stream>
  friend Stream& operator<<(Stream& os, const PrimeFieldElement& x) {
    return os << x.value_;
  }

 private:
  std::uint64_t value_;
  std::uint64_t p_;
};

}  // namespace sylver
