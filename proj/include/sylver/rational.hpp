#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace sylver {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number, kept fully reduced with a positive
/// denominator. Zero is represented uniquely as 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  template <class I, std::enable_if_t<std::is_integral_v<I>>* = nullptr>
  Rational(I v) : num_(v), den_(1) {}

  Rational(BigInt v) : num_(std::move(v)), den_(1) {}

  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }

  /// Renders "p/q", with "/q" omitted when q == 1.
  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) {
      s += '/';
      s += den_.str();
    }
    return s;
  }

  friend Rational operator-(const Rational& x) {
    Rational r;
    r.num_ = -x.num_;
    r.den_ = x.den_;
    return r;
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return Rational(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(x.num_ * y.den_, x.den_ * y.num_);
  }

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
  friend bool operator<(const Rational& x, const Rational& y) {
    return x.num_ * y.den_ < y.num_ * x.den_;
  }
  friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
  friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
  friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

  template <class Stream>
  friend Stream& operator<<(Stream& os, const Rational& x) {
    return os << x.str();
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

/// Reduced representative with positive denominator. Throws on den == 0.
inline Rational rat_normalize(BigInt num, BigInt den) {
  return Rational(std::move(num), std::move(den));
}

inline Rational abs(const Rational& x) {
  return x.numerator() < 0 ? -x : x;
}

}  // namespace sylver
