#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sylver/field.hpp"

namespace sylver {

/// Dense univariate polynomial over a field, stored low-degree-first.
/// Invariant: the highest-index coefficient is nonzero; the zero polynomial
/// is the empty coefficient list and its degree() is nullopt.
template <FieldElement K>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const K& c) { return Polynomial(std::vector<K>{c}); }

  static Polynomial monomial(const K& c, std::size_t deg) {
    if (c == zero_like(c)) return Polynomial();
    std::vector<K> v(deg + 1, zero_like(c));
    v[deg] = c;
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }

  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  std::span<const K> coefficients() const { return coeffs_; }

  /// Coefficient of X^i, with an explicit zero for indices past the degree
  /// (and for the zero polynomial, which holds no element to derive one from).
  K coeff_or(std::size_t i, const K& zero) const {
    return i < coeffs_.size() ? coeffs_[i] : zero;
  }

  const K& leading() const {
    if (coeffs_.empty()) throw std::domain_error("Polynomial: zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  friend Polynomial operator-(const Polynomial& a) {
    std::vector<K> v;
    v.reserve(a.coeffs_.size());
    for (const K& c : a.coeffs_) v.push_back(-c);
    return Polynomial(std::move(v));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const K zero = zero_like(a.coeffs_[0]);
    std::vector<K> v(std::max(a.coeffs_.size(), b.coeffs_.size()), zero);
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = a.coeff_or(i, zero) + b.coeff_or(i, zero);
    return Polynomial(std::move(v));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  /// Schoolbook convolution; deg(ab) = deg a + deg b for nonzero inputs.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    const K zero = zero_like(a.coeffs_[0]);
    std::vector<K> v(a.coeffs_.size() + b.coeffs_.size() - 1, zero);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const Polynomial& a, const K& s) {
    return a * Polynomial::constant(s);
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == zero_like(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<K> coeffs_;
};

/// Horner evaluation at x; the zero polynomial evaluates to 0.
template <FieldElement K>
K evaluate(const Polynomial<K>& p, const K& x) {
  K acc = zero_like(x);
  auto cs = p.coefficients();
  for (std::size_t i = cs.size(); i-- > 0;) acc = acc * x + cs[i];
  return acc;
}

template <FieldElement K>
struct DivRem {
  Polynomial<K> quotient;
  Polynomial<K> remainder;
};

/// Exact division with remainder over a field: a = q*b + r, deg r < deg b.
/// Throws std::domain_error when b is the zero polynomial.
template <FieldElement K>
DivRem<K> divrem(const Polynomial<K>& a, const Polynomial<K>& b) {
  if (b.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
  if (a.is_zero() || *a.degree() < *b.degree()) return {Polynomial<K>(), a};

  const K zero = zero_like(b.leading());
  const K lead_inv = field_inverse(b.leading());
  std::vector<K> rem(a.coefficients().begin(), a.coefficients().end());
  const std::size_t nb = *b.degree();
  std::vector<K> quot(rem.size() - nb, zero);

  for (std::size_t top = rem.size(); top-- > nb;) {
    K factor = rem[top] * lead_inv;
    quot[top - nb] = factor;
    if (factor == zero) continue;
    for (std::size_t j = 0; j <= nb; ++j)
      rem[top - nb + j] = rem[top - nb + j] - factor * b.coefficients()[j];
  }
  rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(nb), rem.end());
  return {Polynomial<K>(std::move(quot)), Polynomial<K>(std::move(rem))};
}

/// Vieta expansion: prod (X - x_i), monic of degree n. Roots may repeat.
/// The coefficient of X^{n-k} is (-1)^k e_k(x_1..x_n). The empty product is
/// the constant 1, which needs a default-constructible scalar to conjure an
/// element from; prime-field callers must pass at least one root.
template <FieldElement K>
Polynomial<K> vieta_from_roots(std::span<const K> roots) {
  if (roots.empty()) {
    if constexpr (std::default_initializable<K>) {
      return Polynomial<K>::constant(one_like(K{}));
    } else {
      throw std::invalid_argument("vieta_from_roots: empty root list has no field context");
    }
  }
  std::vector<K> v{one_like(roots[0])};
  v.reserve(roots.size() + 1);
  for (const K& r : roots) {
    // multiply by (X - r) in place
    v.push_back(v.back());
    for (std::size_t i = v.size() - 2; i > 0; --i) v[i] = v[i - 1] - r * v[i];
    v[0] = -r * v[0];
  }
  return Polynomial<K>(std::move(v));
}

template <FieldElement K>
Polynomial<K> vieta_from_roots(const std::vector<K>& roots) {
  return vieta_from_roots(std::span<const K>(roots));
}

}  // namespace sylver
