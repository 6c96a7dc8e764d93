#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "sylver/field.hpp"
#include "sylver/nodes.hpp"
#include "sylver/polynomial.hpp"
#include "sylver/symmetric.hpp"
#include "sylver/weighted_sums.hpp"

namespace sylver {

/// The unique polynomial of degree < n through (x_i, values_i), built as
/// sum_i values_i prod_{j != i} (X - x_j) / (x_i - x_j).
template <FieldElement K>
Polynomial<K> lagrange_interpolate(const NodeSet<K>& ns, std::span<const K> values) {
  if (values.size() != ns.size())
    throw std::invalid_argument("lagrange_interpolate: one value per node required");
  const auto xs = ns.nodes();
  const std::vector<K> w = barycentric_weights(ns);
  Polynomial<K> sum;
  std::vector<K> others;
  others.reserve(xs.size() - 1);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    others.clear();
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (j != i) others.push_back(xs[j]);
    sum = sum + vieta_from_roots(std::span<const K>(others)) * (values[i] * w[i]);
  }
  return sum;
}

template <FieldElement K>
Polynomial<K> lagrange_interpolate(const NodeSet<K>& ns, const std::vector<K>& values) {
  return lagrange_interpolate(ns, std::span<const K>(values));
}

/// The remainder of X^d upon division by prod (X - x_i), d >= n, from the
/// explicit double sum
///   R(X) = sum_{m=0}^{n-1} ( sum_{k=n-m}^{n} (-1)^{k-1} e_k h_{d-m-k} ) X^m.
/// Indices d-m-k below zero contribute nothing via the h_{<0} = 0 convention.
/// The X^{n-1} coefficient is h_{d-n+1}.
template <FieldElement K>
Polynomial<K> remainder_closed_form(const NodeSet<K>& ns, int d) {
  const int n = static_cast<int>(ns.size());
  if (d < n) throw std::invalid_argument("remainder_closed_form: requires d >= n");
  const auto xs = ns.nodes();
  const K zero = zero_like(xs[0]);

  const std::vector<K> e = e_via_vieta(xs);
  // h_0..h_{d-1} suffice: the largest index used is d - 0 - 1.
  std::vector<K> h(static_cast<std::size_t>(d), zero);
  {
    // same rolling dynamic program as h_fast, keeping the whole row
    h[0] = one_like(xs[0]);
    for (const K& x : xs)
      for (std::size_t m = 1; m < h.size(); ++m) h[m] = h[m] + x * h[m - 1];
  }

  std::vector<K> coeffs(static_cast<std::size_t>(n), zero);
  for (int m = 0; m < n; ++m) {
    K acc = zero;
    for (int k = n - m; k <= n; ++k) {
      const int hi = d - m - k;
      if (hi < 0) continue;
      K term = e[static_cast<std::size_t>(k)] * h[static_cast<std::size_t>(hi)];
      acc = (k % 2 == 1) ? acc + term : acc - term;
    }
    coeffs[static_cast<std::size_t>(m)] = acc;
  }
  return Polynomial<K>(std::move(coeffs));
}

}  // namespace sylver
