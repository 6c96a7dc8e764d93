#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "sylver/field.hpp"
#include "sylver/nodes.hpp"
#include "sylver/symmetric.hpp"

namespace sylver {

/// Entry i is prod_{j != i} (x_i - x_j); nonzero since nodes are distinct.
template <FieldElement K>
std::vector<K> lagrange_denominators(const NodeSet<K>& ns) {
  const auto xs = ns.nodes();
  std::vector<K> out;
  out.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    K prod = one_like(xs[i]);
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (j != i) prod = prod * (xs[i] - xs[j]);
    out.push_back(prod);
  }
  return out;
}

/// Partial-fraction weights w_i = 1 / prod_{j != i} (x_i - x_j). They sum to
/// zero for every valid node set.
template <FieldElement K>
std::vector<K> barycentric_weights(const NodeSet<K>& ns) {
  std::vector<K> w = lagrange_denominators(ns);
  for (K& v : w) v = field_inverse(v);
  return w;
}

/// The weighted power sum S_d = sum_i x_i^d / prod_{j != i} (x_i - x_j),
/// computed directly from the definition.
template <FieldElement K>
K weighted_power_sum(const NodeSet<K>& ns, int d) {
  if (d < 0) throw std::invalid_argument("weighted_power_sum: d must be non-negative");
  const auto xs = ns.nodes();
  const std::vector<K> w = barycentric_weights(ns);
  K sum = zero_like(xs[0]);
  for (std::size_t i = 0; i < xs.size(); ++i)
    sum = sum + field_pow(xs[i], static_cast<std::uint64_t>(d)) * w[i];
  return sum;
}

/// S_d by the adjoin-one-node recurrence
///   S_d(x_1..x_m) = sum_{e=0}^{d-1} S_e(x_1..x_{m-1}) x_m^{d-e-1},
/// recursing on the prefix length down to the two-node base case, where S_d
/// is the geometric sum h_{d-1}(x_1, x_2). Memoized level by level; O(n d^2).
template <FieldElement K>
K s_via_sylvester_recurrence(const NodeSet<K>& ns, int d) {
  if (d < 0) throw std::invalid_argument("s_via_sylvester_recurrence: d must be non-negative");
  const auto xs = ns.nodes();
  const std::size_t n = xs.size();
  const K zero = zero_like(xs[0]);
  const std::size_t deg = static_cast<std::size_t>(d);

  // Two-node base: S_e = h_{e-1}(x_1, x_2), built from h_k = x_2 h_{k-1} + x_1^k.
  std::vector<K> level(deg + 1, zero);
  {
    K h = one_like(xs[0]);
    K x1pow = one_like(xs[0]);
    for (std::size_t e = 1; e <= deg; ++e) {
      level[e] = h;
      x1pow = x1pow * xs[0];
      h = xs[1] * h + x1pow;
    }
  }

  for (std::size_t m = 3; m <= n; ++m) {
    const K& xm = xs[m - 1];
    std::vector<K> next(deg + 1, zero);
    for (std::size_t dd = 1; dd <= deg; ++dd) {
      K acc = zero;
      for (std::size_t e = 0; e < dd; ++e) acc = acc * xm + level[e];
      next[dd] = acc;
    }
    level = std::move(next);
  }
  return level[deg];
}

/// S_d by the order-n linear recurrence
///   W_d = sum_{k=1}^{n} (-1)^{k-1} e_k W_{d-k},
/// hard-seeded with the Euler values W_0..W_{n-2} = 0, W_{n-1} = 1.
template <FieldElement K>
K s_via_order_n_recurrence(const NodeSet<K>& ns, int d) {
  if (d < 0) throw std::invalid_argument("s_via_order_n_recurrence: d must be non-negative");
  const auto xs = ns.nodes();
  const std::size_t n = xs.size();
  const K zero = zero_like(xs[0]);
  const std::size_t deg = static_cast<std::size_t>(d);

  std::vector<K> w(std::max(deg + 1, n), zero);
  w[n - 1] = one_like(xs[0]);
  if (deg < n) return w[deg];

  const std::vector<K> e = e_via_vieta(xs);
  for (std::size_t dd = n; dd <= deg; ++dd) {
    K acc = zero;
    bool negate = false;
    for (std::size_t k = 1; k <= n; ++k) {
      K term = e[k] * w[dd - k];
      acc = negate ? acc - term : acc + term;
      negate = !negate;
    }
    w[dd] = acc;
  }
  return w[deg];
}

}  // namespace sylver
