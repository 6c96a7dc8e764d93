#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sylver/field.hpp"
#include "sylver/interpolation.hpp"
#include "sylver/nodes.hpp"
#include "sylver/reports.hpp"
#include "sylver/symmetric.hpp"
#include "sylver/weighted_sums.hpp"

namespace sylver {

// Executable checks for the identity family around the weighted power sums
//   S_d = sum_i x_i^d / prod_{j != i} (x_i - x_j).
// Each returns a CheckOutcome carrying both compared sides; callers decide
// how to render or assert.

/// Euler's identity: S_d = 0 for 0 <= d <= n-2 and S_{n-1} = 1.
template <FieldElement K>
CheckOutcome<K> verify_euler(const NodeSet<K>& ns, int d) {
  const int n = static_cast<int>(ns.size());
  if (d < 0 || d > n - 1)
    throw std::invalid_argument("verify_euler: requires 0 <= d <= n-1");
  CheckOutcome<K> c;
  c.identity = "euler";
  c.int_params = {{"n", n}, {"d", d}};
  c.lhs = {weighted_power_sum(ns, d)};
  const K zero = zero_like(ns[0]);
  c.rhs = {d == n - 1 ? one_like(ns[0]) : zero};
  c.settle();
  return c;
}

/// Sylvester's identity: S_d = h_{d-n+1}(x_1..x_n) for every d >= 0. The
/// brute-force h value is recorded alongside when its enumeration stays
/// within `brute_budget` terms (C(d, n-1) of them).
template <FieldElement K>
CheckOutcome<K> verify_sylvester(const NodeSet<K>& ns, int d,
                                 std::uint64_t brute_budget = 100'000) {
  const int n = static_cast<int>(ns.size());
  if (d < 0) throw std::invalid_argument("verify_sylvester: d must be non-negative");
  CheckOutcome<K> c;
  c.identity = "sylvester";
  c.int_params = {{"n", n}, {"d", d}};
  c.lhs = {weighted_power_sum(ns, d)};
  c.rhs = {h_fast(d - n + 1, ns.nodes())};
  if (composition_count(d - n + 1, n) <= brute_budget)
    c.extras.emplace_back("h_bruteforce", h_bruteforce(d - n + 1, ns.nodes(), brute_budget));
  c.settle();
  return c;
}

/// Extended Euler identity: for 0 <= d, m <= n-1,
///   sum_i x_i^d e_m(x_1..^x_i..x_n) / prod_{j != i} (x_i - x_j)
/// equals (-1)^m when d + m = n-1 and 0 otherwise.
template <FieldElement K>
CheckOutcome<K> verify_extended_euler(const NodeSet<K>& ns, int d, int m) {
  const int n = static_cast<int>(ns.size());
  if (d < 0 || d > n - 1 || m < 0 || m > n - 1)
    throw std::invalid_argument("verify_extended_euler: requires 0 <= d, m <= n-1");
  CheckOutcome<K> c;
  c.identity = "extended_euler";
  c.int_params = {{"n", n}, {"d", d}, {"m", m}};
  const auto xs = ns.nodes();
  const std::vector<K> w = barycentric_weights(ns);
  K sum = zero_like(xs[0]);
  for (std::size_t i = 0; i < xs.size(); ++i)
    sum = sum + field_pow(xs[i], static_cast<std::uint64_t>(d)) * e_omit(m, xs, i) * w[i];
  c.lhs = {sum};
  const K one = one_like(xs[0]);
  K expected = zero_like(xs[0]);
  if (d + m == n - 1) expected = (m % 2 == 0) ? one : -one;
  c.rhs = {expected};
  c.settle();
  return c;
}

/// Product identity: sum_i prod_{j != i} (1 - a x_i x_j) / (x_i - x_j)
/// equals a^{(n-1)/2} for odd n and 0 for even n, for any parameter a.
template <FieldElement K>
CheckOutcome<K> verify_f2(const NodeSet<K>& ns, const K& a) {
  const int n = static_cast<int>(ns.size());
  CheckOutcome<K> c;
  c.identity = "f2";
  c.int_params = {{"n", n}};
  c.value_params = {{"a", a}};
  const auto xs = ns.nodes();
  const std::vector<K> w = barycentric_weights(ns);
  const K one = one_like(xs[0]);
  K sum = zero_like(xs[0]);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    K numer = one;
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (j != i) numer = numer * (one - a * xs[i] * xs[j]);
    sum = sum + numer * w[i];
  }
  c.lhs = {sum};
  c.rhs = {n % 2 == 1 ? field_pow(a, static_cast<std::uint64_t>((n - 1) / 2))
                      : zero_like(xs[0])};
  c.settle();
  return c;
}

/// The h/e bridge h_d = sum_{k=1}^{n} (-1)^{k-1} e_k h_{d-k} for d >= 1.
/// Holds for any variable list, distinct or not.
template <FieldElement K>
CheckOutcome<K> verify_newton_relation(std::span<const K> xs, int d) {
  if (xs.empty()) throw std::invalid_argument("verify_newton_relation: empty variable list");
  if (d < 1) throw std::invalid_argument("verify_newton_relation: requires d >= 1");
  const std::size_t n = xs.size();
  CheckOutcome<K> c;
  c.identity = "newton";
  c.int_params = {{"n", static_cast<std::int64_t>(n)}, {"d", d}};
  c.lhs = {h_fast(d, xs)};
  const std::vector<K> e = e_via_vieta(xs);
  K acc = zero_like(xs[0]);
  bool negate = false;
  for (std::size_t k = 1; k <= n; ++k) {
    K term = e[k] * h_fast(d - static_cast<int>(k), xs);
    acc = negate ? acc - term : acc + term;
    negate = !negate;
  }
  c.rhs = {acc};
  c.settle();
  return c;
}

template <FieldElement K>
CheckOutcome<K> verify_newton_relation(const NodeSet<K>& ns, int d) {
  return verify_newton_relation(ns.nodes(), d);
}

/// Coefficient-wise comparison, through order K inclusive, of the two
/// exponential generating functions
///   sum_i w_i e^{x_i z}   and   sum_{d >= n-1} h_{d-n+1}(xs) z^d / d!.
/// Coefficients below z^{n-1} vanish on both sides. Exact fields only, and
/// the factorials through K! must be invertible (for F_p: K < p).
template <FieldElement K>
CheckOutcome<K> egf_truncated_check(const NodeSet<K>& ns, int trunc_order) {
  if constexpr (!is_exact_field_v<K>)
    throw std::invalid_argument("egf_truncated_check: exact fields only");
  const int n = static_cast<int>(ns.size());
  if (trunc_order < n - 1)
    throw std::invalid_argument("egf_truncated_check: truncation order must be >= n-1");
  CheckOutcome<K> c;
  c.identity = "egf";
  c.int_params = {{"n", n}, {"k", trunc_order}};
  const auto xs = ns.nodes();
  const std::vector<K> w = barycentric_weights(ns);
  const K zero = zero_like(xs[0]);

  std::vector<K> pow(xs.size(), one_like(xs[0]));  // x_i^d, advanced per degree
  K factorial = one_like(xs[0]);
  for (int d = 0; d <= trunc_order; ++d) {
    if (d > 0) {
      factorial = factorial * from_int_like(xs[0], d);
      for (std::size_t i = 0; i < xs.size(); ++i) pow[i] = pow[i] * xs[i];
    }
    if (factorial == zero)
      throw std::invalid_argument("egf_truncated_check: d! vanishes in this field");
    const K inv_fact = field_inverse(factorial);
    K lhs_coeff = zero;
    for (std::size_t i = 0; i < xs.size(); ++i) lhs_coeff = lhs_coeff + w[i] * pow[i];
    lhs_coeff = lhs_coeff * inv_fact;
    K rhs_coeff = d >= n - 1 ? h_fast(d - n + 1, xs) * inv_fact : zero;
    c.lhs.push_back(lhs_coeff);
    c.rhs.push_back(rhs_coeff);
  }
  c.settle();
  return c;
}

/// Coefficient-wise extended Sylvester check for d >= n: the remainder of
/// X^d modulo prod (X - x_i) from the closed-form double sum against the
/// same polynomial assembled from the interpolation expansion, whose X^m
/// coefficient is (-1)^{n-1-m} sum_i x_i^d e_{n-1-m}(..^x_i..) / denom_i.
/// The top coefficient pair reproduces Sylvester's identity itself.
template <FieldElement K>
CheckOutcome<K> extended_sylvester_check(const NodeSet<K>& ns, int d) {
  const int n = static_cast<int>(ns.size());
  if (d < n) throw std::invalid_argument("extended_sylvester_check: requires d >= n");
  CheckOutcome<K> c;
  c.identity = "extended_sylvester";
  c.int_params = {{"n", n}, {"d", d}};
  const auto xs = ns.nodes();
  const K zero = zero_like(xs[0]);

  const Polynomial<K> closed = remainder_closed_form(ns, d);
  const std::vector<K> w = barycentric_weights(ns);
  for (int m = 0; m < n; ++m) {
    c.lhs.push_back(closed.coeff_or(static_cast<std::size_t>(m), zero));
    K sum = zero;
    for (std::size_t i = 0; i < xs.size(); ++i)
      sum = sum + field_pow(xs[i], static_cast<std::uint64_t>(d)) *
                      e_omit(n - 1 - m, xs, i) * w[i];
    if ((n - 1 - m) % 2 == 1) sum = -sum;
    c.rhs.push_back(sum);
  }
  c.settle();
  return c;
}

/// Dilcher's identity over exact rationals:
///   sum_{i=1}^{n} (-1)^{i-1} C(n,i) / i^d
///     = sum_{1 <= i_1 <= ... <= i_d <= n} 1/(i_1 ... i_d),
/// the right side evaluated as h_d(1, 1/2, ..., 1/n). For n >= 2 the same
/// instance is cross-checked through Sylvester's identity at the nodes
/// x_i = 1/i with degree d+n-1; all sides must agree for a pass.
inline CheckOutcome<Rational> dilcher_check(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("dilcher_check: requires n >= 1 and d >= 1");
  CheckOutcome<Rational> c;
  c.identity = "dilcher";
  c.int_params = {{"n", n}, {"d", d}};

  const std::vector<BigInt> choose = binomial_row(static_cast<unsigned>(n));
  Rational lhs;
  for (int i = 1; i <= n; ++i) {
    Rational term(choose[static_cast<std::size_t>(i)],
                  boost::multiprecision::pow(BigInt(i), static_cast<unsigned>(d)));
    lhs = (i % 2 == 1) ? lhs + term : lhs - term;
  }

  std::vector<Rational> recip;
  recip.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) recip.emplace_back(BigInt(1), BigInt(i));
  const Rational rhs = h_fast(d, std::span<const Rational>(recip));

  c.lhs = {lhs};
  c.rhs = {rhs};
  c.settle();

  if (n >= 2) {
    const NodeSet<Rational> ns(recip);
    const Rational s = weighted_power_sum(ns, d + n - 1);
    c.extras.emplace_back("weighted_power_sum", s);
    // the Sylvester route must reproduce the very same two sides
    if (c.pass.value_or(false)) c.pass = (s == lhs);
  }
  return c;
}

}  // namespace sylver
