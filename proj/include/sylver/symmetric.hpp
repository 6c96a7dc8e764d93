#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "sylver/field.hpp"
#include "sylver/polynomial.hpp"

namespace sylver {

/// Thrown when a brute-force enumeration would exceed its term budget.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Row n of Pascal's triangle, exact.
inline std::vector<BigInt> binomial_row(unsigned n) {
  std::vector<BigInt> row{BigInt(1)};
  for (unsigned m = 1; m <= n; ++m) {
    row.push_back(BigInt(1));
    for (std::size_t i = m - 1; i >= 1; --i) row[i] += row[i - 1];
  }
  return row;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return BigInt(0);
  return binomial_row(n)[k];
}

/// Number of compositions of k into exactly n non-negative parts,
/// C(k+n-1, n-1); zero for k < 0.
inline BigInt composition_count(int k, int n) {
  if (n <= 0) throw std::invalid_argument("composition_count: n must be positive");
  if (k < 0) return BigInt(0);
  return binomial(static_cast<unsigned>(k + n - 1), static_cast<unsigned>(n - 1));
}

/// Visits every composition of k into exactly n non-negative parts, each
/// exactly once, in lexicographic order of the parts tuple. The span passed
/// to the visitor is only valid during the call.
template <class F>
void for_each_composition(int k, int n, F&& visit) {
  if (n <= 0) throw std::invalid_argument("for_each_composition: n must be positive");
  if (k < 0) return;
  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  parts.back() = k;
  for (;;) {
    visit(std::span<const int>(parts));
    // Find the rightmost position with mass strictly to its right, bump it,
    // and dump the leftover mass into the last slot.
    int i = n - 2;
    int right = parts[static_cast<std::size_t>(n) - 1];
    while (i >= 0 && right == 0) {
      right += parts[static_cast<std::size_t>(i)];
      --i;
    }
    if (i < 0) return;
    ++parts[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) parts[static_cast<std::size_t>(j)] = 0;
    parts.back() = right - 1;
  }
}

namespace detail {

// Empty variable lists still have h_0 = e_0 = 1; producing that constant
// needs a default-constructible scalar.
template <FieldElement K>
K unit_for_empty() {
  if constexpr (std::default_initializable<K>) {
    return one_like(K{});
  } else {
    throw std::invalid_argument("symmetric function of an empty list has no field context");
  }
}

}  // namespace detail

/// Complete homogeneous symmetric function h_k by full monomial enumeration.
/// Conventions: h_0 = 1, h_k = 0 for k < 0. Refuses enumerations larger than
/// `budget` terms.
template <FieldElement K>
K h_bruteforce(int k, std::span<const K> xs, std::uint64_t budget = kDefaultEnumerationBudget) {
  const int n = static_cast<int>(xs.size());
  if (n == 0) {
    K one = detail::unit_for_empty<K>();
    return k == 0 ? one : one - one;
  }
  const K zero = zero_like(xs[0]);
  if (k < 0) return zero;
  if (k == 0) return one_like(xs[0]);
  if (composition_count(k, n) > budget)
    throw budget_error("h_bruteforce: enumeration budget exceeded");
  K sum = zero;
  for_each_composition(k, n, [&](std::span<const int> parts) {
    K term = one_like(xs[0]);
    for (int i = 0; i < n; ++i)
      term = term * field_pow(xs[static_cast<std::size_t>(i)],
                              static_cast<std::uint64_t>(parts[static_cast<std::size_t>(i)]));
    sum = sum + term;
  });
  return sum;
}

/// h_k via the adjoin-one-variable recurrence
///   h_m(x_1..x_j) = h_m(x_1..x_{j-1}) + x_j h_{m-1}(x_1..x_j),
/// evaluated as an O(n k) dynamic program over one rolling row.
template <FieldElement K>
K h_fast(int k, std::span<const K> xs) {
  if (xs.empty()) {
    K one = detail::unit_for_empty<K>();
    return k == 0 ? one : one - one;
  }
  if (k < 0) return zero_like(xs[0]);
  std::vector<K> row(static_cast<std::size_t>(k) + 1, zero_like(xs[0]));
  row[0] = one_like(xs[0]);
  for (const K& x : xs)
    for (std::size_t m = 1; m < row.size(); ++m) row[m] = row[m] + x * row[m - 1];
  return row.back();
}

/// Elementary symmetric function e_k by k-subset enumeration.
/// Conventions: e_0 = 1, e_k = 0 for k < 0 or k > n.
template <FieldElement K>
K e_bruteforce(int k, std::span<const K> xs, std::uint64_t budget = kDefaultEnumerationBudget) {
  const int n = static_cast<int>(xs.size());
  if (n == 0) {
    K one = detail::unit_for_empty<K>();
    return k == 0 ? one : one - one;
  }
  const K zero = zero_like(xs[0]);
  if (k < 0 || k > n) return zero;
  if (k == 0) return one_like(xs[0]);
  if (binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) > BigInt(budget))
    throw budget_error("e_bruteforce: enumeration budget exceeded");
  // Standard combination walk over index vectors i_0 < i_1 < ... < i_{k-1}.
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  K sum = zero;
  for (;;) {
    K term = one_like(xs[0]);
    for (int i : idx) term = term * xs[static_cast<std::size_t>(i)];
    sum = sum + term;
    int j = k - 1;
    while (j >= 0 && idx[static_cast<std::size_t>(j)] == n - k + j) --j;
    if (j < 0) break;
    ++idx[static_cast<std::size_t>(j)];
    for (int t = j + 1; t < k; ++t)
      idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
  }
  return sum;
}

/// All of e_0..e_n at once, read off the signed coefficients of
/// prod (X - x_i): e_k = (-1)^k [X^{n-k}].
template <FieldElement K>
std::vector<K> e_via_vieta(std::span<const K> xs) {
  if (xs.empty()) return {detail::unit_for_empty<K>()};
  const Polynomial<K> p = vieta_from_roots(xs);
  const std::size_t n = xs.size();
  std::vector<K> e;
  e.reserve(n + 1);
  bool negate = false;
  for (std::size_t k = 0; k <= n; ++k) {
    K c = p.coefficients()[n - k];
    e.push_back(negate ? -c : c);
    negate = !negate;
  }
  return e;
}

template <FieldElement K>
std::vector<K> e_via_vieta(const std::vector<K>& xs) {
  return e_via_vieta(std::span<const K>(xs));
}

/// e_m of the list with the element at (zero-based) position `omit` removed.
template <FieldElement K>
K e_omit(int m, std::span<const K> xs, std::size_t omit) {
  if (omit >= xs.size()) throw std::out_of_range("e_omit: index out of range");
  std::vector<K> reduced;
  reduced.reserve(xs.size() - 1);
  for (std::size_t j = 0; j < xs.size(); ++j)
    if (j != omit) reduced.push_back(xs[j]);
  const int n = static_cast<int>(reduced.size());
  if (m < 0 || m > n) return zero_like(xs[0]);
  if (n == 0) return one_like(xs[0]);  // m == 0 here
  return e_via_vieta(std::span<const K>(reduced))[static_cast<std::size_t>(m)];
}

}  // namespace sylver
