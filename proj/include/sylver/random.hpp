#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "sylver/field.hpp"

namespace sylver {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Seed for one trial of a campaign. Mixing the index through splitmix64
/// keeps trials independent of each other and of the thread that runs them.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t s = master ^ (index + 1) * 0x9e3779b97f4a7c15ull;
  std::uint64_t a = splitmix64(s);
  std::uint64_t b = splitmix64(s);
  return a ^ (b << 1);
}

/// Uniform draws over mt19937_64. std::uniform_int_distribution is
/// implementation-defined, so bounded draws use explicit rejection sampling
/// to keep output byte-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    const std::uint64_t threshold = (-bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("Rng::range: empty range");
    const auto width = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (width == 0) return static_cast<std::int64_t>(engine_());  // full 64-bit span
    return lo + static_cast<std::int64_t>(below(width));
  }

  /// Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Distinct residues mod p; requires p > n so the rejection loop terminates.
inline std::vector<PrimeFieldElement> sample_distinct_prime_nodes(Rng& rng, std::size_t n,
                                                                  std::uint64_t p) {
  if (p <= n) throw std::invalid_argument("sample_distinct_prime_nodes: modulus too small");
  std::vector<std::uint64_t> raw;
  raw.reserve(n);
  while (raw.size() < n) {
    const std::uint64_t v = rng.below(p);
    bool seen = false;
    for (std::uint64_t u : raw) seen = seen || (u == v);
    if (!seen) raw.push_back(v);
  }
  std::vector<PrimeFieldElement> out;
  out.reserve(n);
  for (std::uint64_t v : raw) out.emplace_back(v, p);
  return out;
}

/// Distinct small rationals num/den with |num| <= max_abs_num, 1 <= den <= max_den.
inline std::vector<Rational> sample_distinct_rational_nodes(Rng& rng, std::size_t n,
                                                            std::int64_t max_abs_num = 30,
                                                            std::int64_t max_den = 12) {
  if (max_abs_num < 1 || max_den < 1)
    throw std::invalid_argument("sample_distinct_rational_nodes: degenerate bounds");
  if (static_cast<std::uint64_t>(2 * max_abs_num + 1) * static_cast<std::uint64_t>(max_den) <
      2 * n)
    throw std::invalid_argument("sample_distinct_rational_nodes: value pool too small");
  std::vector<Rational> out;
  out.reserve(n);
  while (out.size() < n) {
    const Rational v(rng.range(-max_abs_num, max_abs_num), rng.range(1, max_den));
    bool seen = false;
    for (const Rational& u : out) seen = seen || (u == v);
    if (!seen) out.push_back(v);
  }
  return out;
}

/// Increasing doubles with consecutive gaps in [spread, 2*spread); used to
/// probe float64 behaviour as nodes cluster.
inline std::vector<double> sample_spread_nodes(Rng& rng, std::size_t n, double spread) {
  if (!(spread > 0.0)) throw std::invalid_argument("sample_spread_nodes: spread must be positive");
  std::vector<double> out;
  out.reserve(n);
  double x = rng.unit();
  out.push_back(x);
  for (std::size_t i = 1; i < n; ++i) {
    x += spread * (1.0 + rng.unit());
    out.push_back(x);
  }
  return out;
}

}  // namespace sylver
