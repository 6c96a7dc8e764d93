#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "sylver/random.hpp"
#include "sylver/symmetric.hpp"

using namespace sylver;

namespace {

constexpr std::uint64_t kP = 1000000007;

std::vector<PrimeFieldElement> random_values(Rng& rng, std::size_t n) {
  std::vector<PrimeFieldElement> xs;
  xs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) xs.emplace_back(rng.below(kP), kP);
  return xs;
}

}  // namespace

TEST_CASE("binomial rows match the factorial formula") {
  auto factorial = [](unsigned v) {
    BigInt f = 1;
    for (unsigned i = 2; i <= v; ++i) f *= i;
    return f;
  };
  for (unsigned n = 0; n <= 12; ++n) {
    const auto row = binomial_row(n);
    REQUIRE(row.size() == n + 1);
    for (unsigned k = 0; k <= n; ++k)
      CHECK(row[k] == factorial(n) / (factorial(k) * factorial(n - k)));
  }
  CHECK(binomial(5, 9) == 0);
  CHECK(binomial(52, 5) == BigInt(2598960));
}

TEST_CASE("composition enumeration is exhaustive, distinct, and ordered") {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k <= 6; ++k) {
      std::vector<std::vector<int>> seen;
      for_each_composition(k, n, [&](std::span<const int> c) {
        REQUIRE(c.size() == static_cast<std::size_t>(n));
        int sum = 0;
        for (int v : c) {
          CHECK(v >= 0);
          sum += v;
        }
        CHECK(sum == k);
        seen.emplace_back(c.begin(), c.end());
      });
      CHECK(BigInt(seen.size()) == composition_count(k, n));
      CHECK(std::is_sorted(seen.begin(), seen.end()));
      CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    }
  }
}

TEST_CASE("composition edge cases") {
  CHECK(composition_count(-3, 4) == 0);
  int visits = 0;
  for_each_composition(-1, 3, [&](std::span<const int>) { ++visits; });
  CHECK(visits == 0);
  CHECK_THROWS_AS(composition_count(2, 0), std::invalid_argument);
}

TEST_CASE("enumeration budget is enforced") {
  // h_30 of 12 variables indexes C(41,11) ~ 3.2e9 monomials, beyond the
  // default budget of 1e7.
  Rng rng(3);
  const auto xs = random_values(rng, 12);
  CHECK_THROWS_AS(h_bruteforce(30, std::span<const PrimeFieldElement>(xs)), budget_error);
  CHECK_NOTHROW(h_bruteforce(2, std::span<const PrimeFieldElement>(xs)));
}

TEST_CASE("fast h agrees with brute force") {
  Rng rng(21);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng.below(5);
    const int k = static_cast<int>(rng.below(7)) - 1;  // includes k = -1
    const auto xs = random_values(rng, n);
    const std::span<const PrimeFieldElement> sp(xs);
    CHECK(h_fast(k, sp) == h_bruteforce(k, sp));
  }
}

TEST_CASE("vieta e agrees with brute force") {
  Rng rng(22);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng.below(6);
    const auto xs = random_values(rng, n);
    const auto es = e_via_vieta(xs);
    REQUIRE(es.size() == n + 1);
    for (std::size_t k = 0; k <= n; ++k)
      CHECK(es[k] == e_bruteforce(static_cast<int>(k), std::span<const PrimeFieldElement>(xs)));
    CHECK(e_bruteforce(static_cast<int>(n) + 1, std::span<const PrimeFieldElement>(xs)) ==
          zero_like(xs[0]));
  }
}

TEST_CASE("newton style bridge between h and e") {
  // h_d = sum_{k=1..n} (-1)^{k-1} e_k h_{d-k} for d >= 1.
  Rng rng(23);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng.below(5);
    const auto xs = random_values(rng, n);
    const std::span<const PrimeFieldElement> sp(xs);
    const auto es = e_via_vieta(xs);
    for (int d = 1; d <= 8; ++d) {
      PrimeFieldElement acc = zero_like(xs[0]);
      for (std::size_t k = 1; k <= n; ++k) {
        const auto term = es[k] * h_fast(d - static_cast<int>(k), sp);
        acc = (k % 2 == 1) ? acc + term : acc - term;
      }
      CHECK(h_fast(d, sp) == acc);
    }
  }
}

TEST_CASE("h and e are symmetric in their arguments") {
  Rng rng(24);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng.below(4);
    auto xs = random_values(rng, n);
    auto ys = xs;
    // Fisher-Yates with our own generator.
    for (std::size_t i = ys.size(); i-- > 1;)
      std::swap(ys[i], ys[rng.below(i + 1)]);
    const int k = static_cast<int>(rng.below(6));
    CHECK(h_fast(k, std::span<const PrimeFieldElement>(xs)) ==
          h_fast(k, std::span<const PrimeFieldElement>(ys)));
    CHECK(e_via_vieta(xs).at(std::min<std::size_t>(k, n)) ==
          e_via_vieta(ys).at(std::min<std::size_t>(k, n)));
  }
}

TEST_CASE("e_omit matches e on the reduced variable list") {
  Rng rng(25);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + rng.below(5);
    const auto xs = random_values(rng, n);
    const std::size_t omit = rng.below(n);
    std::vector<PrimeFieldElement> reduced;
    for (std::size_t i = 0; i < n; ++i)
      if (i != omit) reduced.push_back(xs[i]);
    for (int m = 0; m <= static_cast<int>(n); ++m)
      CHECK(e_omit(m, std::span<const PrimeFieldElement>(xs), omit) ==
            e_bruteforce(m, std::span<const PrimeFieldElement>(reduced)));
  }
  const auto xs = random_values(rng, 3);
  CHECK_THROWS_AS(e_omit(1, std::span<const PrimeFieldElement>(xs), 3), std::out_of_range);
}

TEST_CASE("empty variable list conventions") {
  const std::span<const Rational> none;
  CHECK(h_bruteforce(0, none) == Rational(1));
  CHECK(h_fast(0, none) == Rational(1));
  CHECK(h_fast(3, none) == Rational());
  CHECK(e_bruteforce(0, none) == Rational(1));
  CHECK(e_bruteforce(2, none) == Rational());
}
