#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sylver/polynomial.hpp"
#include "sylver/random.hpp"

using namespace sylver;

namespace {

using PolyP = Polynomial<PrimeFieldElement>;
constexpr std::uint64_t kP = 101;

PolyP random_poly(Rng& rng, std::size_t max_deg) {
  const std::size_t len = static_cast<std::size_t>(rng.below(max_deg + 2));
  std::vector<PrimeFieldElement> cs;
  cs.reserve(len);
  for (std::size_t i = 0; i < len; ++i) cs.emplace_back(rng.below(kP), kP);
  return PolyP(std::move(cs));  // trailing zeros trim; degree may come out lower
}

}  // namespace

TEST_CASE("degree bookkeeping and trimming") {
  const Polynomial<Rational> z;
  CHECK(z.is_zero());
  CHECK(!z.degree().has_value());
  CHECK(Polynomial<Rational>(std::vector<Rational>{Rational(), Rational()}).is_zero());
  const auto p = Polynomial<Rational>(std::vector<Rational>{Rational(1), Rational(), Rational()});
  CHECK(p.degree() == 0);
  CHECK(Polynomial<Rational>::monomial(Rational(3), 4).degree() == 4);
  CHECK(Polynomial<Rational>::monomial(Rational(), 4).is_zero());
  CHECK(p.coeff_or(7, Rational()) == Rational());
  CHECK_THROWS_AS(z.leading(), std::domain_error);
}

TEST_CASE("ring laws on random polynomials") {
  Rng rng(11);
  for (int t = 0; t < 150; ++t) {
    const PolyP a = random_poly(rng, 6);
    const PolyP b = random_poly(rng, 6);
    const PolyP c = random_poly(rng, 6);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == PolyP());
    if (!a.is_zero() && !b.is_zero())
      CHECK(*(a * b).degree() == *a.degree() + *b.degree());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  Rng rng(12);
  for (int t = 0; t < 150; ++t) {
    const PolyP a = random_poly(rng, 6);
    const PolyP b = random_poly(rng, 6);
    const PrimeFieldElement x(rng.below(kP), kP);
    CHECK(evaluate(a + b, x) == evaluate(a, x) + evaluate(b, x));
    CHECK(evaluate(a * b, x) == evaluate(a, x) * evaluate(b, x));
  }
}

TEST_CASE("divrem round trip on random pairs") {
  Rng rng(13);
  for (int t = 0; t < 300; ++t) {
    const PolyP a = random_poly(rng, 9);
    PolyP b = random_poly(rng, 5);
    if (b.is_zero()) b = PolyP::monomial(PrimeFieldElement(1, kP), 1);
    const auto qr = divrem(a, b);
    CHECK(qr.quotient * b + qr.remainder == a);
    if (!qr.remainder.is_zero()) CHECK(*qr.remainder.degree() < *b.degree());
  }
}

TEST_CASE("divrem rejects a zero divisor") {
  CHECK_THROWS_AS(divrem(PolyP::monomial(PrimeFieldElement(1, kP), 2), PolyP()),
                  std::domain_error);
}

TEST_CASE("vieta roots are roots") {
  Rng rng(14);
  for (int t = 0; t < 100; ++t) {
    std::vector<PrimeFieldElement> roots;
    const std::size_t n = 1 + rng.below(6);
    for (std::size_t i = 0; i < n; ++i) roots.emplace_back(rng.below(kP), kP);
    const PolyP v = vieta_from_roots(roots);
    CHECK(*v.degree() == n);
    CHECK(v.leading() == one_like(roots[0]));
    for (const auto& r : roots) CHECK(evaluate(v, r) == zero_like(r));
  }
}

TEST_CASE("vieta over a prime field rejects the empty product") {
  // No element to conjure a modulus from; rationals return the constant 1.
  CHECK_THROWS_AS(vieta_from_roots(std::vector<PrimeFieldElement>{}), std::invalid_argument);
  CHECK(vieta_from_roots(std::vector<Rational>{}) ==
        Polynomial<Rational>::constant(Rational(1)));
}

TEST_CASE("scalar multiplication") {
  const auto p = Polynomial<Rational>(std::vector<Rational>{Rational(1), Rational(2)});
  CHECK(p * Rational(3) == Polynomial<Rational>(std::vector<Rational>{Rational(3), Rational(6)}));
  CHECK((p * Rational()).is_zero());
}
