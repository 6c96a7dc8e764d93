// Conversions between the three field realizations, the deterministic RNG,
// and the node samplers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "sylver/convert.hpp"
#include "sylver/parse.hpp"
#include "sylver/random.hpp"

using namespace sylver;

TEST_CASE("doubles convert to exact dyadic rationals") {
  CHECK(rational_from_double(0.5) == Rational(1, 2));
  CHECK(rational_from_double(-0.75) == Rational(-3, 4));
  CHECK(rational_from_double(3.0) == Rational(3));
  CHECK(rational_from_double(0.0) == Rational());
  CHECK(rational_from_double(0.1) != Rational(1, 10));  // 0.1 is not dyadic
  CHECK_THROWS_AS(rational_from_double(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_double(INFINITY), std::invalid_argument);
  // Smallest positive subnormal.
  CHECK(rational_from_double(std::ldexp(1.0, -1074)) == Rational(BigInt(1), BigInt(1) << 1074));
}

TEST_CASE("double round trips through rational exactly") {
  Rng rng(1);
  for (int t = 0; t < 400; ++t) {
    const double x = std::ldexp(rng.unit() - 0.5, static_cast<int>(rng.below(80)) - 40);
    CHECK(double_from_rational(rational_from_double(x)) == x);
  }
}

TEST_CASE("rational to double is accurate for non-dyadic values") {
  CHECK(double_from_rational(Rational(1, 3)) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(double_from_rational(Rational(-22, 7)) == doctest::Approx(-22.0 / 7.0).epsilon(1e-15));
  // Huge value: 10^40 as a rational, converted without intermediate overflow.
  BigInt big = 1;
  for (int i = 0; i < 40; ++i) big *= 10;
  CHECK(double_from_rational(Rational(big)) == doctest::Approx(1e40).epsilon(1e-12));
  CHECK(double_from_rational(Rational(BigInt(1), big)) == doctest::Approx(1e-40).epsilon(1e-12));
}

TEST_CASE("reduction mod p matches integer arithmetic") {
  CHECK(to_prime_field(Rational(10), 7).value() == 3);
  CHECK(to_prime_field(Rational(-1), 7).value() == 6);
  CHECK(to_prime_field(Rational(1, 2), 7).value() == 4);  // 2*4 = 8 = 1 mod 7
  CHECK_THROWS_AS(to_prime_field(Rational(3, 14), 7), std::domain_error);
}

TEST_CASE("rng streams are reproducible and seed sensitive") {
  Rng a(42), b(42), c(43);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 100; ++i) {
    const auto va = a.next();
    all_equal = all_equal && va == b.next();
    any_diff = any_diff || va != c.next();
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("bounded draws stay in range and hit every value") {
  Rng rng(7);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto v = rng.below(10);
    CHECK(v < 10);
    seen.insert(v);
  }
  CHECK(seen.size() == 10);
  std::set<std::int64_t> ranged;
  for (int i = 0; i < 2000; ++i) {
    const auto v = rng.range(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
    ranged.insert(v);
  }
  CHECK(ranged.size() == 7);
  CHECK_THROWS_AS(rng.below(0), std::invalid_argument);
  CHECK_THROWS_AS(rng.range(2, 1), std::invalid_argument);
  CHECK(rng.range(5, 5) == 5);
}

TEST_CASE("unit draws live in the half open interval") {
  Rng rng(9);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("trial seeds differ across indices and masters") {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 1000; ++i) seeds.insert(trial_seed(5, i));
  CHECK(seeds.size() == 1000);
  CHECK(trial_seed(5, 0) != trial_seed(6, 0));
}

TEST_CASE("node samplers return distinct values of the right shape") {
  Rng rng(31);
  const auto ps = sample_distinct_prime_nodes(rng, 8, 101);
  CHECK(ps.size() == 8);
  std::set<std::uint64_t> pv;
  for (const auto& x : ps) pv.insert(x.value());
  CHECK(pv.size() == 8);

  const auto qs = sample_distinct_rational_nodes(rng, 10);
  std::set<std::string> qv;
  for (const auto& x : qs) qv.insert(x.str());
  CHECK(qv.size() == 10);

  const auto ds = sample_spread_nodes(rng, 5, 0.25);
  REQUIRE(ds.size() == 5);
  for (std::size_t i = 1; i < ds.size(); ++i) {
    CHECK(ds[i] - ds[i - 1] >= 0.25);
    CHECK(ds[i] - ds[i - 1] < 0.5);
  }
  CHECK_THROWS_AS(sample_distinct_prime_nodes(rng, 12, 11), std::invalid_argument);
  CHECK_THROWS_AS(sample_spread_nodes(rng, 3, 0.0), std::invalid_argument);
}

TEST_CASE("value parsers") {
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational(" +6/4 ") == Rational(3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);

  CHECK(parse_rational_list("1,3/2,-2") ==
        std::vector<Rational>{Rational(1), Rational(3, 2), Rational(-2)});
  CHECK_THROWS_AS(parse_rational_list("1,,2"), std::invalid_argument);

  const IntRange r = parse_int_range("2..8");
  CHECK(r.lo == 2);
  CHECK(r.hi == 8);
  CHECK(to_string(r) == "2..8");
  CHECK_THROWS_AS(parse_int_range("8..2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_int_range("5"), std::invalid_argument);

  CHECK(parse_int_list("2,4,6") == std::vector<int>{2, 4, 6});
  CHECK(parse_double_list("1,0.5,1e-6") == std::vector<double>{1.0, 0.5, 1e-6});
  CHECK_THROWS_AS(parse_double_list("1,zz"), std::invalid_argument);
}
