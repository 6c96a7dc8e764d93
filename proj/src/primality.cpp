#include "sylver/prime_field.hpp"

#include <array>

namespace sylver {

namespace {

// One strong-probable-prime round to base a.
bool sprp_round(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  a %= n;
  if (a == 0) return true;
  std::uint64_t x = detail::pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = detail::mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // This base set decides primality for every n < 3.3 * 10^24, so it covers
  // the whole 64-bit range.
  constexpr std::array<std::uint64_t, 12> bases = {2,  3,  5,  7,  11, 13,
                                                   17, 19, 23, 29, 31, 37};
  for (std::uint64_t a : bases) {
    if (!sprp_round(n, a, d, s)) return false;
  }
  return true;
}

}  // namespace sylver
