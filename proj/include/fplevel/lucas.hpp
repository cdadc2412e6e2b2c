#pragma once

#include <cstdint>
#include <vector>

#include "fplevel/prime_field.hpp"

namespace fplevel {

namespace detail {
// C(a,b) mod p for 0 <= b <= a < p, by the multiplicative formula.
inline std::uint32_t small_binomial(std::uint32_t a, std::uint32_t b, const PrimeField& F) {
  if (b > a) return 0;
  if (b > a - b) b = a - b;
  std::uint32_t num = 1, den = 1;
  for (std::uint32_t i = 1; i <= b; ++i) {
    num = F.mul(num, F.reduce(a + 1 - i));
    den = F.mul(den, i);
  }
  return F.mul(num, F.inv(den == 0 ? 1 : den));
}
}  // namespace detail

/// C(a,b) mod p via base-p digit products (Lucas' theorem); 0 when b > a.
inline std::uint32_t lucas_binomial(std::uint64_t a, std::uint64_t b, const PrimeField& F) {
  if (b > a) return 0;
  const std::uint64_t p = F.p();
  std::uint32_t acc = 1;
  while (a || b) {
    std::uint32_t da = static_cast<std::uint32_t>(a % p);
    std::uint32_t db = static_cast<std::uint32_t>(b % p);
    if (db > da) return 0;
    acc = F.mul(acc, detail::small_binomial(da, db, F));
    if (acc == 0) return 0;
    a /= p;
    b /= p;
  }
  return acc;
}

/// multinomial(total; parts) mod p, by iterated Lucas binomials.
/// Zero unless the parts sum to `total`.
inline std::uint32_t lucas_multinomial(std::uint64_t total, const std::vector<std::uint64_t>& parts,
                                       const PrimeField& F) {
  std::uint64_t sum = 0;
  for (auto v : parts) sum += v;
  if (sum != total) return 0;
  std::uint32_t acc = 1;
  std::uint64_t rem = total;
  for (auto v : parts) {
    acc = F.mul(acc, lucas_binomial(rem, v, F));
    if (acc == 0) return 0;
    rem -= v;
  }
  return acc;
}

}  // namespace fplevel
