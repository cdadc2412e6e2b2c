#pragma once

#include <cstdint>

#include "fplevel/errors.hpp"

namespace fplevel {

/// Arithmetic context for the prime field F_p, 3 <= p < 2^31.
/// p = 2 is rejected: everything downstream assumes odd characteristic.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 3) fail(Errc::BadInput, "modulus must be an odd prime >= 3");
    if (p >= (1u << 31)) fail(Errc::BadInput, "modulus must be < 2^31");
    if (!is_prime(p)) fail(Errc::BadInput, "modulus " + std::to_string(p) + " is not prime");
  }

  std::uint32_t p() const { return p_; }

  std::uint32_t reduce(std::uint64_t a) const { return static_cast<std::uint32_t>(a % p_); }

  /// Canonical representative of a signed value.
  std::uint32_t reduce_signed(std::int64_t a) const {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }

  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint64_t base = a % p_, acc = 1;
    while (e) {
      if (e & 1) acc = acc * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (a % p_ == 0) fail(Errc::BadInput, "division by zero in F_p");
    return pow(a, p_ - 2);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

  /// Deterministic Miller-Rabin; the base set {2,3,5,7} is exact below 3.2e9.
  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
      if (n % q == 0) return n == q;
    }
    std::uint32_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
      d >>= 1;
      ++s;
    }
    for (std::uint64_t a : {2u, 3u, 5u, 7u}) {
      std::uint64_t x = 1, b = a % n, e = d;
      while (e) {
        if (e & 1) x = x * b % n;
        b = b * b % n;
        e >>= 1;
      }
      if (x == 1 || x == n - 1) continue;
      bool witness = true;
      for (int i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) {
          witness = false;
          break;
        }
      }
      if (witness) return false;
    }
    return true;
  }

 private:
  std::uint32_t p_;
};

}  // namespace fplevel
