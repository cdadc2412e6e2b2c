#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "fplevel/errors.hpp"

namespace fplevel {

/// Exponents are guarded below 2^31 so sums and p-power scalings stay inside
/// 64-bit intermediates.
inline constexpr std::uint64_t kMaxExponent = (1ull << 31) - 1;

/// Exponent tuple (x_0 ... x_n). Immutable after construction.
class Monomial {
 public:
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

  static Monomial one(std::uint32_t nvars) {
    return Monomial(std::vector<std::uint32_t>(nvars, 0));
  }

  static Monomial variable(std::uint32_t nvars, std::uint32_t i, std::uint32_t exp = 1) {
    std::vector<std::uint32_t> e(nvars, 0);
    e.at(i) = exp;
    return Monomial(std::move(e));
  }

  std::uint32_t nvars() const { return static_cast<std::uint32_t>(e_.size()); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  std::uint64_t degree() const {
    return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
  }

  bool is_one() const {
    for (auto v : e_)
      if (v) return false;
    return true;
  }

  Monomial times(const Monomial& o) const {
    std::vector<std::uint32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      std::uint64_t s = std::uint64_t{e_[i]} + o.e_[i];
      if (s > kMaxExponent) fail(Errc::DegreeOverflow, "monomial exponent exceeds guard");
      r[i] = static_cast<std::uint32_t>(s);
    }
    return Monomial(std::move(r));
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  /// o / this; caller guarantees divisibility.
  Monomial divide_into(const Monomial& o) const {
    std::vector<std::uint32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = o.e_[i] - e_[i];
    return Monomial(std::move(r));
  }

  /// Componentwise residue mod q.
  Monomial mod_q(std::uint64_t q) const {
    std::vector<std::uint32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
      r[i] = static_cast<std::uint32_t>(e_[i] % q);
    return Monomial(std::move(r));
  }

  /// Componentwise quotient by q.
  Monomial div_q(std::uint64_t q) const {
    std::vector<std::uint32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
      r[i] = static_cast<std::uint32_t>(e_[i] / q);
    return Monomial(std::move(r));
  }

  /// Componentwise scaling by q (the Frobenius exponent map).
  Monomial scale(std::uint64_t q) const {
    std::vector<std::uint32_t> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      std::uint64_t s = std::uint64_t{e_[i]} * q;
      if (s > kMaxExponent) fail(Errc::DegreeOverflow, "monomial exponent exceeds guard");
      r[i] = static_cast<std::uint32_t>(s);
    }
    return Monomial(std::move(r));
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  std::vector<std::uint32_t> e_;
};

/// Graded lexicographic order, x_0 > x_1 > ... Used everywhere a monomial
/// order is needed: term storage, column order, printing.
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
  std::uint64_t da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (std::uint32_t i = 0; i < a.nvars(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

inline bool grlex_less(const Monomial& a, const Monomial& b) { return grlex_greater(b, a); }

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : m.exponents()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// All monomials of total degree d in `nvars` variables, in descending
/// graded-lex order.
std::vector<Monomial> monomials_of_degree(std::uint32_t nvars, std::uint32_t d);

}  // namespace fplevel
