#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fplevel/frobenius.hpp"
#include "fplevel/homideal.hpp"
#include "fplevel/polynomial.hpp"

namespace fplevel {

/// Reduced non-negative rational.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator<(const Rational& o) const;
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

struct LevelResult {
  std::uint32_t stabilization_index = 0;  // e*: smallest e with J_e = J_{e+1}
  std::uint32_t level = 0;                // e* + 1
  std::vector<HomIdeal> chain;            // J_0 .. J_{e*+1} (partial when undetermined)
  bool determined = false;                // false when the cutoff was hit
};

/// Walks the descending chain J_e = (f^{p^e-1})^{[1/p^e]} until two
/// consecutive ideals agree (the chain is constant from there on) or `cutoff`
/// is reached. An undetermined result is flagged, not thrown.
LevelResult level(const Polynomial& f, std::uint32_t cutoff = 4);

/// Smallest l >= 1 with J_l = J_{l+1}; equals max(level-1, 1).
/// Throws CutoffExceeded when the chain did not stabilize within the cutoff.
std::uint32_t hsl_number(const Polynomial& f, std::uint32_t cutoff = 4);

/// nu_f(p^e) = max { r : f^r not in m^{[p^e]} }, by binary search on r.
std::uint64_t nu(const Polynomial& f, std::uint32_t e);

/// Nested intervals (nu(p^e)/p^e, (nu(p^e)+1)/p^e] for e = 1..e_max.
std::vector<std::pair<Rational, Rational>> fpt_bounds(const Polynomial& f, std::uint32_t e_max);

/// Largest lambda_k = 1 - 1/p^k with J_{k-1} != J_k, or nullopt when J_1 = R
/// (no jump on the grid below 1).
std::optional<Rational> largest_grid_jump(const Polynomial& f, std::uint32_t cutoff = 4);

/// ceil(1 - log_p(1 - lambda)) in exact integer arithmetic: the smallest m
/// with a * p^{m-1} >= p^k where 1 - lambda = a/p^k in lowest terms.
std::uint32_t level_from_exponent(const Rational& lambda, const PrimeField& field);

/// Coefficient of (x_0...x_n)^{p-1} in f^{p-1}; requires deg f = nvars
/// (Calabi-Yau hypersurface shape).
std::uint32_t hasse_witt_scalar(const Polynomial& f);
bool is_ordinary_cy(const Polynomial& f);

}  // namespace fplevel
