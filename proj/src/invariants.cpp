#include "fplevel/invariants.hpp"

#include <numeric>

namespace fplevel {

namespace {

std::uint64_t p_power(const PrimeField& F, std::uint32_t e) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= F.p();
    if (q > kMaxExponent) fail(Errc::DegreeOverflow, "p^e exceeds exponent guard");
  }
  return q;
}

void check_level_input(const Polynomial& f) {
  if (!f.is_homogeneous()) fail(Errc::NotHomogeneous, "level requires homogeneous f");
  if (f.is_zero()) fail(Errc::BadInput, "level requires nonzero f");
  if (f.is_constant()) fail(Errc::BadInput, "level requires a non-unit f");
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) fail(Errc::BadInput, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

LevelResult level(const Polynomial& f, std::uint32_t cutoff) {
  check_level_input(f);
  if (cutoff < 1) fail(Errc::BadInput, "cutoff must be >= 1");
  LevelResult res;
  res.chain.push_back(chain_ideal(f, 0));
  for (std::uint32_t e = 1; e <= cutoff; ++e) {
    res.chain.push_back(chain_ideal(f, e));
    if (res.chain[e - 1].equals(res.chain[e])) {
      res.stabilization_index = e - 1;
      res.level = e;
      res.determined = true;
      return res;
    }
  }
  res.determined = false;
  res.stabilization_index = cutoff;  // lower bound only
  res.level = cutoff + 1;            // lower bound only
  return res;
}

std::uint32_t hsl_number(const Polynomial& f, std::uint32_t cutoff) {
  LevelResult res = level(f, cutoff);
  if (!res.determined)
    fail(Errc::CutoffExceeded, "chain did not stabilize within cutoff " + std::to_string(cutoff));
  return res.stabilization_index > 1 ? res.stabilization_index : 1;
}

std::uint64_t nu(const Polynomial& f, std::uint32_t e) {
  if (e == 0) fail(Errc::InvalidExponent, "nu requires e >= 1");
  if (f.is_zero() || coefficient_of(f, Monomial::one(f.nvars())) != 0)
    fail(Errc::BadInput, "nu requires f in the irrelevant maximal ideal");
  const std::uint64_t q = p_power(f.field(), e);
  // f^r in m^{[q]}  <=>  every monomial of f^r has some exponent >= q.
  auto in_bracket = [&](std::uint64_t r) {
    Polynomial fr = poly_pow(f, r);
    for (const auto& t : fr.terms()) {
      bool big = false;
      for (std::uint32_t i = 0; i < f.nvars(); ++i)
        if (t.mono[i] >= q) {
          big = true;
          break;
        }
      if (!big) return false;
    }
    return true;
  };
  // predicate is monotone in r (m^{[q]} is an ideal); f^0 = 1 is outside
  std::uint64_t lo = 0, hi = q - 1;  // lo: known outside
  if (!in_bracket(hi)) return hi;
  while (hi - lo > 1) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    (in_bracket(mid) ? hi : lo) = mid;
  }
  return lo;
}

std::vector<std::pair<Rational, Rational>> fpt_bounds(const Polynomial& f, std::uint32_t e_max) {
  std::vector<std::pair<Rational, Rational>> out;
  for (std::uint32_t e = 1; e <= e_max; ++e) {
    std::int64_t q = static_cast<std::int64_t>(p_power(f.field(), e));
    std::int64_t v = static_cast<std::int64_t>(nu(f, e));
    out.emplace_back(Rational(v, q), Rational(v + 1, q));
  }
  return out;
}

std::optional<Rational> largest_grid_jump(const Polynomial& f, std::uint32_t cutoff) {
  LevelResult res = level(f, cutoff);
  if (!res.determined)
    fail(Errc::CutoffExceeded, "chain did not stabilize within cutoff " + std::to_string(cutoff));
  if (res.level == 1) return std::nullopt;  // J_1 = R, no jump below 1
  // the chain descends strictly up to e*, so the largest grid jump is at e*
  std::uint32_t k = res.stabilization_index;
  std::int64_t qk = static_cast<std::int64_t>(p_power(f.field(), k));
  return Rational(qk - 1, qk);
}

std::uint32_t level_from_exponent(const Rational& lambda, const PrimeField& field) {
  if (lambda.num <= 0 || lambda.num >= lambda.den)
    fail(Errc::InvalidExponent, "exponent must lie in (0,1)");
  Rational rest(lambda.den - lambda.num, lambda.den);  // 1 - lambda = a / p^k
  std::int64_t a = rest.num, d = rest.den;
  std::uint32_t k = 0;
  while (d % field.p() == 0) {
    d /= field.p();
    ++k;
  }
  if (d != 1) fail(Errc::InvalidExponent, "denominator is not a power of p");
  const std::int64_t pk = rest.den;
  // smallest m >= 1 with a * p^{m-1} >= p^k
  std::uint32_t m = 1;
  __int128 lhs = a;
  while (lhs < pk) {
    lhs *= field.p();
    ++m;
  }
  return m;
}

std::uint32_t hasse_witt_scalar(const Polynomial& f) {
  if (!f.is_homogeneous()) fail(Errc::NotHomogeneous, "hasse_witt_scalar requires homogeneous f");
  if (f.is_zero() || f.degree().value() != f.nvars())
    fail(Errc::WrongDegree, "Calabi-Yau shape requires deg f = number of variables");
  const std::uint32_t p = f.field().p();
  Monomial balanced(std::vector<std::uint32_t>(f.nvars(), p - 1));
  return coefficient_of(poly_pow(f, p - 1), balanced);
}

bool is_ordinary_cy(const Polynomial& f) { return hasse_witt_scalar(f) != 0; }

}  // namespace fplevel
