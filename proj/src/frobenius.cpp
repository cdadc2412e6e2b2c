#include "fplevel/frobenius.hpp"

#include <algorithm>
#include <map>

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

}  // namespace

RootDecomposition phi_decompose(const Polynomial& g, std::uint32_t e) {
  if (e == 0) fail(Errc::InvalidExponent, "decomposition level must be positive");
  const std::uint64_t q = p_power(g.field(), e);
  struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
  };
  std::map<Monomial, std::vector<Polynomial::Term>, MonoLess> groups;
  for (const auto& t : g.terms())
    groups[t.mono.mod_q(q)].push_back({t.mono.div_q(q), t.coeff});

  RootDecomposition dec;
  dec.e = e;
  dec.parts.reserve(groups.size());
  // map iterates ascending; emit descending for the canonical order
  for (auto it = groups.rbegin(); it != groups.rend(); ++it)
    dec.parts.emplace_back(it->first, Polynomial(g.field(), g.nvars(), std::move(it->second)));
  return dec;
}

Polynomial reassemble(const RootDecomposition& dec, const PrimeField& field, std::uint32_t nvars) {
  Polynomial acc = Polynomial::zero(field, nvars);
  for (const auto& [mu, h] : dec.parts)
    acc = poly_add(acc, poly_mul(frobenius_twist(h, dec.e), Polynomial::monomial(field, mu, 1)));
  return acc;
}

HomIdeal frobenius_root_ideal(const std::vector<Polynomial>& gens, std::uint32_t e) {
  if (gens.empty()) fail(Errc::BadInput, "frobenius_root_ideal needs at least one generator");
  const PrimeField& F = gens.front().field();
  const std::uint32_t nvars = gens.front().nvars();
  std::vector<Polynomial> parts;
  for (const auto& g : gens) {
    if (!g.is_homogeneous())
      fail(Errc::NotHomogeneous, "frobenius roots are computed for homogeneous inputs only");
    for (auto& [mu, h] : phi_decompose(g, e).parts) parts.push_back(std::move(h));
  }
  return HomIdeal(F, nvars, minimal_span(F, nvars, std::move(parts)));
}

HomIdeal bracket_power(const HomIdeal& ideal, std::uint64_t q) {
  const PrimeField& F = ideal.field();
  std::uint32_t e = 0;
  std::uint64_t v = q;
  if (v == 0) fail(Errc::InvalidExponent, "bracket power exponent must be a power of p");
  while (v % F.p() == 0) {
    v /= F.p();
    ++e;
  }
  if (v != 1) fail(Errc::InvalidExponent, "bracket power exponent must be a power of p");
  std::vector<Polynomial> gens;
  gens.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) gens.push_back(frobenius_twist(g, e));
  return HomIdeal(F, ideal.nvars(), std::move(gens));
}

HomIdeal chain_ideal(const Polynomial& f, std::uint32_t e) {
  if (!f.is_homogeneous()) fail(Errc::NotHomogeneous, "chain ideals require homogeneous f");
  if (f.is_zero()) fail(Errc::BadInput, "chain ideals require nonzero f");
  if (e == 0) return HomIdeal(f.field(), f.nvars(), {Polynomial::one(f.field(), f.nvars())});
  const std::uint64_t q = p_power(f.field(), e);
  return frobenius_root_ideal({poly_pow(f, q - 1)}, e);
}

}  // namespace fplevel
