#pragma once

#include <cstdint>
#include <vector>

#include "fplevel/homideal.hpp"
#include "fplevel/polynomial.hpp"

namespace fplevel {

/// Basis decomposition g = sum_mu twist(h_mu, e) * x^mu with every residue
/// exponent in [0, p^e). Parts are sorted by mu (descending graded-lex) and
/// every stored h_mu is nonzero.
struct RootDecomposition {
  std::uint32_t e = 0;
  std::vector<std::pair<Monomial, Polynomial>> parts;
};

RootDecomposition phi_decompose(const Polynomial& g, std::uint32_t e);

/// Reassembly identity, used by tests: sum_mu twist(h_mu, e) * x^mu.
Polynomial reassemble(const RootDecomposition& dec, const PrimeField& field, std::uint32_t nvars);

/// The Frobenius root (b)^{[1/p^e]} of the ideal generated by `gens`:
/// generated by all parts h_mu over all generators, redundancy-pruned.
HomIdeal frobenius_root_ideal(const std::vector<Polynomial>& gens, std::uint32_t e);

/// Bracket power I^{[q]} with q = p^e (generated by g^q over the stored
/// generators; g -> g^q is a ring endomorphism for p-power q).
HomIdeal bracket_power(const HomIdeal& ideal, std::uint64_t q);

/// J_e = (f^{p^e-1})^{[1/p^e]}; J_0 is the unit ideal.
HomIdeal chain_ideal(const Polynomial& f, std::uint32_t e);

}  // namespace fplevel
