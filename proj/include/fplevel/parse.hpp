#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fplevel/diffop.hpp"
#include "fplevel/polynomial.hpp"

namespace fplevel {

/// Polynomial expressions: integers, variables (x0..x9 or the aliases
/// x,y,z,w — mixing the two conventions is an error), + - * ^ and
/// parentheses. Juxtaposition is not multiplication. Coefficients are reduced
/// mod p. When `nvars` is absent the variable count is auto-detected.
Polynomial parse_poly(const std::string& text, PrimeField field,
                      std::optional<std::uint32_t> nvars = std::nullopt);

/// Canonical operator text: a "level E vars N" header followed by one term
/// per line, "(post) * CORE * (pre)" with CORE either D[t0,...,tn] or
/// P[e;m0,...,mn].
std::string to_text(const DiffOp& op);
DiffOp diffop_from_text(const std::string& text, PrimeField field);

}  // namespace fplevel
