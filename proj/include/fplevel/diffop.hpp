#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "fplevel/polynomial.hpp"

namespace fplevel {

/// Product of divided-power operators: x^a -> prod_i C(a_i, t_i) * x^{a-t},
/// zero when any a_i < t_i.
struct DProductCore {
  Monomial t;
};

/// Frobenius-dual projection pi_{e,mu}: x^a -> x^{a-mu} when a = mu mod p^e
/// componentwise, else 0. Equivalently g -> twist(h_mu, e) with h_mu from the
/// level-e decomposition of g.
struct ProjectionCore {
  std::uint32_t e;
  Monomial mu;
};

using OpCore = std::variant<DProductCore, ProjectionCore>;

struct OpTerm {
  Polynomial post;  // multiplies the core output
  OpCore core;
  Polynomial pre;  // multiplies the argument before the core
};

/// Finite sum of (post) o (core) o (pre) terms, R^{p^E}-linear for the
/// declared level E: D-product indices stay below p^E and projection levels
/// stay at or below E.
class DiffOp {
 public:
  DiffOp(PrimeField field, std::uint32_t nvars, std::uint32_t level, std::vector<OpTerm> terms);

  const PrimeField& field() const { return field_; }
  std::uint32_t nvars() const { return nvars_; }
  std::uint32_t level() const { return level_; }
  const std::vector<OpTerm>& terms() const { return terms_; }

 private:
  PrimeField field_;
  std::uint32_t nvars_;
  std::uint32_t level_;
  std::vector<OpTerm> terms_;
};

Polynomial apply(const DiffOp& op, const Polynomial& g);

struct OperatorCertificate {
  DiffOp op;
  std::uint32_t e;      // the witnessed index: apply(op, f^{p^e-1}) =? f^{p^e-p}
  Polynomial residual;  // apply(op, f^{p^e-1}) - f^{p^e-p}
  bool valid;           // residual == 0
};

/// x_0^{n+1} + ... + x_n^{n+1}.
Polynomial fermat_poly(std::uint32_t n, PrimeField field);

/// Normalized Psi_1 = c^{-1} prod_i D_{p-1,i} with apply(Psi_1, f_n^{p-1}) = 1.
/// Requires p = 1 mod (n+1).
DiffOp fermat_psi1(std::uint32_t n, PrimeField field);

/// delta_j = x_0^beta ... x_j^{2p^2-1-alpha} ... x_n^beta o prod_i D_{p^2-1,i}
/// (premultiplier applied to the argument first), with
/// alpha = (n+1)(p^2-1) - n(n+1)p and beta = p^2-1-(n+1)p.
/// Requires p >= n+2 so that beta >= 0.
DiffOp fermat_delta_j(std::uint32_t n, PrimeField field, std::uint32_t j);

/// Level-2 certificate for the Fermat hypersurface: the Psi_1 branch when the
/// balanced monomial survives in f_n^{p^2-p}, otherwise the pigeonhole
/// assembly sum_j q_j * delta_j.
OperatorCertificate fermat_level2(std::uint32_t n, PrimeField field);

/// Projection-based witness: succeeds iff the chain is stable at e, i.e.
/// level(f) <= e; on success apply(op, f^{p^e-1}) = f^{p^e-p} exactly.
std::optional<OperatorCertificate> synthesize(const Polynomial& f, std::uint32_t e);

struct VerifyResult {
  OperatorCertificate cert;
  /// Set when apply(op, f^{p^e-1}) = c * f^{p^e-p} for a nonzero scalar c
  /// (1 when exactly valid).
  std::optional<std::uint32_t> proportional_unit;
};

VerifyResult verify_level_operator(const DiffOp& op, const Polynomial& f, std::uint32_t e);

}  // namespace fplevel
