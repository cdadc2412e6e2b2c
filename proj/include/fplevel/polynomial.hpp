#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fplevel/monomial.hpp"
#include "fplevel/prime_field.hpp"

namespace fplevel {

/// Sparse multivariate polynomial over F_p. Terms are stored with nonzero
/// canonical coefficients in [1, p), sorted in descending graded-lex order.
/// Immutable after construction; safe to share across threads.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    std::uint32_t coeff;
  };

  Polynomial(PrimeField field, std::uint32_t nvars)
      : field_(field), nvars_(nvars) {}

  /// Normalizes: reduces coefficients, merges duplicate monomials, prunes
  /// zeros, sorts.
  Polynomial(PrimeField field, std::uint32_t nvars, std::vector<Term> terms);

  static Polynomial zero(PrimeField field, std::uint32_t nvars) {
    return Polynomial(field, nvars);
  }
  static Polynomial constant(PrimeField field, std::uint32_t nvars, std::uint64_t c);
  static Polynomial one(PrimeField field, std::uint32_t nvars) {
    return constant(field, nvars, 1);
  }
  static Polynomial monomial(PrimeField field, Monomial m, std::uint64_t c);
  static Polynomial variable(PrimeField field, std::uint32_t nvars, std::uint32_t i);

  const PrimeField& field() const { return field_; }
  std::uint32_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
  }

  /// Total degree; zero polynomial has no degree.
  std::optional<std::uint64_t> degree() const;
  bool is_homogeneous() const;

  std::uint32_t leading_coefficient() const { return terms_.empty() ? 0 : terms_[0].coeff; }

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  PrimeField field_;
  std::uint32_t nvars_;
  std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_neg(const Polynomial& a);
Polynomial poly_scale(const Polynomial& a, std::uint32_t c);

/// Exact product with deterministic output order. Internally parallelizes
/// over term blocks when config::threads > 1; results do not depend on the
/// thread count.
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

/// f^m. When m = p^e - 1 this runs the Frobenius-factored fast path
/// f^{p^e-1} = prod_i twist(f^{p-1}, i), needing one generic power and e-1
/// products.
Polynomial poly_pow(const Polynomial& f, std::uint64_t m);

/// f^{p^e}: every exponent is multiplied by p^e, coefficients are fixed
/// (Fermat: c^p = c in F_p).
Polynomial frobenius_twist(const Polynomial& f, std::uint32_t e);

/// Coefficient of m in f (zero when absent).
std::uint32_t coefficient_of(const Polynomial& f, const Monomial& m);

/// Split into homogeneous components, highest degree first.
std::vector<Polynomial> homogeneous_components(const Polynomial& f);

/// Canonical printer: descending graded-lex, coefficients in [1, p),
/// variables named x0..xN. Inverse of the parser on its image.
std::string to_string(const Polynomial& f);

inline Polynomial operator+(const Polynomial& a, const Polynomial& b) { return poly_add(a, b); }
inline Polynomial operator-(const Polynomial& a, const Polynomial& b) { return poly_sub(a, b); }
inline Polynomial operator*(const Polynomial& a, const Polynomial& b) { return poly_mul(a, b); }

}  // namespace fplevel
