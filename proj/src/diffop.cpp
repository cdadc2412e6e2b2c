#include "fplevel/diffop.hpp"

#include <algorithm>
#include <memory>

#include "fplevel/frobenius.hpp"
#include "fplevel/homideal.hpp"
#include "fplevel/lucas.hpp"

namespace fplevel {

namespace {

std::uint64_t p_power(const PrimeField& F, std::uint32_t e) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (q > (kMaxExponent + 1) / F.p()) fail(Errc::DegreeOverflow, "p^e exceeds exponent guard");
    q *= F.p();
  }
  return q;
}

Polynomial apply_core(const OpCore& core, const Polynomial& h) {
  const PrimeField& F = h.field();
  const std::uint32_t nvars = h.nvars();
  std::vector<Polynomial::Term> out;
  if (const auto* d = std::get_if<DProductCore>(&core)) {
    for (const auto& t : h.terms()) {
      if (!d->t.divides(t.mono)) continue;
      std::uint32_t c = t.coeff;
      for (std::uint32_t i = 0; i < nvars && c != 0; ++i)
        c = F.mul(c, lucas_binomial(t.mono[i], d->t[i], F));
      if (c != 0) out.push_back({d->t.divide_into(t.mono), c});
    }
  } else {
    const auto& proj = std::get<ProjectionCore>(core);
    const std::uint64_t q = p_power(F, proj.e);
    for (const auto& t : h.terms()) {
      if (t.mono.mod_q(q) != proj.mu) continue;
      out.push_back({proj.mu.divide_into(t.mono), t.coeff});
    }
  }
  return Polynomial(F, nvars, std::move(out));
}

}  // namespace

DiffOp::DiffOp(PrimeField field, std::uint32_t nvars, std::uint32_t level,
               std::vector<OpTerm> terms)
    : field_(field), nvars_(nvars), level_(level), terms_(std::move(terms)) {
  if (level_ < 1) fail(Errc::InvalidExponent, "operator level must be positive");
  const std::uint64_t qE = p_power(field_, level_);
  for (const auto& term : terms_) {
    if (term.post.field() != field_ || term.post.nvars() != nvars_ ||
        term.pre.field() != field_ || term.pre.nvars() != nvars_)
      fail(Errc::MismatchedContext, "operator term lives in a different ring");
    if (const auto* d = std::get_if<DProductCore>(&term.core)) {
      if (d->t.nvars() != nvars_) fail(Errc::MismatchedContext, "D-product index width mismatch");
      for (std::uint32_t i = 0; i < nvars_; ++i)
        if (d->t[i] >= qE)
          fail(Errc::InvalidExponent, "D-product index exceeds the declared level");
    } else {
      const auto& proj = std::get<ProjectionCore>(term.core);
      if (proj.mu.nvars() != nvars_) fail(Errc::MismatchedContext, "projection residue mismatch");
      if (proj.e < 1 || proj.e > level_)
        fail(Errc::InvalidExponent, "projection level exceeds the declared level");
      const std::uint64_t q = p_power(field_, proj.e);
      for (std::uint32_t i = 0; i < nvars_; ++i)
        if (proj.mu[i] >= q) fail(Errc::InvalidExponent, "projection residue not reduced mod p^e");
    }
  }
}

Polynomial apply(const DiffOp& op, const Polynomial& g) {
  if (g.field() != op.field() || g.nvars() != op.nvars())
    fail(Errc::MismatchedContext, "operator applied in a different ring");
  Polynomial acc = Polynomial::zero(g.field(), g.nvars());
  for (const auto& term : op.terms()) {
    Polynomial h = term.pre.is_one() ? g : poly_mul(term.pre, g);
    h = apply_core(term.core, h);
    if (!term.post.is_one()) h = poly_mul(term.post, h);
    acc = poly_add(acc, h);
  }
  return acc;
}

Polynomial fermat_poly(std::uint32_t n, PrimeField field) {
  std::vector<Polynomial::Term> terms;
  for (std::uint32_t i = 0; i <= n; ++i)
    terms.push_back({Monomial::variable(n + 1, i, n + 1), 1});
  return Polynomial(field, n + 1, std::move(terms));
}

DiffOp fermat_psi1(std::uint32_t n, PrimeField field) {
  const std::uint32_t p = field.p();
  if (n < 2 || p <= n) fail(Errc::BadInput, "fermat_psi1 requires p > n >= 2");
  if (p % (n + 1) != 1)
    fail(Errc::InvalidCongruence, "fermat_psi1 requires p = 1 mod (n+1)");
  // coefficient of (x_0...x_n)^{p-1} in f_n^{p-1}
  const std::uint64_t k = (p - 1) / (n + 1);
  std::uint32_t c = lucas_multinomial(p - 1, std::vector<std::uint64_t>(n + 1, k), field);
  if (c == 0) fail(Errc::VerificationFailed, "balanced coefficient unexpectedly zero");
  const std::uint32_t nvars = n + 1;
  OpTerm term{Polynomial::constant(field, nvars, field.inv(c)),
              DProductCore{Monomial(std::vector<std::uint32_t>(nvars, p - 1))},
              Polynomial::one(field, nvars)};
  return DiffOp(field, nvars, 1, {std::move(term)});
}

DiffOp fermat_delta_j(std::uint32_t n, PrimeField field, std::uint32_t j) {
  const std::uint64_t p = field.p();
  if (n < 2 || j > n) fail(Errc::BadInput, "fermat_delta_j requires n >= 2 and j <= n");
  if (p < n + 2)
    fail(Errc::BadInput, "fermat_delta_j requires p >= n+2 (the premultiplier degenerates)");
  const std::uint64_t p2 = p * p;
  const std::uint64_t alpha = (n + 1) * (p2 - 1) - static_cast<std::uint64_t>(n) * (n + 1) * p;
  if (2 * p2 - 1 < alpha)
    fail(Errc::BadInput, "fermat_delta_j premultiplier exponent 2p^2-1-alpha is negative");
  const std::uint64_t beta = p2 - 1 - (n + 1) * p;
  const std::uint32_t nvars = n + 1;
  std::vector<std::uint32_t> pre(nvars, static_cast<std::uint32_t>(beta));
  pre[j] = static_cast<std::uint32_t>(2 * p2 - 1 - alpha);
  OpTerm term{Polynomial::one(field, nvars),
              DProductCore{Monomial(std::vector<std::uint32_t>(nvars, static_cast<std::uint32_t>(p2 - 1)))},
              Polynomial::monomial(field, Monomial(std::move(pre)), 1)};
  return DiffOp(field, nvars, 2, {std::move(term)});
}

OperatorCertificate fermat_level2(std::uint32_t n, PrimeField field) {
  const std::uint64_t p = field.p();
  if (n < 2 || p <= n) fail(Errc::BadInput, "fermat_level2 requires p > n >= 2");
  const std::uint64_t p2 = p * p;
  const std::uint32_t nvars = n + 1;
  Polynomial f = fermat_poly(n, field);
  Polynomial g = poly_pow(f, p2 - 1);
  Polynomial w = frobenius_twist(poly_pow(f, p - 1), 1);  // f^{p^2-p}

  Monomial balanced(std::vector<std::uint32_t>(nvars, static_cast<std::uint32_t>(p2 - p)));
  if (coefficient_of(w, balanced) != 0) {
    // Psi_1 is an operator of level 1 and also of level 2.
    DiffOp psi = fermat_psi1(n, field);
    Polynomial residual = poly_sub(apply(psi, g), w);
    return OperatorCertificate{std::move(psi), 2, residual, residual.is_zero()};
  }

  const std::uint64_t alpha = (n + 1) * (p2 - 1) - static_cast<std::uint64_t>(n) * (n + 1) * p;
  if (p == n + 1 || 2 * p2 - 1 < alpha) {
    // A delta_j premultiplier exponent is negative here; fall back to the
    // projection-based witness.
    auto cert = synthesize(f, 2);
    if (!cert) fail(Errc::VerificationFailed, "no level-2 witness found");
    return std::move(*cert);
  }

  // Pigeonhole assembly: every monomial of f^{p^2-p} owns a variable with
  // exponent >= p^2; route it through the matching delta_j.
  std::vector<DiffOp> deltas;
  std::vector<std::uint32_t> units;  // apply(delta_j, g) = units[j] * x_j^{p^2}
  for (std::uint32_t j = 0; j < nvars; ++j) {
    deltas.push_back(fermat_delta_j(n, field, j));
    Polynomial img = apply(deltas.back(), g);
    Monomial expected = Monomial::variable(nvars, j, static_cast<std::uint32_t>(p2));
    if (img.terms().size() != 1 || img.terms()[0].mono != expected)
      fail(Errc::VerificationFailed, "delta_j(f^{p^2-1}) is not a multiple of x_j^{p^2}");
    units.push_back(img.terms()[0].coeff);
  }

  std::vector<std::vector<Polynomial::Term>> routed(nvars);
  for (const auto& t : w.terms()) {
    std::uint32_t j = nvars;
    for (std::uint32_t i = 0; i < nvars; ++i)
      if (t.mono[i] >= p2) {
        j = i;
        break;
      }
    if (j == nvars) fail(Errc::VerificationFailed, "pigeonhole assignment failed");
    Monomial xq = Monomial::variable(nvars, j, static_cast<std::uint32_t>(p2));
    routed[j].push_back({xq.divide_into(t.mono), t.coeff});
  }

  std::vector<OpTerm> terms;
  for (std::uint32_t j = 0; j < nvars; ++j) {
    Polynomial qj(field, nvars, std::move(routed[j]));
    if (qj.is_zero()) continue;
    terms.push_back({poly_scale(qj, field.inv(units[j])), deltas[j].terms()[0].core,
                     deltas[j].terms()[0].pre});
  }
  DiffOp op(field, nvars, 2, std::move(terms));
  Polynomial residual = poly_sub(apply(op, g), w);
  return OperatorCertificate{std::move(op), 2, residual, residual.is_zero()};
}

std::optional<OperatorCertificate> synthesize(const Polynomial& f, std::uint32_t e) {
  if (!f.is_homogeneous()) fail(Errc::NotHomogeneous, "synthesize requires homogeneous f");
  if (f.is_zero() || f.is_constant()) fail(Errc::BadInput, "synthesize requires a non-unit f");
  if (e < 1) fail(Errc::InvalidExponent, "synthesize requires e >= 1");
  const PrimeField& F = f.field();
  const std::uint32_t nvars = f.nvars();
  const std::uint64_t q = p_power(F, e);

  Polynomial g = poly_pow(f, q - 1);
  Polynomial target = poly_pow(f, q - F.p());
  RootDecomposition dec = phi_decompose(g, e);

  std::vector<Polynomial> gens;
  gens.reserve(dec.parts.size());
  for (const auto& [mu, h] : dec.parts) gens.push_back(h);

  // Solving sum_mu a_mu * h_mu^{p^e} = f^{p^e-p} directly means dense linear
  // algebra in degree deg(target). Splitting both sides by residue class
  // instead -- a_mu = sum_nu b_{mu,nu}^{p^e} x^nu and target = sum_nu
  // t_nu^{p^e} x^nu -- the system falls apart into one membership problem
  // sum_mu b_{mu,nu} h_mu = t_nu per residue nu, all in degree < deg f.
  std::vector<Polynomial> post(dec.parts.size(), Polynomial::zero(F, nvars));
  for (const auto& [nu, t_nu] : phi_decompose(target, e).parts) {
    auto coeffs = express(t_nu, gens);
    if (!coeffs) return std::nullopt;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if ((*coeffs)[i].is_zero()) continue;
      post[i] = poly_add(
          post[i], poly_mul(frobenius_twist((*coeffs)[i], e),
                            Polynomial::monomial(F, nu, 1)));
    }
  }

  std::vector<OpTerm> terms;
  for (std::size_t i = 0; i < dec.parts.size(); ++i) {
    if (post[i].is_zero()) continue;
    terms.push_back(
        {std::move(post[i]), ProjectionCore{e, dec.parts[i].first}, Polynomial::one(F, nvars)});
  }
  DiffOp op(F, nvars, e, std::move(terms));
  Polynomial residual = poly_sub(apply(op, g), target);
  return OperatorCertificate{std::move(op), e, residual, residual.is_zero()};
}

VerifyResult verify_level_operator(const DiffOp& op, const Polynomial& f, std::uint32_t e) {
  if (e < 1) fail(Errc::InvalidExponent, "verification requires e >= 1");
  const std::uint64_t q = p_power(f.field(), e);
  Polynomial g = poly_pow(f, q - 1);
  Polynomial target = poly_pow(f, q - f.field().p());
  Polynomial image = apply(op, g);
  Polynomial residual = poly_sub(image, target);
  VerifyResult res{OperatorCertificate{op, e, residual, residual.is_zero()}, std::nullopt};
  if (res.cert.valid) {
    res.proportional_unit = 1;
  } else if (!image.is_zero() && !target.is_zero()) {
    std::uint32_t c =
        f.field().mul(image.leading_coefficient(), f.field().inv(target.leading_coefficient()));
    if (image == poly_scale(target, c)) res.proportional_unit = c;
  }
  return res;
}

}  // namespace fplevel
