#include "fplevel/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "fplevel/config.hpp"

namespace fplevel {

namespace {

void check_context(const Polynomial& a, const Polynomial& b) {
  if (a.field() != b.field() || a.nvars() != b.nvars())
    fail(Errc::MismatchedContext, "operands live in different rings");
}

using TermMap = std::unordered_map<Monomial, std::uint32_t, MonomialHash>;

Polynomial from_map(const PrimeField& F, std::uint32_t nvars, const TermMap& m) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(m.size());
  for (const auto& [mono, c] : m)
    if (c != 0) terms.push_back({mono, c});
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    return grlex_greater(x.mono, y.mono);
  });
  Polynomial out(F, nvars);
  // terms are already normalized; reuse the normalizing constructor anyway
  return Polynomial(F, nvars, std::move(terms));
}

}  // namespace

Polynomial::Polynomial(PrimeField field, std::uint32_t nvars, std::vector<Term> terms)
    : field_(field), nvars_(nvars) {
  TermMap acc;
  acc.reserve(terms.size());
  for (auto& t : terms) {
    if (t.mono.nvars() != nvars)
      fail(Errc::MismatchedContext, "monomial has wrong variable count");
    std::uint32_t c = field_.reduce(t.coeff);
    if (c == 0) continue;
    auto [it, fresh] = acc.emplace(std::move(t.mono), c);
    if (!fresh) it->second = field_.add(it->second, c);
  }
  terms_.reserve(acc.size());
  for (auto& [mono, c] : acc)
    if (c != 0) terms_.push_back({mono, c});
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.mono, b.mono); });
}

Polynomial Polynomial::constant(PrimeField field, std::uint32_t nvars, std::uint64_t c) {
  std::vector<Term> t;
  std::uint32_t r = field.reduce(c);
  if (r != 0) t.push_back({Monomial::one(nvars), r});
  return Polynomial(field, nvars, std::move(t));
}

Polynomial Polynomial::monomial(PrimeField field, Monomial m, std::uint64_t c) {
  std::uint32_t nvars = m.nvars();
  std::vector<Term> t;
  std::uint32_t r = field.reduce(c);
  if (r != 0) t.push_back({std::move(m), r});
  return Polynomial(field, nvars, std::move(t));
}

Polynomial Polynomial::variable(PrimeField field, std::uint32_t nvars, std::uint32_t i) {
  return monomial(field, Monomial::variable(nvars, i), 1);
}

std::optional<std::uint64_t> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().mono.degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::uint64_t d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (field_ != o.field_ || nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono) return false;
  return true;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
  check_context(a, b);
  const PrimeField& F = a.field();
  // merge of two sorted term lists
  std::vector<Polynomial::Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  std::size_t i = 0, j = 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  while (i < ta.size() && j < tb.size()) {
    if (ta[i].mono == tb[j].mono) {
      std::uint32_t c = F.add(ta[i].coeff, tb[j].coeff);
      if (c != 0) out.push_back({ta[i].mono, c});
      ++i;
      ++j;
    } else if (grlex_greater(ta[i].mono, tb[j].mono)) {
      out.push_back(ta[i++]);
    } else {
      out.push_back(tb[j++]);
    }
  }
  for (; i < ta.size(); ++i) out.push_back(ta[i]);
  for (; j < tb.size(); ++j) out.push_back(tb[j]);
  return Polynomial(F, a.nvars(), std::move(out));
}

Polynomial poly_neg(const Polynomial& a) {
  std::vector<Polynomial::Term> out = a.terms();
  for (auto& t : out) t.coeff = a.field().neg(t.coeff);
  return Polynomial(a.field(), a.nvars(), std::move(out));
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) { return poly_add(a, poly_neg(b)); }

Polynomial poly_scale(const Polynomial& a, std::uint32_t c) {
  const PrimeField& F = a.field();
  c = F.reduce(c);
  if (c == 0) return Polynomial::zero(F, a.nvars());
  std::vector<Polynomial::Term> out = a.terms();
  for (auto& t : out) t.coeff = F.mul(t.coeff, c);
  return Polynomial(F, a.nvars(), std::move(out));
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  check_context(a, b);
  const PrimeField& F = a.field();
  if (a.is_zero() || b.is_zero()) return Polynomial::zero(F, a.nvars());

  const auto& small = a.terms().size() <= b.terms().size() ? a : b;
  const auto& large = a.terms().size() <= b.terms().size() ? b : a;

  auto accumulate_block = [&](std::size_t lo, std::size_t hi, TermMap& acc) {
    for (std::size_t i = lo; i < hi; ++i) {
      const auto& ts = small.terms()[i];
      for (const auto& tl : large.terms()) {
        Monomial m = ts.mono.times(tl.mono);
        std::uint32_t c = F.mul(ts.coeff, tl.coeff);
        auto [it, fresh] = acc.emplace(std::move(m), c);
        if (!fresh) it->second = F.add(it->second, c);
      }
    }
  };

  int nthreads = config::get_threads();
  TermMap acc;
  acc.reserve(small.terms().size() + large.terms().size());
  if (nthreads <= 1 || small.terms().size() < 64) {
    accumulate_block(0, small.terms().size(), acc);
  } else {
    std::size_t nblocks = static_cast<std::size_t>(nthreads);
    std::vector<TermMap> partial(nblocks);
    std::vector<std::thread> pool;
    std::size_t n = small.terms().size();
    for (std::size_t k = 0; k < nblocks; ++k) {
      std::size_t lo = n * k / nblocks, hi = n * (k + 1) / nblocks;
      pool.emplace_back([&, lo, hi, k] { accumulate_block(lo, hi, partial[k]); });
    }
    for (auto& t : pool) t.join();
    for (auto& part : partial)
      for (auto& [mono, c] : part) {
        auto [it, fresh] = acc.emplace(mono, c);
        if (!fresh) it->second = F.add(it->second, c);
      }
  }
  return from_map(F, a.nvars(), acc);
}

namespace {

Polynomial pow_binary(const Polynomial& f, std::uint64_t m) {
  Polynomial acc = Polynomial::one(f.field(), f.nvars());
  Polynomial base = f;
  while (m) {
    if (m & 1) acc = poly_mul(acc, base);
    m >>= 1;
    if (m) base = poly_mul(base, base);
  }
  return acc;
}

}  // namespace

Polynomial poly_pow(const Polynomial& f, std::uint64_t m) {
  if (m == 0) return Polynomial::one(f.field(), f.nvars());
  const std::uint32_t p = f.field().p();
  // Frobenius factorization: with m = sum d_i p^i in base p,
  // f^m = prod_i twist(f^{d_i}, i), and each d_i < p stays tiny.
  std::optional<Polynomial> acc;
  std::unordered_map<std::uint32_t, Polynomial> small;  // d -> f^d
  std::uint32_t i = 0;
  for (std::uint64_t v = m; v; v /= p, ++i) {
    std::uint32_t d = static_cast<std::uint32_t>(v % p);
    if (d == 0) continue;
    auto it = small.find(d);
    if (it == small.end()) it = small.emplace(d, pow_binary(f, d)).first;
    Polynomial factor = frobenius_twist(it->second, i);
    acc = acc ? poly_mul(*acc, factor) : std::move(factor);
  }
  return *acc;
}

Polynomial frobenius_twist(const Polynomial& f, std::uint32_t e) {
  if (e == 0) return f;
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= f.field().p();
    if (q > kMaxExponent) fail(Errc::DegreeOverflow, "p^e exceeds exponent guard");
  }
  std::vector<Polynomial::Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) out.push_back({t.mono.scale(q), t.coeff});
  return Polynomial(f.field(), f.nvars(), std::move(out));
}

std::uint32_t coefficient_of(const Polynomial& f, const Monomial& m) {
  const auto& ts = f.terms();
  auto it = std::lower_bound(ts.begin(), ts.end(), m, [](const Polynomial::Term& t,
                                                         const Monomial& key) {
    return grlex_greater(t.mono, key);
  });
  if (it != ts.end() && it->mono == m) return it->coeff;
  return 0;
}

std::vector<Polynomial> homogeneous_components(const Polynomial& f) {
  std::vector<Polynomial> out;
  std::vector<Polynomial::Term> cur;
  for (const auto& t : f.terms()) {
    if (!cur.empty() && cur.back().mono.degree() != t.mono.degree()) {
      out.emplace_back(f.field(), f.nvars(), std::move(cur));
      cur.clear();
    }
    cur.push_back(t);
  }
  if (!cur.empty()) out.emplace_back(f.field(), f.nvars(), std::move(cur));
  return out;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    if (!first) os << " + ";
    first = false;
    bool constant = t.mono.is_one();
    if (t.coeff != 1 || constant) {
      os << t.coeff;
      if (!constant) os << "*";
    }
    bool firstvar = true;
    for (std::uint32_t i = 0; i < f.nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!firstvar) os << "*";
      firstvar = false;
      os << "x" << i;
      if (t.mono[i] > 1) os << "^" << t.mono[i];
    }
  }
  return os.str();
}

std::vector<Monomial> monomials_of_degree(std::uint32_t nvars, std::uint32_t d) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.push_back(Monomial(std::vector<std::uint32_t>{}));
    return out;
  }
  std::vector<std::uint32_t> cur(nvars, 0);
  // descending lex over tuples of fixed total degree == descending graded-lex
  auto rec = [&](auto&& self, std::uint32_t pos, std::uint32_t rem) -> void {
    if (pos + 1 == nvars) {
      cur[pos] = rem;
      out.push_back(Monomial(cur));
      return;
    }
    for (std::uint32_t v = rem; v != static_cast<std::uint32_t>(-1); --v) {
      cur[pos] = v;
      self(self, pos + 1, rem - v);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace fplevel
