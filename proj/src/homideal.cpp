#include "fplevel/homideal.hpp"

#include <algorithm>

#include "fplevel/rowops.hpp"

namespace fplevel {

namespace {

// Deterministic total order on normalized polynomials: degree, then term
// lists graded-lexicographically.
bool poly_before(const Polynomial& a, const Polynomial& b) {
  auto da = a.degree().value_or(0), db = b.degree().value_or(0);
  if (da != db) return da < db;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    if (ta[i].mono != tb[i].mono) return grlex_greater(ta[i].mono, tb[i].mono);
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
  }
  return ta.size() < tb.size();
}

Polynomial monic(const Polynomial& g) {
  std::uint32_t lc = g.leading_coefficient();
  if (lc == 0 || lc == 1) return g;
  return poly_scale(g, g.field().inv(lc));
}

std::vector<Polynomial> normalize_gens(const PrimeField& field, std::uint32_t nvars,
                                       std::vector<Polynomial>&& gens) {
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (auto& g : gens) {
    if (g.field() != field || g.nvars() != nvars)
      fail(Errc::MismatchedContext, "generator lives in a different ring");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) fail(Errc::NotHomogeneous, "ideal generators must be homogeneous");
    if (g.is_constant()) return {Polynomial::one(field, nvars)};
    out.push_back(monic(g));
  }
  std::sort(out.begin(), out.end(), poly_before);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Polynomial& a, const Polynomial& b) { return a == b; }),
            out.end());
  return out;
}

constexpr std::size_t kMaxSliceEntries = 200'000'000;  // dense matrix guard

std::vector<std::uint32_t> to_dense(const Polynomial& g, const EchelonBasis& basis) {
  std::vector<std::uint32_t> row(basis.columns.size(), 0);
  for (const auto& t : g.terms()) {
    auto it = basis.column_index.find(t.mono);
    if (it == basis.column_index.end())
      fail(Errc::BadInput, "polynomial does not live in this degree slice");
    row[it->second] = t.coeff;
  }
  return row;
}

}  // namespace

Rref::Rref(PrimeField field, std::size_t width) : field_(field), width_(width) {}

void Rref::reduce(std::vector<std::uint32_t>& row) const {
  const auto& kern = rowops::select(field_.p());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    std::size_t pc = pivots_[k];
    std::uint32_t c = row[pc];
    if (c == 0) continue;
    kern.axpy(row.data() + pc, rows_[k].data() + pc, field_.neg(c), field_.p(), width_ - pc);
  }
}

bool Rref::reduces_to_zero(std::vector<std::uint32_t> row) const {
  reduce(row);
  for (auto v : row)
    if (v) return false;
  return true;
}

std::optional<std::size_t> Rref::insert(std::vector<std::uint32_t>& row) {
  const auto& kern = rowops::select(field_.p());
  reduce(row);
  std::size_t pivot = width_;
  for (std::size_t j = 0; j < width_; ++j)
    if (row[j] != 0) {
      pivot = j;
      break;
    }
  if (pivot == width_) return std::nullopt;
  if (row[pivot] != 1) kern.scale(row.data() + pivot, field_.inv(row[pivot]), field_.p(), width_ - pivot);
  // clear the new pivot column in existing rows to keep the form reduced
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    std::uint32_t c = rows_[k][pivot];
    if (c == 0) continue;
    kern.axpy(rows_[k].data() + pivot, row.data() + pivot, field_.neg(c), field_.p(),
              width_ - pivot);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(row));
  return pivot;
}

HomIdeal::HomIdeal(PrimeField field, std::uint32_t nvars, std::vector<Polynomial> gens)
    : field_(field),
      nvars_(nvars),
      gens_(normalize_gens(field, nvars, std::move(gens))),
      cache_(std::make_shared<Cache>()) {}

const EchelonBasis& HomIdeal::degree_basis(std::uint32_t d) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto it = cache_->slices.find(d);
  if (it != cache_->slices.end()) return *it->second;

  auto basis = std::make_shared<EchelonBasis>();
  basis->degree = d;
  basis->columns = monomials_of_degree(nvars_, d);
  basis->column_index.reserve(basis->columns.size());
  for (std::size_t j = 0; j < basis->columns.size(); ++j)
    basis->column_index.emplace(basis->columns[j], j);

  Rref rref(field_, basis->columns.size());
  for (const auto& g : gens_) {
    std::uint64_t dg = g.degree().value_or(0);
    if (dg > d) continue;
    auto multiples = monomials_of_degree(nvars_, static_cast<std::uint32_t>(d - dg));
    if (multiples.size() * basis->columns.size() > kMaxSliceEntries)
      fail(Errc::BadInput, "degree slice too large");
    for (const auto& m : multiples) {
      std::vector<std::uint32_t> row(basis->columns.size(), 0);
      for (const auto& t : g.terms()) row[basis->column_index.at(m.times(t.mono))] = t.coeff;
      rref.insert(row);
      if (rref.rank() == basis->columns.size()) break;  // slice already full
    }
    if (rref.rank() == basis->columns.size()) break;
  }
  basis->rows = rref.rows();
  basis->pivots = rref.pivots();
  auto [pos, fresh] = cache_->slices.emplace(d, std::move(basis));
  (void)fresh;
  return *pos->second;
}

bool HomIdeal::contains(const Polynomial& g) const {
  if (g.field() != field_ || g.nvars() != nvars_)
    fail(Errc::MismatchedContext, "membership query in a different ring");
  if (g.is_zero()) return true;
  if (gens_.empty()) return false;
  for (const auto& comp : homogeneous_components(g)) {
    std::uint64_t d = comp.degree().value();
    const EchelonBasis& basis = degree_basis(static_cast<std::uint32_t>(d));
    std::vector<std::uint32_t> row = to_dense(comp, basis);
    for (std::size_t k = 0; k < basis.rows.size(); ++k) {
      std::uint32_t c = row[basis.pivots[k]];
      if (c == 0) continue;
      rowops::select(field_.p())
          .axpy(row.data() + basis.pivots[k], basis.rows[k].data() + basis.pivots[k],
                field_.neg(c), field_.p(), basis.columns.size() - basis.pivots[k]);
    }
    for (auto v : row)
      if (v) return false;
  }
  return true;
}

bool HomIdeal::is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

bool HomIdeal::is_subset_of(const HomIdeal& other) const {
  for (const auto& g : gens_)
    if (!other.contains(g)) return false;
  return true;
}

bool HomIdeal::equals(const HomIdeal& other) const {
  return is_subset_of(other) && other.is_subset_of(*this);
}

std::optional<std::vector<Polynomial>> express(const Polynomial& g,
                                               const std::vector<Polynomial>& gens) {
  const PrimeField& F = g.field();
  const std::uint32_t nvars = g.nvars();
  if (!g.is_homogeneous()) fail(Errc::NotHomogeneous, "express requires a homogeneous target");
  for (const auto& gen : gens) {
    if (gen.field() != F || gen.nvars() != nvars)
      fail(Errc::MismatchedContext, "generator lives in a different ring");
    if (!gen.is_homogeneous()) fail(Errc::NotHomogeneous, "express requires homogeneous generators");
  }
  std::vector<Polynomial> result(gens.size(), Polynomial::zero(F, nvars));
  if (g.is_zero()) return result;
  const std::uint64_t d = g.degree().value();

  // A nonzero constant generator spans everything in one step.
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].is_zero() && gens[i].is_constant()) {
      result[i] = poly_scale(g, F.inv(gens[i].leading_coefficient()));
      return result;
    }
  }

  struct Unknown {
    std::size_t gen;
    Monomial mult;
  };
  std::vector<Unknown> unknowns;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    std::uint64_t dg = gens[i].degree().value();
    if (dg > d) continue;
    for (auto& m : monomials_of_degree(nvars, static_cast<std::uint32_t>(d - dg)))
      unknowns.push_back({i, std::move(m)});
  }
  if (unknowns.empty()) return std::nullopt;

  auto columns = monomials_of_degree(nvars, static_cast<std::uint32_t>(d));
  std::unordered_map<Monomial, std::size_t, MonomialHash> col_index;
  col_index.reserve(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) col_index.emplace(columns[j], j);

  const std::size_t width = unknowns.size() + 1;  // augmented with g
  if (columns.size() * width > kMaxSliceEntries) fail(Errc::BadInput, "express problem too large");

  // Equations: one row per degree-d monomial; entry (mono, u) is the
  // coefficient of mono in mult_u * gen_u.
  std::vector<std::vector<std::uint32_t>> mat(columns.size(),
                                              std::vector<std::uint32_t>(width, 0));
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    const auto& gen = gens[unknowns[u].gen];
    for (const auto& t : gen.terms())
      mat[col_index.at(unknowns[u].mult.times(t.mono))][u] = t.coeff;
  }
  for (const auto& t : g.terms()) mat[col_index.at(t.mono)][unknowns.size()] = t.coeff;

  // RREF over the unknown columns.
  const auto& kern = rowops::select(F.p());
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < unknowns.size() && r < mat.size(); ++col) {
    std::size_t sel = mat.size();
    for (std::size_t k = r; k < mat.size(); ++k)
      if (mat[k][col] != 0) {
        sel = k;
        break;
      }
    if (sel == mat.size()) continue;
    std::swap(mat[r], mat[sel]);
    if (mat[r][col] != 1) kern.scale(mat[r].data() + col, F.inv(mat[r][col]), F.p(), width - col);
    for (std::size_t k = 0; k < mat.size(); ++k) {
      if (k == r || mat[k][col] == 0) continue;
      kern.axpy(mat[k].data() + col, mat[r].data() + col, F.neg(mat[k][col]), F.p(), width - col);
    }
    pivot_col.push_back(col);
    ++r;
  }
  // Consistency: a row 0 = nonzero means no solution.
  for (std::size_t k = r; k < mat.size(); ++k)
    if (mat[k][unknowns.size()] != 0) return std::nullopt;

  // Particular solution: free unknowns zero, pivots read off the augmented
  // column.
  std::vector<std::vector<Polynomial::Term>> parts(gens.size());
  for (std::size_t k = 0; k < r; ++k) {
    std::uint32_t v = mat[k][unknowns.size()];
    if (v == 0) continue;
    const Unknown& u = unknowns[pivot_col[k]];
    parts[u.gen].push_back({u.mult, v});
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    result[i] = Polynomial(F, nvars, std::move(parts[i]));
  return result;
}

std::vector<Polynomial> minimal_span(PrimeField field, std::uint32_t nvars,
                                     std::vector<Polynomial> candidates) {
  auto normalized = normalize_gens(field, nvars, std::move(candidates));
  if (normalized.size() <= 1) return normalized;
  std::vector<Polynomial> kept;
  std::unique_ptr<HomIdeal> span;
  for (auto& c : normalized) {
    if (span && span->contains(c)) continue;
    kept.push_back(c);
    span = std::make_unique<HomIdeal>(field, nvars, kept);
  }
  return kept;
}

}  // namespace fplevel
