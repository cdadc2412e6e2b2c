#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "fplevel/polynomial.hpp"

namespace fplevel {

/// Reduced row-echelon basis of the degree-d slice of a homogeneous ideal.
/// Columns are the degree-d monomials in descending graded-lex order.
struct EchelonBasis {
  std::uint32_t degree = 0;
  std::vector<Monomial> columns;
  std::unordered_map<Monomial, std::size_t, MonomialHash> column_index;
  std::vector<std::vector<std::uint32_t>> rows;  // RREF, pivot columns ascending
  std::vector<std::size_t> pivots;               // pivot column of each row

  std::size_t rank() const { return rows.size(); }
};

/// Homogeneous ideal over F_p with per-degree echelon caches. Generators are
/// stored monic, deduplicated and degree-sorted; the unit ideal is
/// represented by the single generator 1. Queries on a shared ideal are
/// thread-safe; each degree slice is eliminated at most once.
class HomIdeal {
 public:
  HomIdeal(PrimeField field, std::uint32_t nvars, std::vector<Polynomial> gens);

  const PrimeField& field() const { return field_; }
  std::uint32_t nvars() const { return nvars_; }
  const std::vector<Polynomial>& gens() const { return gens_; }

  const EchelonBasis& degree_basis(std::uint32_t d) const;

  /// Degreewise membership; non-homogeneous inputs are tested component by
  /// component.
  bool contains(const Polynomial& g) const;

  bool is_unit() const;
  bool is_zero() const { return gens_.empty(); }
  bool is_subset_of(const HomIdeal& other) const;
  bool equals(const HomIdeal& other) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::uint32_t, std::shared_ptr<const EchelonBasis>> slices;
  };

  PrimeField field_;
  std::uint32_t nvars_;
  std::vector<Polynomial> gens_;
  // copies of an ideal share the cache; the generator set is immutable
  std::shared_ptr<Cache> cache_;
};

inline bool is_subset(const HomIdeal& a, const HomIdeal& b) { return a.is_subset_of(b); }
inline bool equals(const HomIdeal& a, const HomIdeal& b) { return a.equals(b); }
inline bool is_unit(const HomIdeal& a) { return a.is_unit(); }

/// Incremental reduced row echelon form over F_p.
class Rref {
 public:
  Rref(PrimeField field, std::size_t width);

  /// Reduces `row` in place against the current basis, then inserts it if a
  /// pivot survives. Returns the pivot column, or nullopt if the row reduced
  /// to zero.
  std::optional<std::size_t> insert(std::vector<std::uint32_t>& row);

  /// Reduces a copy of `row` against the basis; true if it vanishes.
  bool reduces_to_zero(std::vector<std::uint32_t> row) const;
  void reduce(std::vector<std::uint32_t>& row) const;

  const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::size_t rank() const { return rows_.size(); }

 private:
  PrimeField field_;
  std::size_t width_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Homogeneous a_i of degree deg g - deg g_i with g = sum a_i * g_i, or
/// nullopt when g is not in the ideal generated by `gens`. The returned
/// solution is the deterministic one obtained by zeroing the free unknowns of
/// the echelonized linear system.
std::optional<std::vector<Polynomial>> express(const Polynomial& g,
                                               const std::vector<Polynomial>& gens);

/// Greedy redundancy-pruned generating set: candidates are sorted by degree
/// and kept only when not already spanned.
std::vector<Polynomial> minimal_span(PrimeField field, std::uint32_t nvars,
                                     std::vector<Polynomial> candidates);

}  // namespace fplevel
