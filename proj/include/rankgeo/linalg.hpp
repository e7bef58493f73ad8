#pragma once

#include <cstdint>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "rankgeo/field_tower.hpp"

namespace rankgeo {

/// Enumeration caps and worker count shared by all exhaustive searches.
/// Caps guard against accidentally unbounded runs; exceeding one raises
/// EnumerationTooLarge with the size that would have been enumerated.
struct Limits {
  std::uint64_t subspace_cap = 100'000'000;            // streamed subspaces
  std::uint64_t codeword_cap = std::uint64_t(1) << 22; // enumerated codewords
  std::uint64_t brute_cap = std::uint64_t(1) << 20;    // q^n intersection walks
  unsigned jobs = 1;
};

/// Dense matrix over the tower, tagged with the field its entries live in.
/// Entries of an Fq-tagged matrix always satisfy is_in_subfield.
class Matrix {
 public:
  Matrix(TowerPtr tower, std::size_t rows, std::size_t cols, Scalars field = Scalars::Fqm);
  static Matrix identity(TowerPtr tower, std::size_t n, Scalars field = Scalars::Fqm);
  static Matrix from_rows(TowerPtr tower, std::vector<std::vector<FieldElement>> rows,
                          Scalars field = Scalars::Fqm);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalars field() const { return field_; }
  const TowerPtr& tower() const { return tower_; }

  FieldElement at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, FieldElement v);

  std::vector<FieldElement> row(std::size_t r) const;
  std::vector<FieldElement> col(std::size_t c) const;

  Matrix transpose() const;
  /// Keeps the selected columns in the given order.
  Matrix take_cols(const std::vector<std::size_t>& idx) const;

  void swap_rows(std::size_t a, std::size_t b);
  void scale_row(std::size_t r, FieldElement s);
  /// row[dst] += s * row[src]
  void axpy_row(std::size_t dst, std::size_t src, FieldElement s);

  /// Entry-wise comparison; the field tag is metadata and does not take part.
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  TowerPtr tower_;
  std::size_t rows_, cols_;
  Scalars field_;
  std::vector<FieldElement> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
/// Stacks a on top of b.
Matrix vstack(const Matrix& a, const Matrix& b);
std::vector<FieldElement> operator*(const std::vector<FieldElement>& v, const Matrix& m);

struct RrefResult {
  Matrix mat;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form over the matrix's field; row space preserved.
RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Residue of v after elimination against the rows of an RREF matrix; zero
/// exactly when v lies in the row space.
std::vector<FieldElement> reduce_against(const Matrix& rref_mat,
                                         const std::vector<std::size_t>& pivots,
                                         std::vector<FieldElement> v);

/// Canonical (RREF) basis of the right null space, one basis vector per row;
/// rows() == cols(m) - rank(m).
Matrix kernel(const Matrix& m);

/// Dimension of the F_q-span of the given vectors over F_{q^m} (rows of the
/// matrix). Expands every coordinate over F_q and ranks the result; the value
/// does not depend on the expansion basis.
std::size_t fq_rank_of_fqm_vectors(const Matrix& vectors_as_rows);
std::size_t fq_rank_of_fqm_vectors(const Matrix& vectors_as_rows, const SubfieldExpansion& expansion);

/// Exact Gaussian binomial [n r]_s; throws Overflow past 64 bits.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t r, std::uint64_t s);

/// Streams every r-dimensional subspace of F^n exactly once as its canonical
/// RREF generator matrix, grouped by pivot column pattern.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(TowerPtr tower, Scalars field, std::size_t n, std::size_t r);
  /// Restricted to an explicit pivot-pattern subset (used for partitioning).
  SubspaceEnumerator(TowerPtr tower, Scalars field, std::size_t n, std::size_t r,
                     std::vector<std::vector<std::size_t>> patterns);

  std::optional<Matrix> next();
  std::uint64_t emitted() const { return emitted_; }

  static std::vector<std::vector<std::size_t>> pivot_patterns(std::size_t n, std::size_t r);

 private:
  void load_pattern();

  TowerPtr tower_;
  Scalars field_;
  std::size_t n_, r_;
  std::vector<std::vector<std::size_t>> patterns_;
  std::size_t pattern_idx_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> free_pos_;
  std::vector<std::uint64_t> odometer_;
  std::uint64_t values_ = 0;
  bool exhausted_ = false;
  std::uint64_t emitted_ = 0;
};

/// Cap-checked enumerator construction; the count is gaussian_binomial(n,r,s).
SubspaceEnumerator enumerate_subspaces(const TowerPtr& tower, Scalars field, std::size_t n,
                                       std::size_t r, const Limits& lim = {});

/// Number of r-dimensional subspaces of F^n for the tower's field choice,
/// checked against the subspace cap.
std::uint64_t checked_subspace_count(const TowerPtr& tower, Scalars field, std::size_t n,
                                     std::size_t r, const Limits& lim);

/// Folds map(M) over every r-dimensional subspace of F^n. With lim.jobs > 1
/// the pivot patterns are split across workers; combine must be associative
/// and commutative so the merge is order-independent.
template <class T, class MapFn, class CombineFn>
T subspace_reduce(const TowerPtr& tower, Scalars field, std::size_t n, std::size_t r, T init,
                  MapFn map, CombineFn combine, const Limits& lim = {}) {
  checked_subspace_count(tower, field, n, r, lim);
  auto patterns = SubspaceEnumerator::pivot_patterns(n, r);
  const unsigned jobs =
      std::min<unsigned>(lim.jobs, static_cast<unsigned>(patterns.size() ? patterns.size() : 1));
  if (jobs <= 1) {
    SubspaceEnumerator en(tower, field, n, r, std::move(patterns));
    T acc = init;
    while (auto m = en.next()) acc = combine(std::move(acc), map(*m));
    return acc;
  }
  std::vector<std::vector<std::vector<std::size_t>>> chunks(jobs);
  for (std::size_t i = 0; i < patterns.size(); ++i)
    chunks[i % jobs].push_back(std::move(patterns[i]));
  std::vector<T> partial(jobs, init);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w)
    workers.emplace_back([&, w] {
      SubspaceEnumerator en(tower, field, n, r, std::move(chunks[w]));
      T acc = partial[w];
      while (auto m = en.next()) acc = combine(std::move(acc), map(*m));
      partial[w] = std::move(acc);
    });
  for (auto& t : workers) t.join();
  T acc = std::move(partial[0]);
  for (unsigned w = 1; w < jobs; ++w) acc = combine(std::move(acc), std::move(partial[w]));
  return acc;
}

}  // namespace rankgeo
