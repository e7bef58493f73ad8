#include "rankgeo/linalg.hpp"

#include <algorithm>
#include <string>

namespace rankgeo {
namespace {

void require_same_tower(const Matrix& a, const Matrix& b) {
  if (a.tower() != b.tower()) throw MixedTowers("matrices belong to different towers");
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("64-bit overflow in exact count");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("64-bit overflow in exact count");
  return r;
}

}  // namespace

Matrix::Matrix(TowerPtr tower, std::size_t rows, std::size_t cols, Scalars field)
    : tower_(std::move(tower)), rows_(rows), cols_(cols), field_(field), entries_(rows * cols) {}

Matrix Matrix::identity(TowerPtr tower, std::size_t n, Scalars field) {
  Matrix m(std::move(tower), n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = m.tower_->one();
  return m;
}

Matrix Matrix::from_rows(TowerPtr tower, std::vector<std::vector<FieldElement>> rows, Scalars field) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  Matrix m(std::move(tower), r, c, field);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionOutOfRange("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, FieldElement v) {
  if (field_ == Scalars::Fq && !tower_->is_in_subfield(v))
    throw BadParameters("entry of an F_q matrix must lie in the subfield");
  entries_[r * cols_ + c] = v;
}

std::vector<FieldElement> Matrix::row(std::size_t r) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<FieldElement> Matrix::col(std::size_t c) const {
  std::vector<FieldElement> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(tower_, cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = at(r, c);
  return t;
}

Matrix Matrix::take_cols(const std::vector<std::size_t>& idx) const {
  Matrix out(tower_, rows_, idx.size(), field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < idx.size(); ++j) out.entries_[r * idx.size() + j] = at(r, idx[j]);
  return out;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c)
    std::swap(entries_[a * cols_ + c], entries_[b * cols_ + c]);
}

void Matrix::scale_row(std::size_t r, FieldElement s) {
  const FieldTower& F = *tower_;
  for (std::size_t c = 0; c < cols_; ++c)
    entries_[r * cols_ + c] = F.mul(entries_[r * cols_ + c], s);
}

void Matrix::axpy_row(std::size_t dst, std::size_t src, FieldElement s) {
  const FieldTower& F = *tower_;
  if (s.is_zero()) return;
  for (std::size_t c = 0; c < cols_; ++c)
    entries_[dst * cols_ + c] = F.add(entries_[dst * cols_ + c], F.mul(s, entries_[src * cols_ + c]));
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.tower_ == b.tower_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_tower(a, b);
  if (a.cols() != b.rows()) throw DimensionOutOfRange("matrix product shape mismatch");
  const FieldTower& F = *a.tower();
  const Scalars field =
      a.field() == Scalars::Fq && b.field() == Scalars::Fq ? Scalars::Fq : Scalars::Fqm;
  Matrix out(a.tower(), a.rows(), b.cols(), field);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElement aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const FieldElement prod = F.mul(aik, b.at(k, j));
        if (!prod.is_zero()) out.set(i, j, F.add(out.at(i, j), prod));
      }
    }
  return out;
}

std::vector<FieldElement> operator*(const std::vector<FieldElement>& v, const Matrix& m) {
  if (v.size() != m.rows()) throw DimensionOutOfRange("vector-matrix shape mismatch");
  const FieldTower& F = *m.tower();
  std::vector<FieldElement> out(m.cols(), FieldElement::zero());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[j] = F.add(out[j], F.mul(v[k], m.at(k, j)));
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_tower(a, b);
  if (a.cols() != b.cols()) throw DimensionOutOfRange("vstack column mismatch");
  const Scalars field =
      a.field() == Scalars::Fq && b.field() == Scalars::Fq ? Scalars::Fq : Scalars::Fqm;
  Matrix out(a.tower(), a.rows() + b.rows(), a.cols(), field);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out.set(a.rows() + r, c, b.at(r, c));
  return out;
}

RrefResult rref(Matrix m) {
  const FieldTower& F = *m.tower();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pr = row;
    while (pr < m.rows() && m.at(pr, col).is_zero()) ++pr;
    if (pr == m.rows()) continue;
    m.swap_rows(pr, row);
    m.scale_row(row, F.inv(m.at(row, col)));
    for (std::size_t r2 = 0; r2 < m.rows(); ++r2) {
      if (r2 == row) continue;
      const FieldElement v = m.at(r2, col);
      if (!v.is_zero()) m.axpy_row(r2, row, F.neg(v));
    }
    pivots.push_back(col);
    ++row;
  }
  const std::size_t rk = pivots.size();
  return {std::move(m), rk, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<FieldElement> reduce_against(const Matrix& rref_mat,
                                         const std::vector<std::size_t>& pivots,
                                         std::vector<FieldElement> v) {
  const FieldTower& F = *rref_mat.tower();
  if (v.size() != rref_mat.cols()) throw DimensionOutOfRange("vector length mismatch");
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const FieldElement c = v[pivots[i]];
    if (c.is_zero()) continue;
    const FieldElement nc = F.neg(c);
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] = F.add(v[j], F.mul(nc, rref_mat.at(i, j)));
  }
  return v;
}

Matrix kernel(const Matrix& m) {
  const auto R = rref(m);
  const FieldTower& F = *m.tower();
  std::vector<std::size_t> free_cols;
  {
    std::size_t p = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (p < R.pivots.size() && R.pivots[p] == c)
        ++p;
      else
        free_cols.push_back(c);
    }
  }
  Matrix basis(m.tower(), free_cols.size(), m.cols(), m.field());
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    const std::size_t f = free_cols[i];
    basis.set(i, f, F.one());
    for (std::size_t p = 0; p < R.pivots.size(); ++p)
      basis.set(i, R.pivots[p], F.neg(R.mat.at(p, f)));
  }
  auto canon = rref(std::move(basis));
  return std::move(canon.mat);
}

std::size_t fq_rank_of_fqm_vectors(const Matrix& vectors_as_rows) {
  return fq_rank_of_fqm_vectors(vectors_as_rows, vectors_as_rows.tower()->default_expansion());
}

std::size_t fq_rank_of_fqm_vectors(const Matrix& vectors_as_rows, const SubfieldExpansion& expansion) {
  const TowerPtr& tower = vectors_as_rows.tower();
  const std::size_t m = static_cast<std::size_t>(tower->m());
  Matrix expanded(tower, vectors_as_rows.rows(), vectors_as_rows.cols() * m, Scalars::Fq);
  for (std::size_t r = 0; r < vectors_as_rows.rows(); ++r)
    for (std::size_t c = 0; c < vectors_as_rows.cols(); ++c) {
      const auto coords = expansion.expand(vectors_as_rows.at(r, c));
      for (std::size_t t = 0; t < m; ++t) expanded.set(r, c * m + t, coords[t]);
    }
  return rank(expanded);
}

std::uint64_t gaussian_binomial(std::size_t n, std::size_t r, std::uint64_t s) {
  if (r > n) throw DimensionOutOfRange("gaussian binomial needs 0 <= r <= n");
  // [i j]_s = [i-1 j-1]_s + s^j [i-1 j]_s
  std::vector<std::uint64_t> prev(r + 1, 0), cur(r + 1, 0);
  prev[0] = 1;
  std::vector<std::uint64_t> spow(r + 1, 1);
  for (std::size_t j = 1; j <= r; ++j) spow[j] = checked_mul(spow[j - 1], s);
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = 1;
    for (std::size_t j = 1; j <= std::min(i, r); ++j)
      cur[j] = checked_add(prev[j - 1], j <= i - 1 ? checked_mul(spow[j], prev[j]) : 0);
    std::swap(prev, cur);
  }
  return prev[r];
}

std::vector<std::vector<std::size_t>> SubspaceEnumerator::pivot_patterns(std::size_t n,
                                                                         std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> cur(r);
  for (std::size_t i = 0; i < r; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    if (r == 0) break;
    // next combination in lexicographic order
    std::size_t i = r;
    while (i-- > 0) {
      if (cur[i] != i + n - r) {
        ++cur[i];
        for (std::size_t j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
  }
  return out;
}

SubspaceEnumerator::SubspaceEnumerator(TowerPtr tower, Scalars field, std::size_t n, std::size_t r)
    : SubspaceEnumerator(std::move(tower), field, n, r, pivot_patterns(n, r)) {}

SubspaceEnumerator::SubspaceEnumerator(TowerPtr tower, Scalars field, std::size_t n, std::size_t r,
                                       std::vector<std::vector<std::size_t>> patterns)
    : tower_(std::move(tower)), field_(field), n_(n), r_(r), patterns_(std::move(patterns)) {
  if (r > n) throw DimensionOutOfRange("subspace dimension exceeds ambient dimension");
  values_ = tower_->scalar_count(field_);
  if (patterns_.empty())
    exhausted_ = true;
  else
    load_pattern();
}

void SubspaceEnumerator::load_pattern() {
  const auto& piv = patterns_[pattern_idx_];
  free_pos_.clear();
  std::vector<bool> is_pivot(n_, false);
  for (std::size_t p : piv) is_pivot[p] = true;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t c = piv[i] + 1; c < n_; ++c)
      if (!is_pivot[c]) free_pos_.emplace_back(i, c);
  odometer_.assign(free_pos_.size(), 0);
}

std::optional<Matrix> SubspaceEnumerator::next() {
  if (exhausted_) return std::nullopt;
  const auto& piv = patterns_[pattern_idx_];
  Matrix m(tower_, r_, n_, field_);
  for (std::size_t i = 0; i < r_; ++i) m.set(i, piv[i], tower_->one());
  for (std::size_t t = 0; t < free_pos_.size(); ++t)
    m.set(free_pos_[t].first, free_pos_[t].second, tower_->nth_value(field_, odometer_[t]));
  ++emitted_;

  // advance the odometer, little-endian over free positions
  std::size_t t = 0;
  for (; t < odometer_.size(); ++t) {
    if (++odometer_[t] < values_) break;
    odometer_[t] = 0;
  }
  if (t == odometer_.size()) {
    if (++pattern_idx_ == patterns_.size())
      exhausted_ = true;
    else
      load_pattern();
  }
  return m;
}

std::uint64_t checked_subspace_count(const TowerPtr& tower, Scalars field, std::size_t n,
                                     std::size_t r, const Limits& lim) {
  if (r > n) throw DimensionOutOfRange("subspace dimension exceeds ambient dimension");
  std::uint64_t count;
  try {
    count = gaussian_binomial(n, r, tower->scalar_count(field));
  } catch (const Overflow&) {
    throw EnumerationTooLarge("subspace count does not fit 64 bits", UINT64_MAX);
  }
  if (count > lim.subspace_cap)
    throw EnumerationTooLarge("subspace enumeration exceeds the cap", count);
  return count;
}

SubspaceEnumerator enumerate_subspaces(const TowerPtr& tower, Scalars field, std::size_t n,
                                       std::size_t r, const Limits& lim) {
  checked_subspace_count(tower, field, n, r, lim);
  return SubspaceEnumerator(tower, field, n, r);
}

}  // namespace rankgeo
