#include "rankgeo/code.hpp"

#include <string>
#include <utility>

namespace rankgeo {

namespace detail {

std::uint64_t checked_codeword_count(const RankMetricCode& code, const Limits& lim,
                                     bool projective) {
  const std::uint64_t qm = code.tower()->size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < code.k(); ++i)
    if (__builtin_mul_overflow(total, qm, &total))
      throw EnumerationTooLarge("codeword enumeration exceeds the cap", UINT64_MAX);
  const std::uint64_t count = projective ? (total - 1) / (qm - 1) : total;
  if (count > lim.codeword_cap)
    throw EnumerationTooLarge("codeword enumeration exceeds the cap", count);
  return count;
}

}  // namespace detail

RankMetricCode::RankMetricCode(TowerPtr tower, Matrix generator, Matrix parity)
    : tower_(std::move(tower)), generator_(std::move(generator)), parity_(std::move(parity)) {}

Codeword RankMetricCode::encode(const std::vector<FieldElement>& message) const {
  if (message.size() != k()) throw DimensionOutOfRange("message length must equal k");
  return Codeword{tower_, message * generator_};
}

RankMetricCode make_code(const TowerPtr& tower, const Matrix& generator_in) {
  if (tower != generator_in.tower()) throw MixedTowers("generator belongs to a different tower");
  auto canon = rref(generator_in);
  if (canon.rank == 0 || canon.rank < generator_in.rows())
    throw RankDeficientGenerator("generator must have full row rank >= 1 over F_{q^m}");
  Matrix parity = kernel(canon.mat);
  // G H^T = 0 by construction of the kernel; keep the cheap cross-check
  const Matrix product = canon.mat * parity.transpose();
  for (std::size_t r = 0; r < product.rows(); ++r)
    for (std::size_t c = 0; c < product.cols(); ++c)
      if (!product.at(r, c).is_zero()) throw Error("internal: parity-check construction failed");
  return RankMetricCode(tower, std::move(canon.mat), std::move(parity));
}

RankMetricCode dual(const RankMetricCode& code) {
  if (code.k() == code.n())
    throw RankDeficientGenerator("dual of the full space has dimension 0 and is not a code here");
  return make_code(code.tower(), code.parity_check());
}

std::size_t rank_weight(const Codeword& word) {
  Matrix as_rows(word.tower, word.coords.size(), 1);
  for (std::size_t i = 0; i < word.coords.size(); ++i) as_rows.set(i, 0, word.coords[i]);
  return fq_rank_of_fqm_vectors(as_rows);
}

std::size_t hamming_weight(const Codeword& word) {
  std::size_t w = 0;
  for (auto c : word.coords)
    if (!c.is_zero()) ++w;
  return w;
}

std::size_t min_rank_distance(const RankMetricCode& code, const Limits& lim) {
  std::size_t best = SIZE_MAX;
  for_each_projective_codeword(
      code, [&](const Codeword& w) { best = std::min(best, rank_weight(w)); }, lim);
  return best;
}

std::map<std::size_t, std::uint64_t> rank_weight_distribution(const RankMetricCode& code,
                                                              const Limits& lim) {
  std::map<std::size_t, std::uint64_t> hist;
  for_each_codeword(
      code, [&](const Codeword& w) { ++hist[rank_weight(w)]; }, lim);
  return hist;
}

bool is_nondegenerate(const RankMetricCode& code) {
  return fq_rank_of_fqm_vectors(code.generator().transpose()) == code.n();
}

DegenerateReduction reduce_degenerate(const RankMetricCode& code) {
  const TowerPtr& t = code.tower();
  const std::size_t n = code.n();
  const FieldTower& F = *t;

  // F_q-kernel of v -> sum_i v_i * column_i of G: expand the columns over F_q;
  // v annihilates the columns iff v * expanded = 0.
  const Matrix cols = code.generator().transpose();  // row r = column r of G
  const std::size_t m = static_cast<std::size_t>(F.m());
  Matrix expanded(t, n, code.k() * m, Scalars::Fq);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < code.k(); ++c) {
      const auto coords = F.expand(cols.at(r, c));
      for (std::size_t j = 0; j < m; ++j) expanded.set(r, c * m + j, coords[j]);
    }
  // v (length n) is in the kernel iff v * expanded = 0
  const Matrix null_basis = kernel(expanded.transpose());
  const std::size_t n_prime = n - null_basis.rows();

  // Complete the kernel basis to a basis of F_q^n with standard vectors; the
  // new basis becomes the columns of M, kernel vectors last, so G M = [G' | 0].
  std::vector<std::vector<FieldElement>> chosen;
  auto extended_rank = [&](const std::vector<FieldElement>& candidate) {
    Matrix test(t, chosen.size() + null_basis.rows() + 1, n, Scalars::Fq);
    std::size_t row = 0;
    for (const auto& v : chosen) {
      for (std::size_t c = 0; c < n; ++c) test.set(row, c, v[c]);
      ++row;
    }
    for (std::size_t r = 0; r < null_basis.rows(); ++r) {
      for (std::size_t c = 0; c < n; ++c) test.set(row, c, null_basis.at(r, c));
      ++row;
    }
    for (std::size_t c = 0; c < n; ++c) test.set(row, c, candidate[c]);
    return rank(test);
  };
  for (std::size_t i = 0; i < n && chosen.size() < n_prime; ++i) {
    std::vector<FieldElement> e(n, FieldElement::zero());
    e[i] = F.one();
    if (extended_rank(e) == chosen.size() + null_basis.rows() + 1) chosen.push_back(e);
  }

  Matrix transform(t, n, n, Scalars::Fq);
  std::size_t placed = 0;
  for (const auto& v : chosen) {
    for (std::size_t c = 0; c < n; ++c) transform.set(c, placed, v[c]);
    ++placed;
  }
  for (std::size_t r = 0; r < null_basis.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) transform.set(c, placed, null_basis.at(r, c));
    ++placed;
  }

  const Matrix transformed = code.generator() * transform;
  std::vector<std::size_t> keep(n_prime);
  for (std::size_t i = 0; i < n_prime; ++i) keep[i] = i;
  const Matrix reduced_gen = transformed.take_cols(keep);
  for (std::size_t r = 0; r < code.k(); ++r)
    for (std::size_t c = n_prime; c < n; ++c)
      if (!transformed.at(r, c).is_zero())
        throw Error("internal: degenerate reduction left a nonzero column");
  return DegenerateReduction{make_code(t, reduced_gen), std::move(transform), n};
}

}  // namespace rankgeo
