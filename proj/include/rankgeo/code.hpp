#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rankgeo/linalg.hpp"

namespace rankgeo {

/// A length-n word over F_{q^m} tied to its tower.
struct Codeword {
  TowerPtr tower;
  std::vector<FieldElement> coords;

  std::size_t length() const { return coords.size(); }
  friend bool operator==(const Codeword& a, const Codeword& b) {
    return a.tower == b.tower && a.coords == b.coords;
  }
};

/// An [n, k] F_{q^m}-linear rank metric code. The generator matrix is kept in
/// RREF canonical form, so the matrix is the identity of the code (two codes
/// are equal exactly when their canonical generators are); the parity-check
/// matrix is computed once at construction with G H^T = 0.
class RankMetricCode {
 public:
  const TowerPtr& tower() const { return tower_; }
  std::size_t n() const { return generator_.cols(); }
  std::size_t k() const { return generator_.rows(); }
  const Matrix& generator() const { return generator_; }
  const Matrix& parity_check() const { return parity_; }

  Codeword encode(const std::vector<FieldElement>& message) const;

  friend bool operator==(const RankMetricCode& a, const RankMetricCode& b) {
    return a.generator_ == b.generator_;
  }

  friend RankMetricCode make_code(const TowerPtr& tower, const Matrix& generator_in);

 private:
  RankMetricCode(TowerPtr tower, Matrix generator, Matrix parity);

  TowerPtr tower_;
  Matrix generator_;
  Matrix parity_;
};

/// Canonicalizes the given generator matrix; throws RankDeficientGenerator if
/// its rows are dependent over F_{q^m} (which covers k = 0).
RankMetricCode make_code(const TowerPtr& tower, const Matrix& generator_in);

/// The dual code, generated by the parity-check matrix. dual(dual(C)) == C.
/// Rejects k = n since the dual would be zero-dimensional.
RankMetricCode dual(const RankMetricCode& code);

/// Dimension over F_q of the span of the coordinates in F_{q^m};
/// zero exactly for the zero word and never more than min(n, m).
std::size_t rank_weight(const Codeword& word);
std::size_t hamming_weight(const Codeword& word);

/// Minimum rank weight over the nonzero codewords. Enumerates one codeword
/// per projective point of the message space (rank weight is invariant under
/// nonzero scaling).
std::size_t min_rank_distance(const RankMetricCode& code, const Limits& lim = {});

/// Histogram weight -> number of codewords over all q^{mk} codewords.
std::map<std::size_t, std::uint64_t> rank_weight_distribution(const RankMetricCode& code,
                                                              const Limits& lim = {});

/// True iff the columns of the generator are F_q-independent, i.e. the code's
/// column span has full dimension n over F_q.
bool is_nondegenerate(const RankMetricCode& code);

struct DegenerateReduction {
  RankMetricCode code;            // equivalent non-degenerate code of length n'
  Matrix column_transform;        // M in GL_n(F_q) with G M = [G' | 0]
  std::size_t original_length;
};

/// Splits off the zero columns of an equivalent generator. For an already
/// non-degenerate code this returns the code itself with the identity
/// transform.
DegenerateReduction reduce_degenerate(const RankMetricCode& code);

/// Invokes fn for every codeword (all q^{mk} of them, message order).
template <class Fn>
void for_each_codeword(const RankMetricCode& code, Fn&& fn, const Limits& lim = {});

/// Invokes fn once per projective message class (first nonzero coordinate 1).
template <class Fn>
void for_each_projective_codeword(const RankMetricCode& code, Fn&& fn, const Limits& lim = {});

// --- implementation of the enumeration templates ---

namespace detail {

std::uint64_t checked_codeword_count(const RankMetricCode& code, const Limits& lim,
                                     bool projective);

}  // namespace detail

template <class Fn>
void for_each_codeword(const RankMetricCode& code, Fn&& fn, const Limits& lim) {
  detail::checked_codeword_count(code, lim, false);
  const TowerPtr& t = code.tower();
  const std::size_t k = code.k();
  std::vector<std::uint64_t> odo(k, 0);
  std::vector<FieldElement> msg(k, FieldElement::zero());
  const std::uint64_t values = t->size();
  while (true) {
    fn(code.encode(msg));
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (++odo[i] < values) {
        msg[i] = t->nth_value(Scalars::Fqm, odo[i]);
        break;
      }
      odo[i] = 0;
      msg[i] = FieldElement::zero();
    }
    if (i == k) break;
  }
}

template <class Fn>
void for_each_projective_codeword(const RankMetricCode& code, Fn&& fn, const Limits& lim) {
  detail::checked_codeword_count(code, lim, true);
  const TowerPtr& t = code.tower();
  const std::size_t k = code.k();
  const std::uint64_t values = t->size();
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::vector<FieldElement> msg(k, FieldElement::zero());
    msg[lead] = t->one();
    std::vector<std::uint64_t> odo(k - lead - 1, 0);
    while (true) {
      fn(code.encode(msg));
      std::size_t i = 0;
      for (; i < odo.size(); ++i) {
        if (++odo[i] < values) {
          msg[lead + 1 + i] = t->nth_value(Scalars::Fqm, odo[i]);
          break;
        }
        odo[i] = 0;
        msg[lead + 1 + i] = FieldElement::zero();
      }
      if (i == odo.size()) break;
    }
  }
}

}  // namespace rankgeo
