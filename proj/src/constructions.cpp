#include "rankgeo/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace rankgeo {
namespace {

std::uint64_t checked_pow_u64(std::uint64_t base, std::size_t exp) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    std::uint64_t next;
    if (__builtin_mul_overflow(v, base, &next)) throw Overflow("power exceeds 64 bits");
    v = next;
  }
  return v;
}

}  // namespace

RankMetricCode construct_family(const FamilyParams& params, std::uint64_t table_bound) {
  switch (params.family) {
    case Family::H1:
      return hadamard_h1(params.q, params.m, params.k, table_bound);
    case Family::H2:
      return hadamard_h2(params.q, params.m, params.k, table_bound);
    case Family::Gabidulin:
      if (!params.n) throw BadParameters("the evaluation family needs n");
      return gabidulin(params.q, params.m, *params.n, params.k, table_bound);
  }
  throw BadParameters("unknown family");
}

RankMetricCode hadamard_h1(std::int64_t q, std::int64_t m, std::int64_t k,
                           std::uint64_t table_bound) {
  if (k < 1) throw BadParameters("dimension k must be positive");
  auto tower = make_tower_q(q, m, table_bound);
  const auto& basis = tower->default_basis();
  const std::size_t mk = static_cast<std::size_t>(m * k);
  Matrix gen(tower, static_cast<std::size_t>(k), mk);
  for (std::int64_t j = 0; j < k; ++j)
    for (std::int64_t i = 0; i < m; ++i)
      gen.set(static_cast<std::size_t>(j), static_cast<std::size_t>(j * m + i),
              basis[static_cast<std::size_t>(i)]);
  return make_code(tower, gen);
}

RankMetricCode hadamard_h2(std::int64_t q, std::int64_t m, std::int64_t k,
                           std::uint64_t table_bound) {
  if (m < 2) throw DualDimensionZero("the dual family needs m >= 2");
  return dual(hadamard_h1(q, m, k, table_bound));
}

std::vector<std::size_t> hadamard_h2_expected_hierarchy(std::int64_t m, std::int64_t k) {
  std::vector<std::size_t> out;
  const std::int64_t n = m * k;
  for (std::int64_t i = 1; i < n; ++i)
    if (i % m != 0) out.push_back(static_cast<std::size_t>(n + 1 - i));
  std::sort(out.begin(), out.end());
  return out;
}

RankMetricCode gabidulin(std::int64_t q, std::int64_t m, std::int64_t n, std::int64_t k,
                         std::uint64_t table_bound) {
  if (k < 1 || k > n || n > m) throw BadParameters("need 1 <= k <= n <= m");
  auto tower = make_tower_q(q, m, table_bound);
  const auto& basis = tower->default_basis();
  Matrix gen(tower, static_cast<std::size_t>(k), static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < k; ++i)
    for (std::int64_t j = 0; j < n; ++j)
      gen.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
              tower->frobenius(basis[static_cast<std::size_t>(j)], i));
  auto code = make_code(tower, gen);

  // self-check the distance on small instances
  const std::uint64_t qm = tower->size();
  std::uint64_t words = 1;
  bool small = true;
  for (std::int64_t i = 0; i < k && small; ++i) {
    if (words > (std::uint64_t(1) << 16) / qm) small = false;
    words *= qm;
  }
  if (small && min_rank_distance(code) != static_cast<std::size_t>(n - k + 1))
    throw Error("internal: evaluation-power construction is not MRD");
  return code;
}

CountingIdentityReport check_counting_identity(const QSystem& x, std::size_t r,
                                               const Limits& lim) {
  if (r < 1 || r > x.k()) throw DimensionOutOfRange("subspace dimension must be in 1..k");
  CountingIdentityReport report;
  const std::uint64_t q = static_cast<std::uint64_t>(x.tower()->q());
  const std::size_t m = static_cast<std::size_t>(x.tower()->m());

  std::optional<Matrix> first;
  std::optional<std::size_t> common;
  auto en = enumerate_subspaces(x.tower(), Scalars::Fqm, x.k(), r, lim);
  while (auto sub = en.next()) {
    const std::size_t dim = intersection_dim(x, *sub, lim);
    if (!common) {
      common = dim;
      first = *sub;
      continue;
    }
    if (dim != *common) {
      report.uniform = false;
      report.witnesses = std::make_pair(*first, *sub);
      return report;
    }
  }
  report.uniform = true;
  report.common_dim = *common;

  report.lhs = checked_pow_u64(q, x.n());
  const std::uint64_t num =
      (checked_pow_u64(q, report.common_dim) - 1) * (checked_pow_u64(q, m * x.k()) - 1);
  const std::uint64_t den = checked_pow_u64(q, m * r) - 1;
  if (num % den == 0) {
    report.rhs = num / den + 1;
    report.identity_holds = report.lhs == report.rhs;
  }
  return report;
}

ClassificationResult classify_constant_weight(const RankMetricCode& code, const Limits& lim) {
  ClassificationResult result;
  result.original_length = code.n();

  const bool degenerate = !is_nondegenerate(code);
  const RankMetricCode working = degenerate ? reduce_degenerate(code).code : code;
  result.reduced = degenerate;
  result.reduced_length = working.n();

  // one representative per projective class decides constancy; scaling by
  // nonzero field elements never changes the rank weight
  std::optional<std::size_t> first_weight;
  std::optional<Codeword> first_word;
  for_each_projective_codeword(
      working,
      [&](const Codeword& w) {
        if (result.witnesses) return;
        const std::size_t rw = rank_weight(w);
        if (!first_weight) {
          first_weight = rw;
          first_word = w;
        } else if (rw != *first_weight) {
          result.witnesses = std::make_pair(*first_word, w);
        }
      },
      lim);

  if (result.witnesses) {
    result.verdict = ClassificationResult::Verdict::NotConstantWeight;
    result.structure = ClassificationResult::Structure::NotApplicable;
    return result;
  }

  result.verdict = ClassificationResult::Verdict::ConstantWeight;
  result.weight = *first_weight;

  if (working.k() == 1) {
    result.structure = ClassificationResult::Structure::SingleGenerator;
    result.single_generator = Codeword{working.tower(), working.generator().row(0)};
    return result;
  }

  // constant weight with k > 1 forces n = mk with the generator columns an
  // F_q-basis of the ambient space and weights (mr)_r; anything else would
  // contradict the classification
  const std::size_t m = static_cast<std::size_t>(working.tower()->m());
  if (working.n() != m * working.k())
    throw ClassificationContradiction("constant weight with k > 1 but n != mk");
  const std::size_t span =
      fq_rank_of_fqm_vectors(working.generator().transpose());
  result.basis_certificate = span == m * working.k();
  if (!result.basis_certificate)
    throw ClassificationContradiction("generator columns do not span the ambient space");
  const auto h = hierarchy(working, GrwMethod::Subcode, lim);
  result.hierarchy_weights = h.weights;
  for (std::size_t r = 1; r <= working.k(); ++r)
    if (h.weights[r - 1] != m * r)
      throw ClassificationContradiction("hierarchy of a constant-weight code is not (mr)_r");
  result.structure = ClassificationResult::Structure::HadamardEquivalent;
  return result;
}

}  // namespace rankgeo
