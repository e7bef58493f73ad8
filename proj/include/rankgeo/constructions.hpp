#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rankgeo/grw.hpp"
#include "rankgeo/qsystem.hpp"

namespace rankgeo {

enum class Family : std::uint8_t { H1, H2, Gabidulin };

/// Parameters of a named family; n applies to the evaluation codes only
/// (they need 1 <= k <= n <= m), h1/h2 need k >= 1 (h2 additionally m >= 2).
struct FamilyParams {
  Family family = Family::H1;
  std::int64_t q = 2;
  std::int64_t m = 2;
  std::int64_t k = 1;
  std::optional<std::int64_t> n;
};

RankMetricCode construct_family(const FamilyParams& params,
                                std::uint64_t table_bound = kDefaultTableBound);

/// The constant rank-weight family: the generator's columns are the fixed
/// F_q-basis {b_i e_j} of F_{q^m}^k in lexicographic (j, i) order, so the
/// q-system is the whole ambient space. Parameters [mk, k, m], weights (mr)_r.
RankMetricCode hadamard_h1(std::int64_t q, std::int64_t m, std::int64_t k,
                           std::uint64_t table_bound = kDefaultTableBound);

/// The dual of hadamard_h1; parameters [mk, (m-1)k, 2]. Requires m >= 2,
/// otherwise the dual would be zero-dimensional.
RankMetricCode hadamard_h2(std::int64_t q, std::int64_t m, std::int64_t k,
                           std::uint64_t table_bound = kDefaultTableBound);

/// Closed form for the h2 weight hierarchy: {n+1-i : 1 <= i < km, m does not
/// divide i}, ascending.
std::vector<std::size_t> hadamard_h2_expected_hierarchy(std::int64_t m, std::int64_t k);

/// Evaluation-power construction on F_q-independent points (the expansion
/// basis prefix): G[i][j] = a_j^{q^i}. Maximum rank distance d = n - k + 1,
/// self-checked at construction when the codeword count is small.
RankMetricCode gabidulin(std::int64_t q, std::int64_t m, std::int64_t n, std::int64_t k,
                         std::uint64_t table_bound = kDefaultTableBound);

/// If every r-dimensional F_{q^m}-subspace S meets X in the same F_q-dimension
/// l, then q^n = (q^l - 1)(q^{mk} - 1)/(q^{mr} - 1) + 1. Reports either the
/// verified identity or two witness subspaces with different intersection
/// dimensions.
struct CountingIdentityReport {
  bool uniform = false;
  std::size_t common_dim = 0;  // l, when uniform
  bool identity_holds = false;
  std::uint64_t lhs = 0;  // q^n
  std::uint64_t rhs = 0;  // (q^l - 1)(q^{mk} - 1)/(q^{mr} - 1) + 1
  std::optional<std::pair<Matrix, Matrix>> witnesses;
};

CountingIdentityReport check_counting_identity(const QSystem& x, std::size_t r,
                                               const Limits& lim = {});

/// Outcome of the constant rank-weight classification. Degenerate inputs are
/// reduced first and the reduction is classified (and reported). A constant
/// weight verdict with k > 1 carries the basis certificate: n = mk, the
/// generator columns span F_{q^m}^k over F_q, and the hierarchy is (mr)_r.
struct ClassificationResult {
  enum class Verdict : std::uint8_t { ConstantWeight, NotConstantWeight };
  enum class Structure : std::uint8_t { SingleGenerator, HadamardEquivalent, NotApplicable };

  Verdict verdict = Verdict::NotConstantWeight;
  Structure structure = Structure::NotApplicable;
  std::size_t weight = 0;  // the common weight when constant
  std::optional<std::pair<Codeword, Codeword>> witnesses;  // words of distinct weights
  std::optional<Codeword> single_generator;  // the generator row in the k = 1 case
  bool reduced = false;
  std::size_t original_length = 0;
  std::size_t reduced_length = 0;
  bool basis_certificate = false;
  std::vector<std::size_t> hierarchy_weights;  // filled for the certificate case
};

ClassificationResult classify_constant_weight(const RankMetricCode& code, const Limits& lim = {});

}  // namespace rankgeo
