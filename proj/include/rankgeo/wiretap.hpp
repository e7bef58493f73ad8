#pragma once

#include <cstdint>
#include <vector>

#include "rankgeo/grw.hpp"
#include "rankgeo/rng.hpp"

namespace rankgeo {

/// One coset transmission: the secret is the syndrome of the transmitted
/// word, H x^T = s at all times.
struct WiretapInstance {
  RankMetricCode code;
  std::vector<FieldElement> secret;      // length n - k
  Codeword transmitted;
  std::uint64_t seed;
};

/// Uniformly random solution of H x^T = s: a fixed particular solution plus a
/// uniformly random codeword.
Codeword coset_encode(const RankMetricCode& code, const std::vector<FieldElement>& secret,
                      Rng& rng);
WiretapInstance transmit(const RankMetricCode& code, const std::vector<FieldElement>& secret,
                         std::uint64_t seed);

/// H x^T as a vector of length n - k.
std::vector<FieldElement> syndrome(const RankMetricCode& code, const Codeword& word);

/// What the eavesdropper sees on u tapped edges: w = B x^T for a full-rank
/// u x n matrix over F_q.
std::vector<FieldElement> eavesdrop(const Codeword& word, const Matrix& observation);

/// Dimension over F_{q^m} of <B> intersected with <H> (row spaces inside
/// F_{q^m}^n). Computed twice: once from the stacked rank and once as
/// (n-k) - rank(H M^T) for M spanning the orthogonal complement of <B>;
/// the two must agree.
std::size_t leakage_dim(const RankMetricCode& code, const Matrix& observation);

/// delta_u (largest leakage over u-dimensional observation spaces) and
/// Delta_u (least rank(H M^T) over their complements) for u = 0..n.
/// delta_u + Delta_u = n - k holds for every u.
struct LeakageProfile {
  std::vector<std::size_t> delta;
  std::vector<std::size_t> Delta;
};

LeakageProfile profile(const RankMetricCode& code, const Limits& lim = {});

/// Per-u check of d_{n-u-Delta_u} <= n-u < d_{n-u-Delta_u+1}. Indices outside
/// 1..k use the conventions d_0 = 0 and d_{k+1} = infinity and are flagged as
/// vacuous rather than silently assumed.
struct SandwichRow {
  std::size_t u = 0;
  std::size_t delta = 0;
  std::size_t Delta = 0;
  std::size_t lhs_index = 0;  // n - u - Delta_u
  bool lhs_vacuous = false;   // lhs_index == 0
  bool rhs_vacuous = false;   // lhs_index == k
  bool holds = false;
};

struct SandwichReport {
  LeakageProfile profile;
  WeightHierarchy hierarchy;
  std::vector<SandwichRow> rows;
  bool all_hold = false;
  bool identity_ok = false;  // delta_u + Delta_u == n - k for every u
};

SandwichReport verify_sandwich(const RankMetricCode& code, const Limits& lim = {});

/// Samples random observation spaces, extracts elements y = lambda B = mu H
/// of the intersection, runs coset transmissions and checks the leaked linear
/// relation mu s = lambda w every time. Returns the number of relations
/// checked; throws InconsistentSyndrome if any fails.
std::size_t check_leakage_relations(const RankMetricCode& code, std::uint64_t seed,
                                    std::size_t rounds = 20);

}  // namespace rankgeo
