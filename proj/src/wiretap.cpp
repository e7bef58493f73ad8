#include "rankgeo/wiretap.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace rankgeo {
namespace {

FieldElement random_element(const FieldTower& tower, Rng& rng) {
  return tower.nth_value(Scalars::Fqm, rng.below(tower.size()));
}

void require_observation(const RankMetricCode& code, const Matrix& observation) {
  if (observation.tower() != code.tower())
    throw MixedTowers("observation matrix belongs to a different tower");
  if (observation.cols() != code.n())
    throw DimensionOutOfRange("observation matrix must have n columns");
  for (std::size_t r = 0; r < observation.rows(); ++r)
    for (std::size_t c = 0; c < observation.cols(); ++c)
      if (!code.tower()->is_in_subfield(observation.at(r, c)))
        throw RankDeficientB("observation matrix must have entries in F_q");
  if (rank(observation) != observation.rows())
    throw RankDeficientB("observation matrix must have full row rank");
}

Matrix as_fq(const Matrix& m) {
  Matrix out(m.tower(), m.rows(), m.cols(), Scalars::Fq);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, m.at(r, c));
  return out;
}

}  // namespace

std::vector<FieldElement> syndrome(const RankMetricCode& code, const Codeword& word) {
  const Matrix& parity = code.parity_check();
  if (word.coords.size() != code.n()) throw DimensionOutOfRange("word length must equal n");
  const FieldTower& F = *code.tower();
  std::vector<FieldElement> s(parity.rows(), FieldElement::zero());
  for (std::size_t i = 0; i < parity.rows(); ++i)
    for (std::size_t j = 0; j < parity.cols(); ++j)
      s[i] = F.add(s[i], F.mul(parity.at(i, j), word.coords[j]));
  return s;
}

Codeword coset_encode(const RankMetricCode& code, const std::vector<FieldElement>& secret,
                      Rng& rng) {
  const std::size_t redundancy = code.n() - code.k();
  if (secret.size() != redundancy)
    throw DimensionOutOfRange("secret must have length n - k");
  const FieldTower& F = *code.tower();

  // particular solution: the parity check is RREF, so placing s_j on the j-th
  // pivot column solves H x^T = s outright
  std::vector<FieldElement> x(code.n(), FieldElement::zero());
  const auto parity_pivots = rref(code.parity_check()).pivots;
  for (std::size_t j = 0; j < redundancy; ++j) x[parity_pivots[j]] = secret[j];

  std::vector<FieldElement> message(code.k());
  for (auto& c : message) c = random_element(F, rng);
  const Codeword random_word = code.encode(message);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = F.add(x[i], random_word.coords[i]);

  Codeword out{code.tower(), std::move(x)};
  if (syndrome(code, out) != secret)
    throw InconsistentSyndrome("coset encoding failed to reproduce the secret");
  return out;
}

WiretapInstance transmit(const RankMetricCode& code, const std::vector<FieldElement>& secret,
                         std::uint64_t seed) {
  Rng rng(seed);
  return WiretapInstance{code, secret, coset_encode(code, secret, rng), seed};
}

std::vector<FieldElement> eavesdrop(const Codeword& word, const Matrix& observation) {
  if (observation.cols() != word.coords.size())
    throw DimensionOutOfRange("observation matrix must have n columns");
  if (rank(observation) != observation.rows())
    throw RankDeficientB("observation matrix must have full row rank");
  const FieldTower& F = *word.tower;
  std::vector<FieldElement> w(observation.rows(), FieldElement::zero());
  for (std::size_t i = 0; i < observation.rows(); ++i)
    for (std::size_t j = 0; j < observation.cols(); ++j)
      w[i] = F.add(w[i], F.mul(observation.at(i, j), word.coords[j]));
  return w;
}

std::size_t leakage_dim(const RankMetricCode& code, const Matrix& observation) {
  require_observation(code, observation);
  const std::size_t u = observation.rows();
  const std::size_t redundancy = code.n() - code.k();

  // route 1: dim(A + B) = dim A + dim B - dim(A intersect B)
  const std::size_t stacked = rank(vstack(observation, code.parity_check()));
  const std::size_t via_stack = u + redundancy - stacked;

  // route 2: rank-nullity through the orthogonal complement of <B>
  const Matrix complement = kernel(as_fq(observation));
  const std::size_t via_complement =
      redundancy - rank(code.parity_check() * complement.transpose());

  if (via_stack != via_complement)
    throw Error("internal: leakage dimension routes disagree");
  return via_stack;
}

LeakageProfile profile(const RankMetricCode& code, const Limits& lim) {
  const std::size_t n = code.n();
  const std::size_t redundancy = n - code.k();
  const Matrix& parity = code.parity_check();
  LeakageProfile out;
  out.delta.resize(n + 1);
  out.Delta.resize(n + 1);
  using Acc = std::pair<std::size_t, std::size_t>;  // (max delta, min rank H M^T)
  for (std::size_t u = 0; u <= n; ++u) {
    const Acc acc = subspace_reduce<Acc>(
        code.tower(), Scalars::Fq, n, u, Acc{0, SIZE_MAX},
        [&](const Matrix& obs) -> Acc {
          const std::size_t stacked = rank(vstack(obs, parity));
          const std::size_t leak = u + redundancy - stacked;
          const Matrix complement = kernel(obs);
          const std::size_t hm = rank(parity * complement.transpose());
          return {leak, hm};
        },
        [](Acc a, Acc b) -> Acc {
          return {std::max(a.first, b.first), std::min(a.second, b.second)};
        },
        lim);
    out.delta[u] = acc.first;
    out.Delta[u] = acc.second == SIZE_MAX ? redundancy : acc.second;
    if (out.delta[u] + out.Delta[u] != redundancy)
      throw Error("internal: delta_u + Delta_u != n - k");
  }
  return out;
}

SandwichReport verify_sandwich(const RankMetricCode& code, const Limits& lim) {
  SandwichReport report;
  report.profile = profile(code, lim);
  report.hierarchy = hierarchy(code, GrwMethod::Subcode, lim);
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  const std::size_t redundancy = n - k;

  report.identity_ok = true;
  for (std::size_t u = 0; u <= n; ++u)
    report.identity_ok =
        report.identity_ok && report.profile.delta[u] + report.profile.Delta[u] == redundancy;

  report.all_hold = true;
  for (std::size_t u = 0; u <= n; ++u) {
    SandwichRow row;
    row.u = u;
    row.delta = report.profile.delta[u];
    row.Delta = report.profile.Delta[u];
    row.lhs_index = n - u - row.Delta;  // always within 0..k
    row.lhs_vacuous = row.lhs_index == 0;
    row.rhs_vacuous = row.lhs_index == k;
    const bool lhs_ok =
        row.lhs_vacuous || report.hierarchy.weights[row.lhs_index - 1] <= n - u;
    const bool rhs_ok = row.rhs_vacuous || n - u < report.hierarchy.weights[row.lhs_index];
    row.holds = lhs_ok && rhs_ok;
    report.all_hold = report.all_hold && row.holds;
    report.rows.push_back(row);
  }
  return report;
}

std::size_t check_leakage_relations(const RankMetricCode& code, std::uint64_t seed,
                                    std::size_t rounds) {
  Rng rng(seed);
  const FieldTower& F = *code.tower();
  const std::size_t n = code.n();
  const std::size_t redundancy = n - code.k();
  std::size_t checked = 0;

  for (std::size_t round = 0; round < rounds; ++round) {
    // random full-rank observation matrix over F_q
    const std::size_t u = 1 + rng.below(n);
    Matrix obs(code.tower(), u, n, Scalars::Fq);
    do {
      for (std::size_t r = 0; r < u; ++r)
        for (std::size_t c = 0; c < n; ++c)
          obs.set(r, c, F.nth_value(Scalars::Fq, rng.below(static_cast<std::uint64_t>(F.q()))));
    } while (rank(obs) != u);

    // elements of <B> intersect <H>: left kernel of the stacked matrix,
    // split as z = (lambda | -mu)
    const Matrix stacked = vstack(obs, code.parity_check());
    const Matrix zs = kernel(stacked.transpose());

    std::vector<FieldElement> secret(redundancy);
    for (auto& s : secret) s = F.nth_value(Scalars::Fqm, rng.below(F.size()));
    const Codeword x = coset_encode(code, secret, rng);
    const auto w = eavesdrop(x, obs);

    for (std::size_t z = 0; z < zs.rows(); ++z) {
      FieldElement mu_s = FieldElement::zero();
      for (std::size_t i = 0; i < redundancy; ++i)
        mu_s = F.add(mu_s, F.mul(F.neg(zs.at(z, u + i)), secret[i]));
      FieldElement lambda_w = FieldElement::zero();
      for (std::size_t i = 0; i < u; ++i) lambda_w = F.add(lambda_w, F.mul(zs.at(z, i), w[i]));
      if (mu_s != lambda_w)
        throw InconsistentSyndrome("intersection relation mu s = lambda w failed");
      ++checked;
    }
  }
  return checked;
}

}  // namespace rankgeo
