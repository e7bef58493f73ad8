#include "rankgeo/grw.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace rankgeo {

const char* grw_method_name(GrwMethod m) {
  switch (m) {
    case GrwMethod::Geometric:
      return "geometric";
    case GrwMethod::Subcode:
      return "subcode";
    case GrwMethod::Parity:
      return "parity";
  }
  return "?";
}

SubcodeHandle make_subcode(const RankMetricCode& parent, const Matrix& message_subspace) {
  if (message_subspace.cols() != parent.k())
    throw DimensionOutOfRange("message subspace must have k columns");
  if (rank(message_subspace) != message_subspace.rows())
    throw BadParameters("message subspace matrix must have full row rank");
  auto canon = rref(message_subspace * parent.generator());
  return SubcodeHandle{parent, message_subspace.rows(), std::move(canon.mat)};
}

std::size_t q_support_dim(const SubcodeHandle& subcode) {
  return fq_rank_of_fqm_vectors(subcode.generator.transpose());
}

std::size_t grw_subcode(const RankMetricCode& code, std::size_t r, const Limits& lim) {
  if (r < 1 || r > code.k())
    throw DimensionOutOfRange("generalized weight index must be in 1..k");
  const Matrix& gen = code.generator();
  return subspace_reduce<std::size_t>(
      code.tower(), Scalars::Fqm, code.k(), r, SIZE_MAX,
      [&](const Matrix& msg_space) {
        return fq_rank_of_fqm_vectors((msg_space * gen).transpose());
      },
      [](std::size_t a, std::size_t b) { return std::min(a, b); }, lim);
}

std::size_t grw_parity(const RankMetricCode& code, std::size_t r, const Limits& lim) {
  if (r < 1 || r > code.k())
    throw DimensionOutOfRange("generalized weight index must be in 1..k");
  const Matrix& parity = code.parity_check();
  const std::size_t n = code.n();
  // i >= r is forced by rank M = i and i - r >= rank(H M) >= 0; i = n always
  // succeeds because rank H = n - k <= n - r.
  for (std::size_t i = r; i <= n; ++i) {
    const bool found = subspace_reduce<bool>(
        code.tower(), Scalars::Fq, n, i, false,
        [&](const Matrix& rows) {
          return rank(parity * rows.transpose()) + r <= i;
        },
        [](bool a, bool b) { return a || b; }, lim);
    if (found) return i;
  }
  throw Error("internal: parity search failed to terminate by i = n");
}

WeightHierarchy hierarchy(const RankMetricCode& code, GrwMethod method, const Limits& lim) {
  WeightHierarchy h;
  h.n = code.n();
  h.k = code.k();
  h.method = method;
  h.weights.resize(code.k());
  for (std::size_t r = 1; r <= code.k(); ++r) {
    switch (method) {
      case GrwMethod::Geometric:
        h.weights[r - 1] = grw_geometric(code, r, lim);
        break;
      case GrwMethod::Subcode:
        h.weights[r - 1] = grw_subcode(code, r, lim);
        break;
      case GrwMethod::Parity:
        h.weights[r - 1] = grw_parity(code, r, lim);
        break;
    }
  }
  // structural validation; failures here mean a bug, not a bad input
  const std::size_t top = fq_rank_of_fqm_vectors(code.generator().transpose());
  for (std::size_t r = 1; r <= code.k(); ++r) {
    if (h.weights[r - 1] == 0)
      throw HierarchyInvariantViolation("weight d_" + std::to_string(r) + " is zero");
    if (r >= 2 && h.weights[r - 1] <= h.weights[r - 2])
      throw HierarchyInvariantViolation("weights are not strictly increasing");
    if (h.weights[r - 1] > h.n - h.k + r)
      throw HierarchyInvariantViolation("generalized Singleton bound violated");
  }
  if (h.weights.back() != top)
    throw HierarchyInvariantViolation("top weight differs from the code's q-support dimension");
  return h;
}

DualityReport verify_duality(const RankMetricCode& code, const Limits& lim) {
  DualityReport report;
  report.primal = hierarchy(code, GrwMethod::Subcode, lim);
  const std::size_t n = code.n();
  if (code.k() < n) {
    report.dual_side = hierarchy(dual(code), GrwMethod::Subcode, lim);
  } else {
    report.dual_side.n = n;
    report.dual_side.k = 0;
    report.dual_side.method = GrwMethod::Subcode;
  }
  for (auto d : report.dual_side.weights) report.complement.push_back(n + 1 - d);
  std::sort(report.complement.begin(), report.complement.end());

  std::set<std::size_t> all(report.primal.weights.begin(), report.primal.weights.end());
  report.disjoint = true;
  for (auto v : report.complement) report.disjoint = report.disjoint && all.insert(v).second;
  report.covers_range = all.size() == n && *all.begin() == 1 && *all.rbegin() == n;
  report.ok = report.disjoint && report.covers_range;
  return report;
}

}  // namespace rankgeo
