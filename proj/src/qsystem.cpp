#include "rankgeo/qsystem.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace rankgeo {
namespace {

// number of elements of X, checked against the cap
std::uint64_t checked_element_count(const QSystem& x, const Limits& lim) {
  const std::uint64_t q = static_cast<std::uint64_t>(x.tower()->q());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < x.n(); ++i)
    if (__builtin_mul_overflow(total, q, &total))
      throw EnumerationTooLarge("element walk of the q-system exceeds the cap", UINT64_MAX);
  if (total > lim.brute_cap)
    throw EnumerationTooLarge("element walk of the q-system exceeds the cap", total);
  return total;
}

// exact log_q with a divisibility guarantee
std::size_t exact_log(std::uint64_t count, std::uint64_t q) {
  std::size_t dim = 0;
  std::uint64_t v = 1;
  while (v < count) {
    v *= q;
    ++dim;
  }
  if (v != count) throw Error("internal: intersection size is not a power of q");
  return dim;
}

}  // namespace

std::vector<std::vector<FieldElement>> QSystem::elements(const Limits& lim) const {
  const std::uint64_t total = checked_element_count(*this, lim);
  const FieldTower& F = *tower();
  const std::size_t nn = n(), kk = k();
  std::vector<std::vector<FieldElement>> out;
  out.reserve(total);
  std::vector<std::uint64_t> odo(nn, 0);
  std::vector<FieldElement> cur(kk, FieldElement::zero());
  out.push_back(cur);
  const std::uint64_t q = static_cast<std::uint64_t>(F.q());
  for (std::uint64_t step = 1; step < total; ++step) {
    std::size_t i = 0;
    for (; i < nn; ++i) {
      if (++odo[i] < q) break;
      odo[i] = 0;
    }
    // rebuild from the coefficients (keeps the walk simple and exact)
    std::fill(cur.begin(), cur.end(), FieldElement::zero());
    for (std::size_t j = 0; j < nn; ++j) {
      if (odo[j] == 0) continue;
      const FieldElement a = F.nth_value(Scalars::Fq, odo[j]);
      for (std::size_t row = 0; row < kk; ++row)
        cur[row] = F.add(cur[row], F.mul(a, points_.at(row, j)));
    }
    out.push_back(cur);
  }
  return out;
}

QSystem make_qsystem(const Matrix& basis_columns) {
  if (fq_rank_of_fqm_vectors(basis_columns.transpose()) != basis_columns.cols())
    throw DegenerateCode("columns must be F_q-independent");
  if (rank(basis_columns) != basis_columns.rows())
    throw BadParameters("q-system must span the ambient space (not lie in a hyperplane)");
  return QSystem(basis_columns);
}

QSystem qsystem_from_code(const RankMetricCode& code) {
  if (!is_nondegenerate(code))
    throw DegenerateCode("q-system requires a non-degenerate code; reduce it first");
  return make_qsystem(code.generator());
}

RankMetricCode code_from_qsystem(const QSystem& x) {
  return make_code(x.tower(), x.points());
}

std::size_t intersection_dim_bruteforce(const QSystem& x, const Matrix& subspace,
                                        const Limits& lim) {
  const auto R = rref(subspace);
  std::uint64_t members = 0;
  for (const auto& elem : x.elements(lim)) {
    const auto residue = reduce_against(R.mat, R.pivots, elem);
    bool zero = true;
    for (auto v : residue) zero = zero && v.is_zero();
    if (zero) ++members;
  }
  return exact_log(members, static_cast<std::uint64_t>(x.tower()->q()));
}

std::size_t intersection_dim_kernel(const QSystem& x, const Matrix& subspace) {
  const auto R = rref(subspace);
  const FieldTower& F = *x.tower();
  const std::size_t m = static_cast<std::size_t>(F.m());
  // Row i holds the F_q expansion of the residue of P_i modulo the subspace;
  // a combination of the P_i lies in the subspace iff it kills every residue.
  Matrix residues(x.tower(), x.n(), x.k() * m, Scalars::Fq);
  for (std::size_t i = 0; i < x.n(); ++i) {
    const auto residue = reduce_against(R.mat, R.pivots, x.points().col(i));
    for (std::size_t c = 0; c < x.k(); ++c) {
      const auto coords = F.expand(residue[c]);
      for (std::size_t t = 0; t < m; ++t) residues.set(i, c * m + t, coords[t]);
    }
  }
  return x.n() - rank(residues);
}

namespace {

bool element_walk_fits(const QSystem& x, const Limits& lim) {
  const std::uint64_t q = static_cast<std::uint64_t>(x.tower()->q());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < x.n(); ++i)
    if (__builtin_mul_overflow(total, q, &total)) return false;
  return total <= lim.brute_cap;
}

}  // namespace

std::size_t intersection_dim(const QSystem& x, const Matrix& subspace, const Limits& lim) {
  if (element_walk_fits(x, lim)) return intersection_dim_bruteforce(x, subspace, lim);
  return intersection_dim_kernel(x, subspace);
}

namespace {

// Shared walk for the geometric weight: the element list of X is precomputed
// once and tested against each subspace.
std::size_t max_intersection_over_subspaces(const QSystem& x, std::size_t subspace_dim,
                                            const Limits& lim) {
  const TowerPtr& tower = x.tower();
  const std::uint64_t q = static_cast<std::uint64_t>(tower->q());

  if (element_walk_fits(x, lim)) {
    const auto elems = x.elements(lim);
    auto count_members = [&](const Matrix& sub) {
      const auto R = rref(sub);
      std::uint64_t members = 0;
      for (const auto& elem : elems) {
        const auto residue = reduce_against(R.mat, R.pivots, elem);
        bool zero = true;
        for (auto v : residue) zero = zero && v.is_zero();
        if (zero) ++members;
      }
      return exact_log(members, q);
    };
    return subspace_reduce<std::size_t>(
        tower, Scalars::Fqm, x.k(), subspace_dim, 0,
        [&](const Matrix& sub) { return count_members(sub); },
        [](std::size_t a, std::size_t b) { return std::max(a, b); }, lim);
  }
  return subspace_reduce<std::size_t>(
      tower, Scalars::Fqm, x.k(), subspace_dim, 0,
      [&](const Matrix& sub) { return intersection_dim_kernel(x, sub); },
      [](std::size_t a, std::size_t b) { return std::max(a, b); }, lim);
}

}  // namespace

std::size_t grw_geometric(const QSystem& x, std::size_t r, const Limits& lim) {
  if (r < 1 || r > x.k()) throw DimensionOutOfRange("generalized weight index must be in 1..k");
  return x.n() - max_intersection_over_subspaces(x, x.k() - r, lim);
}

std::size_t grw_geometric(const RankMetricCode& code, std::size_t r, const Limits& lim) {
  return grw_geometric(qsystem_from_code(code), r, lim);
}

std::vector<LinearSetPoint> linear_set_points(const QSystem& x, const Limits& lim) {
  const FieldTower& F = *x.tower();
  std::set<std::vector<FieldElement>> reps;
  for (const auto& elem : x.elements(lim)) {
    std::size_t lead = elem.size();
    for (std::size_t i = 0; i < elem.size(); ++i)
      if (!elem[i].is_zero()) {
        lead = i;
        break;
      }
    if (lead == elem.size()) continue;  // zero vector
    const FieldElement scale = F.inv(elem[lead]);
    std::vector<FieldElement> norm(elem.size());
    for (std::size_t i = 0; i < elem.size(); ++i) norm[i] = F.mul(scale, elem[i]);
    reps.insert(std::move(norm));
  }
  std::vector<LinearSetPoint> out;
  out.reserve(reps.size());
  for (const auto& rep : reps) {
    Matrix line(x.tower(), 1, x.k());
    for (std::size_t c = 0; c < x.k(); ++c) line.set(0, c, rep[c]);
    out.push_back(LinearSetPoint{rep, intersection_dim(x, line, lim)});
  }
  return out;
}

std::size_t subspace_weight(const QSystem& x, const Matrix& subspace, const Limits& lim) {
  return intersection_dim(x, subspace, lim);
}

bool is_scattered(const QSystem& x, const Limits& lim) {
  for (const auto& point : linear_set_points(x, lim))
    if (point.weight != 1) return false;
  return true;
}

}  // namespace rankgeo
