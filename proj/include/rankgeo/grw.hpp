#pragma once

#include <cstdint>
#include <vector>

#include "rankgeo/qsystem.hpp"

namespace rankgeo {

enum class GrwMethod : std::uint8_t { Geometric, Subcode, Parity };

const char* grw_method_name(GrwMethod m);

/// An r-dimensional subcode D < C, carried as the RREF generator of the image
/// of a message subspace under the parent generator.
struct SubcodeHandle {
  RankMetricCode parent;
  std::size_t r;
  Matrix generator;  // r x n, RREF over F_{q^m}
};

/// Subcode spanned by message_subspace * G, for an r x k matrix of full rank.
SubcodeHandle make_subcode(const RankMetricCode& parent, const Matrix& message_subspace);

/// Dimension over F_q of the span of the generator's columns (the q-support);
/// independent of the generator chosen for the subcode.
std::size_t q_support_dim(const SubcodeHandle& subcode);

/// r-th generalized rank weight as the least q-support dimension over all
/// r-dimensional subcodes. Enumerates the [k r]_{q^m} message subspaces.
std::size_t grw_subcode(const RankMetricCode& code, std::size_t r, const Limits& lim = {});

/// r-th generalized rank weight via the parity-check matrix: the least i such
/// that some M in F_q^{n x i} of rank i has i - r >= rank(H M). Only the
/// column space of M matters, so one canonical representative per F_q-subspace
/// is tried, with i ascending from r.
std::size_t grw_parity(const RankMetricCode& code, std::size_t r, const Limits& lim = {});

/// The full weight vector (d_1, ..., d_k) with the method that produced it.
/// Validated before returning: strictly increasing, d_k equal to the
/// q-support of the whole code, and d_r <= n - k + r throughout; a violation
/// signals an implementation bug, never an expected outcome.
struct WeightHierarchy {
  std::size_t n = 0;
  std::size_t k = 0;
  GrwMethod method = GrwMethod::Subcode;
  std::vector<std::size_t> weights;
};

WeightHierarchy hierarchy(const RankMetricCode& code, GrwMethod method, const Limits& lim = {});

/// Duality partition: the weights of C together with the reflected weights
/// n+1-d_r of the dual must tile {1, ..., n} exactly. For k = n the dual side
/// is empty and the weights of C alone must cover the range.
struct DualityReport {
  WeightHierarchy primal;
  WeightHierarchy dual_side;               // empty weight vector when k == n
  std::vector<std::size_t> complement;     // n + 1 - d_r(dual), ascending
  bool disjoint = false;
  bool covers_range = false;
  bool ok = false;
};

DualityReport verify_duality(const RankMetricCode& code, const Limits& lim = {});

}  // namespace rankgeo
