#pragma once

#include <cstdint>
#include <vector>

#include "rankgeo/code.hpp"

namespace rankgeo {

/// An n-dimensional F_q-subspace X of F_{q^m}^k spanning the ambient space
/// over F_{q^m} (so it is not contained in any hyperplane). Stored as the
/// k x n matrix whose columns P_1..P_n form an F_q-basis of X.
class QSystem {
 public:
  const TowerPtr& tower() const { return points_.tower(); }
  /// Ambient F_{q^m}-dimension.
  std::size_t k() const { return points_.rows(); }
  /// F_q-dimension of X.
  std::size_t n() const { return points_.cols(); }
  const Matrix& points() const { return points_; }

  /// All q^n elements of X in a fixed coefficient order (zero first).
  std::vector<std::vector<FieldElement>> elements(const Limits& lim = {}) const;

  friend QSystem make_qsystem(const Matrix& basis_columns);

 private:
  explicit QSystem(Matrix points) : points_(std::move(points)) {}
  Matrix points_;
};

/// Validates the two defining conditions: the columns are F_q-independent and
/// the matrix has full F_{q^m}-rank k.
QSystem make_qsystem(const Matrix& basis_columns);

/// The q-system spanned over F_q by the columns of the canonical generator.
/// Throws DegenerateCode when the columns are F_q-dependent.
QSystem qsystem_from_code(const RankMetricCode& code);
/// The code generated over F_{q^m} by [X]; round-trips with qsystem_from_code
/// on canonical forms.
RankMetricCode code_from_qsystem(const QSystem& x);

/// dim_{F_q}(X intersect S) for an F_{q^m}-subspace S given by a generator
/// matrix (any form; reduced internally). Walks the q^n elements of X when
/// that fits under lim.brute_cap and otherwise solves the expanded F_q kernel
/// system; the two routes agree and both are exposed for testing.
std::size_t intersection_dim(const QSystem& x, const Matrix& subspace, const Limits& lim = {});
std::size_t intersection_dim_bruteforce(const QSystem& x, const Matrix& subspace,
                                        const Limits& lim = {});
std::size_t intersection_dim_kernel(const QSystem& x, const Matrix& subspace);

/// r-th generalized rank weight via subspace intersections:
/// n minus the largest dim_{F_q}(X intersect Pi) over all F_{q^m}-subspaces
/// Pi of codimension r, enumerated directly as (k-r)-dimensional subspaces.
std::size_t grw_geometric(const QSystem& x, std::size_t r, const Limits& lim = {});
std::size_t grw_geometric(const RankMetricCode& code, std::size_t r, const Limits& lim = {});

/// A point of the linear set L_X: the projective class of a nonzero x in X,
/// normalized so the first nonzero coordinate is 1, with its weight
/// dim_{F_q}(X intersect <x>_{F_{q^m}}) >= 1.
struct LinearSetPoint {
  std::vector<FieldElement> representative;
  std::size_t weight;
};

/// All points of L_X with their weights, deduplicated and in a fixed order.
std::vector<LinearSetPoint> linear_set_points(const QSystem& x, const Limits& lim = {});

/// Weight of a projective subspace Lambda = PG(W) with respect to L_X, i.e.
/// dim_{F_q}(W intersect X).
std::size_t subspace_weight(const QSystem& x, const Matrix& subspace, const Limits& lim = {});

/// True iff every point of L_X has weight 1, equivalently
/// |L_X| = (q^n - 1)/(q - 1).
bool is_scattered(const QSystem& x, const Limits& lim = {});

}  // namespace rankgeo
