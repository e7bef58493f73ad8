#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "rankgeo/errors.hpp"

namespace rankgeo {

/// Element of a FieldTower in discrete-log form: the exponent of the fixed
/// primitive generator g, or the zero marker. Serialized as -1 for zero and
/// as the exponent otherwise; there is exactly one representation per element
/// and log 0 is the unit.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  static constexpr FieldElement zero() { return {}; }
  static constexpr FieldElement from_log(std::int32_t log) {
    FieldElement a;
    a.log_ = log;
    return a;
  }

  constexpr bool is_zero() const { return log_ < 0; }
  /// Exponent of the generator, or -1 for zero (the serialized form).
  constexpr std::int32_t log() const { return log_; }

  friend constexpr bool operator==(FieldElement a, FieldElement b) { return a.log_ == b.log_; }
  friend constexpr bool operator!=(FieldElement a, FieldElement b) { return a.log_ != b.log_; }
  friend constexpr bool operator<(FieldElement a, FieldElement b) { return a.log_ < b.log_; }

 private:
  std::int32_t log_ = -1;
};

/// Which scalars a matrix or an enumeration draws from: the subfield F_q or
/// the extension F_{q^m}. Both are represented inside the same tower.
enum class Scalars : std::uint8_t { Fq, Fqm };

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

/// F_q-coordinate expansion of F_{q^m} with respect to a fixed basis of m
/// elements that are linearly independent over F_q. Construction inverts the
/// change-of-basis matrix over F_p once; each expansion is then a single
/// matrix-vector product.
class SubfieldExpansion {
 public:
  /// Throws NotABasis if the given elements are F_q-dependent.
  SubfieldExpansion(const FieldTower& tower, std::vector<FieldElement> basis);

  const std::vector<FieldElement>& basis() const { return basis_; }
  /// Coordinates c with a = sum c_i * basis_i; every c_i lies in F_q.
  std::vector<FieldElement> expand(FieldElement a) const;
  FieldElement contract(const std::vector<FieldElement>& coords) const;

 private:
  const FieldTower* tower_;
  std::vector<FieldElement> basis_;
  std::vector<FieldElement> fp_basis_of_fq_;    // 1, gq, ..., gq^{e-1}
  std::vector<std::int32_t> inverse_;           // (e*m) x (e*m) over F_p, row-major
};

inline constexpr std::uint64_t kDefaultTableBound = std::uint64_t(1) << 20;

/// The tower F_p < F_q = F_{p^e} < F_{q^m}, realized as the single field
/// F_{p^{e*m}} over the lexicographically smallest primitive modulus for
/// (p, e*m). Multiplication adds exponents, addition goes through the Zech
/// logarithm table, and F_q is carved out by the exponent divisibility test.
/// Immutable after construction; all operations are pure and thread-safe.
class FieldTower {
 public:
  std::int64_t p() const { return p_; }
  std::int64_t e() const { return e_; }
  std::int64_t m() const { return m_; }
  /// Size of the middle field, q = p^e.
  std::int64_t q() const { return q_; }
  /// Extension degree over F_p, e*m.
  std::int64_t degree() const { return degree_; }
  /// Size of the top field, q^m.
  std::uint64_t size() const { return size_; }
  /// Multiplicative order q^m - 1.
  std::int64_t order() const { return order_; }
  /// Modulus coefficients in ascending degree, length degree()+1, monic.
  const std::vector<std::int32_t>& modulus() const { return modulus_; }
  /// Exponent step carving F_q out of F_{q^m}: (q^m-1)/(q-1).
  std::int64_t subfield_step() const { return subfield_step_; }

  FieldElement one() const { return FieldElement::from_log(0); }
  FieldElement gen() const { return FieldElement::from_log(order_ == 1 ? 0 : 1); }
  /// Checked construction from a serialized value (-1 or an exponent).
  FieldElement element_from_serialized(std::int64_t v) const;
  /// The element c*1 for an integer c (reduced mod p).
  FieldElement from_integer(std::int64_t c) const;

  FieldElement add(FieldElement a, FieldElement b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::int64_t diff = b.log() - a.log();
    if (diff < 0) diff += order_;
    const std::int32_t z = zech_[static_cast<std::size_t>(diff)];
    if (z < 0) return FieldElement::zero();
    std::int64_t s = a.log() + z;
    if (s >= order_) s -= order_;
    return FieldElement::from_log(static_cast<std::int32_t>(s));
  }

  FieldElement neg(FieldElement a) const {
    if (a.is_zero() || p_ == 2) return a;
    std::int64_t s = a.log() + minus_one_log_;
    if (s >= order_) s -= order_;
    return FieldElement::from_log(static_cast<std::int32_t>(s));
  }

  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.is_zero() || b.is_zero()) return FieldElement::zero();
    std::int64_t s = a.log() + b.log();
    if (s >= order_) s -= order_;
    return FieldElement::from_log(static_cast<std::int32_t>(s));
  }

  FieldElement inv(FieldElement a) const {
    if (a.is_zero()) throw InverseOfZero("inverse of zero");
    return FieldElement::from_log(static_cast<std::int32_t>((order_ - a.log()) % order_));
  }

  FieldElement pow(FieldElement a, std::int64_t n) const;
  /// Frobenius power x -> x^{q^times} relative to the subfield F_q.
  FieldElement frobenius(FieldElement a, std::int64_t times = 1) const;

  bool is_in_subfield(FieldElement a) const {
    return a.is_zero() || a.log() % subfield_step_ == 0;
  }

  /// Number of scalars in the given field: q or q^m.
  std::uint64_t scalar_count(Scalars s) const {
    return s == Scalars::Fq ? static_cast<std::uint64_t>(q_) : size_;
  }

  /// Deterministic indexing of field values: 0 is zero, then generator powers
  /// (stepped for the subfield). Used by enumerators and the RNG mapping.
  FieldElement nth_value(Scalars s, std::uint64_t idx) const {
    if (idx == 0) return FieldElement::zero();
    const std::int64_t step = s == Scalars::Fq ? subfield_step_ : 1;
    return FieldElement::from_log(static_cast<std::int32_t>((static_cast<std::int64_t>(idx) - 1) * step % order_));
  }

  /// Coordinates of a over F_p in the polynomial basis 1, g, ..., g^{degree-1}.
  std::vector<std::int32_t> fp_digits(FieldElement a) const;

  /// The default expansion basis of F_{q^m}/F_q: 1, g, ..., g^{m-1}.
  const std::vector<FieldElement>& default_basis() const { return default_basis_; }
  const SubfieldExpansion& default_expansion() const { return *default_expansion_; }
  std::vector<FieldElement> expand(FieldElement a) const { return default_expansion_->expand(a); }
  FieldElement contract(const std::vector<FieldElement>& coords) const {
    return default_expansion_->contract(coords);
  }

  friend TowerPtr make_tower(std::int64_t p, std::int64_t e, std::int64_t m,
                             std::uint64_t table_bound);

 private:
  FieldTower() = default;

  std::int64_t p_ = 0, e_ = 0, m_ = 0;
  std::int64_t degree_ = 0;
  std::uint64_t size_ = 0;
  std::int64_t order_ = 0;
  std::int64_t q_ = 0;
  std::int64_t subfield_step_ = 0;
  std::int32_t minus_one_log_ = 0;
  std::vector<std::int32_t> modulus_;
  std::vector<std::int32_t> zech_;
  std::vector<std::uint32_t> power_enc_;  // base-p encoding of g^i
  std::vector<FieldElement> scalar_table_;  // c*1 for c = 0..p-1
  std::vector<FieldElement> default_basis_;
  std::unique_ptr<const SubfieldExpansion> default_expansion_;
};

/// Builds the tower for F_p < F_{p^e} < F_{(p^e)^m}. The modulus is the
/// lexicographically smallest primitive polynomial of degree e*m over F_p
/// (smallest when coefficient vectors are read as base-p integers), so the
/// construction is deterministic across runs and platforms.
TowerPtr make_tower(std::int64_t p, std::int64_t e, std::int64_t m,
                    std::uint64_t table_bound = kDefaultTableBound);

/// Convenience spelling for a prime power q = p^e.
TowerPtr make_tower_q(std::int64_t q, std::int64_t m,
                      std::uint64_t table_bound = kDefaultTableBound);

/// Splits a prime power into (p, e); throws NotPrime otherwise.
std::pair<std::int64_t, std::int64_t> split_prime_power(std::int64_t q);

}  // namespace rankgeo
