#include "rankgeo/field_tower.hpp"

#include <algorithm>
#include <cstddef>
#include <memory>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

namespace rankgeo {
namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// p^k, or nullopt past the bound.
std::optional<std::uint64_t> pow_checked(std::int64_t p, std::int64_t k, std::uint64_t bound) {
  std::uint64_t v = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    if (v > bound / static_cast<std::uint64_t>(p)) return std::nullopt;
    v *= static_cast<std::uint64_t>(p);
  }
  return v;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> fs;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

// Dense F_p[x] arithmetic used only for the modulus search. Coefficient
// vectors are ascending-degree with no trailing zeros.
using Poly = std::vector<std::int64_t>;

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, std::int64_t p) {
  std::vector<std::int64_t> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  const std::size_t deg = mod.size() - 1;  // mod is monic
  for (std::size_t i = prod.size(); i-- > deg;) {
    const std::int64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (std::size_t j = 0; j < deg; ++j)
      prod[i - deg + j] = ((prod[i - deg + j] - c * mod[j]) % p + p) % p;
  }
  prod.resize(deg);
  while (prod.size() > 1 && prod.back() == 0) prod.pop_back();
  return prod;
}

Poly poly_powmod(Poly base, std::int64_t n, const Poly& mod, std::int64_t p) {
  Poly result{1};
  while (n > 0) {
    if (n & 1) result = poly_mulmod(result, base, mod, p);
    base = poly_mulmod(base, base, mod, p);
    n >>= 1;
  }
  return result;
}

bool poly_is_one(const Poly& a) { return a.size() == 1 && a[0] == 1; }

// True iff x has multiplicative order p^deg - 1 in F_p[x]/(f). Since the unit
// group of a non-field quotient is strictly smaller, this single test also
// forces f to be irreducible.
bool is_primitive(const Poly& f, std::int64_t p, std::int64_t order,
                  const std::vector<std::int64_t>& order_factors) {
  if (f[0] == 0) return false;  // x would be a zero divisor
  const Poly x{0, 1};
  if (!poly_is_one(poly_powmod(x, order, f, p))) return false;
  for (std::int64_t r : order_factors)
    if (poly_is_one(poly_powmod(x, order / r, f, p))) return false;
  return true;
}

std::vector<std::int32_t> find_modulus(std::int64_t p, std::int64_t degree, std::int64_t order) {
  const auto factors = prime_factors(order);
  // Candidates ordered by the base-p integer formed by the non-leading
  // coefficients; the first primitive one is the fixed modulus for (p, degree).
  const std::uint64_t limit = *pow_checked(p, degree, UINT64_MAX);
  for (std::uint64_t enc = 0; enc < limit; ++enc) {
    Poly f(static_cast<std::size_t>(degree) + 1, 0);
    std::uint64_t t = enc;
    for (std::int64_t i = 0; i < degree; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(t % static_cast<std::uint64_t>(p));
      t /= static_cast<std::uint64_t>(p);
    }
    f[static_cast<std::size_t>(degree)] = 1;
    if (order == 1) {
      // Degree-1 special case: any monic x - a with a != 0 has trivial order;
      // pick the first with nonzero constant term.
      if (f[0] != 0) return std::vector<std::int32_t>(f.begin(), f.end());
      continue;
    }
    if (is_primitive(f, p, order, factors))
      return std::vector<std::int32_t>(f.begin(), f.end());
  }
  throw NoPolynomialInTable("no primitive modulus found for p=" + std::to_string(p) +
                            " degree=" + std::to_string(degree));
}

// Gauss-Jordan inverse of a d x d matrix over F_p; empty result if singular.
std::vector<std::int32_t> invert_mod_p(std::vector<std::int64_t> a, std::int64_t d, std::int64_t p) {
  auto modpow = [p](std::int64_t b, std::int64_t n) {
    std::int64_t r = 1;
    b %= p;
    while (n > 0) {
      if (n & 1) r = r * b % p;
      b = b * b % p;
      n >>= 1;
    }
    return r;
  };
  std::vector<std::int64_t> inv(static_cast<std::size_t>(d * d), 0);
  for (std::int64_t i = 0; i < d; ++i) inv[static_cast<std::size_t>(i * d + i)] = 1;
  auto A = [&](std::int64_t r, std::int64_t c) -> std::int64_t& {
    return a[static_cast<std::size_t>(r * d + c)];
  };
  auto B = [&](std::int64_t r, std::int64_t c) -> std::int64_t& {
    return inv[static_cast<std::size_t>(r * d + c)];
  };
  for (std::int64_t col = 0; col < d; ++col) {
    std::int64_t pivot = col;
    while (pivot < d && A(pivot, col) == 0) ++pivot;
    if (pivot == d) return {};
    if (pivot != col)
      for (std::int64_t c = 0; c < d; ++c) {
        std::swap(A(pivot, c), A(col, c));
        std::swap(B(pivot, c), B(col, c));
      }
    const std::int64_t s = modpow(A(col, col), p - 2);
    for (std::int64_t c = 0; c < d; ++c) {
      A(col, c) = A(col, c) * s % p;
      B(col, c) = B(col, c) * s % p;
    }
    for (std::int64_t r = 0; r < d; ++r) {
      if (r == col || A(r, col) == 0) continue;
      const std::int64_t f = A(r, col);
      for (std::int64_t c = 0; c < d; ++c) {
        A(r, c) = ((A(r, c) - f * A(col, c)) % p + p) % p;
        B(r, c) = ((B(r, c) - f * B(col, c)) % p + p) % p;
      }
    }
  }
  return std::vector<std::int32_t>(inv.begin(), inv.end());
}

}  // namespace

FieldElement FieldTower::element_from_serialized(std::int64_t v) const {
  if (v == -1) return FieldElement::zero();
  if (v < 0 || v >= order_)
    throw ParseError("serialized element " + std::to_string(v) + " out of range for field of order " +
                     std::to_string(order_));
  return FieldElement::from_log(static_cast<std::int32_t>(v));
}

FieldElement FieldTower::from_integer(std::int64_t c) const {
  c %= p_;
  if (c < 0) c += p_;
  return scalar_table_[static_cast<std::size_t>(c)];
}

FieldElement FieldTower::pow(FieldElement a, std::int64_t n) const {
  if (a.is_zero()) {
    if (n > 0) return a;
    if (n == 0) return one();
    throw InverseOfZero("negative power of zero");
  }
  std::int64_t t = n % order_;
  if (t < 0) t += order_;
  return FieldElement::from_log(static_cast<std::int32_t>(a.log() * t % order_));
}

FieldElement FieldTower::frobenius(FieldElement a, std::int64_t times) const {
  if (a.is_zero()) return a;
  std::int64_t qpow = 1;
  for (std::int64_t i = 0; i < times; ++i) qpow = qpow * (q_ % order_) % order_;
  return FieldElement::from_log(static_cast<std::int32_t>(a.log() * qpow % order_));
}

std::vector<std::int32_t> FieldTower::fp_digits(FieldElement a) const {
  std::vector<std::int32_t> digits(static_cast<std::size_t>(degree_), 0);
  if (a.is_zero()) return digits;
  std::uint32_t enc = power_enc_[static_cast<std::size_t>(a.log())];
  for (std::int64_t i = 0; i < degree_; ++i) {
    digits[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(enc % static_cast<std::uint32_t>(p_));
    enc /= static_cast<std::uint32_t>(p_);
  }
  return digits;
}

SubfieldExpansion::SubfieldExpansion(const FieldTower& tower, std::vector<FieldElement> basis)
    : tower_(&tower), basis_(std::move(basis)) {
  const std::int64_t m = tower.m(), e = tower.e(), d = tower.degree();
  if (static_cast<std::int64_t>(basis_.size()) != m)
    throw NotABasis("expected " + std::to_string(m) + " basis elements, got " +
                    std::to_string(basis_.size()));
  // F_p-basis of F_q: powers of the subfield generator.
  const FieldElement gq = FieldElement::from_log(
      static_cast<std::int32_t>(tower.subfield_step() % tower.order()));
  fp_basis_of_fq_.resize(static_cast<std::size_t>(e));
  fp_basis_of_fq_[0] = tower.one();
  for (std::int64_t j = 1; j < e; ++j)
    fp_basis_of_fq_[static_cast<std::size_t>(j)] = tower.mul(fp_basis_of_fq_[static_cast<std::size_t>(j - 1)], gq);

  // Columns are the F_p digit vectors of t_j * b_i; invertibility over F_p is
  // exactly F_q-independence of the b_i.
  std::vector<std::int64_t> cols(static_cast<std::size_t>(d * d), 0);
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = 0; j < e; ++j) {
      if (basis_[static_cast<std::size_t>(i)].is_zero()) throw NotABasis("zero basis element");
      const FieldElement prod = tower.mul(fp_basis_of_fq_[static_cast<std::size_t>(j)],
                                          basis_[static_cast<std::size_t>(i)]);
      const auto digits = tower.fp_digits(prod);
      const std::int64_t c = i * e + j;
      for (std::int64_t r = 0; r < d; ++r)
        cols[static_cast<std::size_t>(r * d + c)] = digits[static_cast<std::size_t>(r)];
    }
  inverse_ = invert_mod_p(std::move(cols), d, tower.p());
  if (inverse_.empty()) throw NotABasis("elements are F_q-dependent");
}

std::vector<FieldElement> SubfieldExpansion::expand(FieldElement a) const {
  const FieldTower& F = *tower_;
  const std::int64_t m = F.m(), e = F.e(), d = F.degree(), p = F.p();
  const auto digits = F.fp_digits(a);
  std::vector<FieldElement> coords(static_cast<std::size_t>(m), FieldElement::zero());
  for (std::int64_t i = 0; i < m; ++i) {
    FieldElement c = FieldElement::zero();
    for (std::int64_t j = 0; j < e; ++j) {
      std::int64_t y = 0;
      const std::int64_t row = i * e + j;
      for (std::int64_t t = 0; t < d; ++t)
        y += static_cast<std::int64_t>(inverse_[static_cast<std::size_t>(row * d + t)]) *
             digits[static_cast<std::size_t>(t)];
      c = F.add(c, F.mul(F.from_integer(y % p), fp_basis_of_fq_[static_cast<std::size_t>(j)]));
    }
    if (!F.is_in_subfield(c))
      throw CoordinateNotInSubfield("expansion produced a coordinate outside F_q");
    coords[static_cast<std::size_t>(i)] = c;
  }
  return coords;
}

FieldElement SubfieldExpansion::contract(const std::vector<FieldElement>& coords) const {
  const FieldTower& F = *tower_;
  if (coords.size() != basis_.size())
    throw DimensionOutOfRange("coordinate count does not match basis size");
  FieldElement acc = FieldElement::zero();
  for (std::size_t i = 0; i < coords.size(); ++i)
    acc = F.add(acc, F.mul(coords[i], basis_[i]));
  return acc;
}

TowerPtr make_tower(std::int64_t p, std::int64_t e, std::int64_t m, std::uint64_t table_bound) {
  if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
  if (e < 1 || m < 1) throw BadParameters("extension degrees must be positive");
  const std::int64_t degree = e * m;
  const auto size = pow_checked(p, degree, table_bound);
  if (!size)
    throw FieldTooLarge("p^(e*m) exceeds the table bound " + std::to_string(table_bound));

  // Towers are memoized per (p, e, m): construction is deterministic, the
  // objects are immutable, and sharing makes pointer identity the tower
  // identity across independently built codes.
  static std::mutex cache_mutex;
  static std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, TowerPtr> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({p, e, m});
    if (it != cache.end()) return it->second;
  }

  auto tower = std::shared_ptr<FieldTower>(new FieldTower());
  tower->p_ = p;
  tower->e_ = e;
  tower->m_ = m;
  tower->degree_ = degree;
  tower->size_ = *size;
  tower->order_ = static_cast<std::int64_t>(*size) - 1;
  tower->q_ = static_cast<std::int64_t>(*pow_checked(p, e, table_bound));
  tower->subfield_step_ = tower->order_ / (tower->q_ - 1);
  tower->minus_one_log_ = p == 2 ? 0 : static_cast<std::int32_t>(tower->order_ / 2);
  tower->modulus_ = find_modulus(p, degree, tower->order_);

  // Power table for g = x: repeated multiply-by-x with reduction, working on
  // base-p encodings.
  const std::int64_t N = tower->order_;
  tower->power_enc_.resize(static_cast<std::size_t>(N));
  std::vector<std::int32_t> digits(static_cast<std::size_t>(degree), 0);
  digits[0] = 1;
  std::vector<std::int32_t> log_of_enc(static_cast<std::size_t>(*size), -1);
  for (std::int64_t i = 0; i < N; ++i) {
    std::uint32_t enc = 0;
    for (std::int64_t t = degree; t-- > 0;)
      enc = enc * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(digits[static_cast<std::size_t>(t)]);
    if (log_of_enc[enc] != -1)
      throw NoPolynomialInTable("modulus is not primitive (power table collision)");
    log_of_enc[enc] = static_cast<std::int32_t>(i);
    tower->power_enc_[static_cast<std::size_t>(i)] = enc;
    // digits <- digits * x mod modulus
    const std::int32_t lead = digits[static_cast<std::size_t>(degree - 1)];
    for (std::int64_t t = degree - 1; t > 0; --t)
      digits[static_cast<std::size_t>(t)] = digits[static_cast<std::size_t>(t - 1)];
    digits[0] = 0;
    if (lead != 0)
      for (std::int64_t t = 0; t < degree; ++t)
        digits[static_cast<std::size_t>(t)] = static_cast<std::int32_t>(
            ((digits[static_cast<std::size_t>(t)] -
              static_cast<std::int64_t>(lead) * tower->modulus_[static_cast<std::size_t>(t)]) %
                 p +
             p) %
            p);
  }

  // Zech table: zech[k] = log(1 + g^k), or -1 when the sum is zero.
  tower->zech_.resize(static_cast<std::size_t>(N));
  for (std::int64_t k = 0; k < N; ++k) {
    const std::uint32_t enc = tower->power_enc_[static_cast<std::size_t>(k)];
    const std::uint32_t c0 = enc % static_cast<std::uint32_t>(p);
    const std::uint32_t bumped = enc - c0 + (c0 + 1) % static_cast<std::uint32_t>(p);
    tower->zech_[static_cast<std::size_t>(k)] = bumped == 0 ? -1 : log_of_enc[bumped];
  }

  tower->scalar_table_.resize(static_cast<std::size_t>(p));
  tower->scalar_table_[0] = FieldElement::zero();
  for (std::int64_t c = 1; c < p; ++c)
    tower->scalar_table_[static_cast<std::size_t>(c)] =
        tower->add(tower->scalar_table_[static_cast<std::size_t>(c - 1)], tower->one());

  tower->default_basis_.resize(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i)
    tower->default_basis_[static_cast<std::size_t>(i)] =
        FieldElement::from_log(static_cast<std::int32_t>(i % N));
  tower->default_expansion_ =
      std::make_unique<const SubfieldExpansion>(*tower, tower->default_basis_);

  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    // a racing builder may have won; either object is identical
    return cache.try_emplace({p, e, m}, tower).first->second;
  }
}

TowerPtr make_tower_q(std::int64_t q, std::int64_t m, std::uint64_t table_bound) {
  const auto [p, e] = split_prime_power(q);
  return make_tower(p, e, m, table_bound);
}

std::pair<std::int64_t, std::int64_t> split_prime_power(std::int64_t q) {
  if (q < 2) throw NotPrime("q must be at least 2");
  for (std::int64_t p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    std::int64_t e = 0, t = q;
    while (t % p == 0) {
      t /= p;
      ++e;
    }
    if (t != 1) throw NotPrime("q = " + std::to_string(q) + " is not a prime power");
    return {p, e};
  }
  return {q, 1};  // q itself is prime
}

}  // namespace rankgeo
