#pragma once

// Independent polynomial-basis model of F_p[x]/(f) used to cross-check the
// Zech-table arithmetic. Elements are coefficient vectors; all operations are
// naive schoolbook so the only shared input with the library is the modulus.

#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

struct PolyField {
  std::int64_t p;
  std::vector<std::int64_t> mod;  // ascending, monic
  using Elem = std::vector<std::int64_t>;

  std::size_t deg() const { return mod.size() - 1; }

  Elem zero() const { return Elem(deg(), 0); }
  Elem one() const {
    Elem e(deg(), 0);
    e[0] = 1;
    return e;
  }
  Elem x() const {
    Elem e(deg(), 0);
    if (deg() > 1)
      e[1] = 1;
    else
      e = reduce_linear();
    return e;
  }

  // For degree-1 moduli x + c the class of x is -c.
  Elem reduce_linear() const {
    Elem e(1, ((-mod[0]) % p + p) % p);
    return e;
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r(deg(), 0);
    for (std::size_t i = 0; i < deg(); ++i) r[i] = (a[i] + b[i]) % p;
    return r;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    std::vector<std::int64_t> prod(2 * deg(), 0);
    for (std::size_t i = 0; i < deg(); ++i)
      for (std::size_t j = 0; j < deg(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (std::size_t i = prod.size(); i-- > deg();) {
      const std::int64_t c = prod[i];
      if (c == 0) continue;
      prod[i] = 0;
      for (std::size_t j = 0; j < deg(); ++j)
        prod[i - deg() + j] = ((prod[i - deg() + j] - c * mod[j]) % p + p) % p;
    }
    prod.resize(deg());
    return prod;
  }

  bool is_zero(const Elem& a) const {
    for (auto c : a)
      if (c != 0) return false;
    return true;
  }

  // powers[i] = x^i; exactly order entries, all distinct for a primitive
  // modulus, with x^order == 1.
  std::vector<Elem> generator_powers(std::int64_t order) const {
    std::vector<Elem> powers;
    powers.reserve(static_cast<std::size_t>(order));
    Elem cur = one();
    const Elem g = x();
    for (std::int64_t i = 0; i < order; ++i) {
      powers.push_back(cur);
      cur = mul(cur, g);
    }
    return powers;
  }
};

}  // namespace oracle
