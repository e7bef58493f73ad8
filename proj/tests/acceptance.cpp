// Acceptance suite: runs every structural claim the library is built around
// at desk scale and prints one PASS/FAIL line per criterion. Exits nonzero if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "poly_oracle.hpp"
#include "rankgeo/serialization.hpp"
#include "rankgeo/wiretap.hpp"

using namespace rankgeo;

namespace {

struct Criterion {
  int id;
  std::string name;
  std::function<bool(std::string&)> run;
};

std::string join_weights(const std::vector<std::size_t>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

// ---------------------------------------------------------------------------
// 1. the three definitions of the generalized weights agree on the corpus

bool criterion_cross_definition(std::string& detail) {
  const auto corpus = corpus::build_corpus();
  std::size_t checked = 0;
  for (const auto& entry : corpus) {
    for (std::size_t r = 1; r <= entry.code.k(); ++r) {
      const std::size_t geo = grw_geometric(entry.code, r);
      const std::size_t sub = grw_subcode(entry.code, r);
      const std::size_t par = grw_parity(entry.code, r);
      if (geo != sub || sub != par) {
        detail = entry.name + " r=" + std::to_string(r) + ": geometric=" + std::to_string(geo) +
                 " subcode=" + std::to_string(sub) + " parity=" + std::to_string(par);
        return false;
      }
      ++checked;
    }
  }
  detail = std::to_string(corpus.size()) + " codes, " + std::to_string(checked) + " weights";
  return true;
}

// ---------------------------------------------------------------------------
// 2. the constant-weight family: parameters, hierarchy, distribution, bound

bool criterion_h1(std::string& detail) {
  const std::vector<std::tuple<int, int, int>> params = {
      {2, 2, 2}, {2, 2, 3}, {2, 3, 2}, {3, 2, 2}};
  for (auto [q, m, k] : params) {
    const auto code = hadamard_h1(q, m, k);
    const std::string tag =
        "h1(" + std::to_string(q) + "," + std::to_string(m) + "," + std::to_string(k) + ")";
    if (code.n() != static_cast<std::size_t>(m * k) || code.k() != static_cast<std::size_t>(k)) {
      detail = tag + ": wrong parameters";
      return false;
    }
    const std::size_t d = min_rank_distance(code);
    if (d != static_cast<std::size_t>(m)) {
      detail = tag + ": d=" + std::to_string(d) + " expected " + std::to_string(m);
      return false;
    }
    for (auto method : {GrwMethod::Geometric, GrwMethod::Subcode, GrwMethod::Parity}) {
      const auto h = hierarchy(code, method);
      for (std::size_t r = 1; r <= code.k(); ++r)
        if (h.weights[r - 1] != static_cast<std::size_t>(m) * r) {
          detail = tag + ": hierarchy " + join_weights(h.weights) + " is not (mr)_r";
          return false;
        }
    }
    const auto dist = rank_weight_distribution(code);
    std::uint64_t qmk = 1;
    for (int i = 0; i < m * k; ++i) qmk *= static_cast<std::uint64_t>(q);
    if (dist.size() != 2 || dist.at(0) != 1 ||
        dist.at(static_cast<std::size_t>(m)) != qmk - 1) {
      detail = tag + ": distribution is not {0:1, m:q^{mk}-1}";
      return false;
    }
    if (code.k() != (code.n() / static_cast<std::size_t>(m)) *
                        (static_cast<std::size_t>(m) - d + 1)) {
      detail = tag + ": k = (n/m)(m-d+1) fails";
      return false;
    }
  }
  detail = std::to_string(params.size()) + " parameter sets";
  return true;
}

// ---------------------------------------------------------------------------
// 3. the dual family: parameters and the closed-form hierarchy

bool criterion_h2(std::string& detail) {
  const std::vector<std::tuple<int, int, int>> params = {
      {2, 2, 2}, {2, 2, 3}, {2, 3, 2}, {3, 2, 2}};
  for (auto [q, m, k] : params) {
    const auto code = hadamard_h2(q, m, k);
    const std::string tag =
        "h2(" + std::to_string(q) + "," + std::to_string(m) + "," + std::to_string(k) + ")";
    if (code.n() != static_cast<std::size_t>(m * k) ||
        code.k() != static_cast<std::size_t>((m - 1) * k)) {
      detail = tag + ": wrong parameters";
      return false;
    }
    if (min_rank_distance(code) != 2) {
      detail = tag + ": minimum distance is not 2";
      return false;
    }
    const auto expected = hadamard_h2_expected_hierarchy(m, k);
    for (auto method : {GrwMethod::Geometric, GrwMethod::Subcode, GrwMethod::Parity}) {
      const auto h = hierarchy(code, method);
      if (h.weights != expected) {
        detail = tag + " [" + grw_method_name(method) + "]: " + join_weights(h.weights) +
                 " expected " + join_weights(expected);
        return false;
      }
    }
  }
  detail = std::to_string(params.size()) + " parameter sets, all three methods";
  return true;
}

// ---------------------------------------------------------------------------
// 4. monotonicity, generalized Singleton and the duality partition

bool criterion_structure(std::string& detail) {
  const auto corpus = corpus::build_corpus();
  for (const auto& entry : corpus) {
    const auto h = hierarchy(entry.code, GrwMethod::Subcode);
    const std::size_t n = entry.code.n(), k = entry.code.k();
    for (std::size_t r = 1; r <= k; ++r) {
      if (h.weights[r - 1] > n - k + r) {
        detail = entry.name + ": Singleton fails at r=" + std::to_string(r);
        return false;
      }
      if (r >= 2 && h.weights[r - 1] <= h.weights[r - 2]) {
        detail = entry.name + ": weights not strictly increasing";
        return false;
      }
    }
    if (h.weights.back() != n) {
      detail = entry.name + ": d_k != n";
      return false;
    }
    if (!verify_duality(entry.code).ok) {
      detail = entry.name + ": duality partition fails";
      return false;
    }
  }
  detail = std::to_string(corpus.size()) + " codes";
  return true;
}

// ---------------------------------------------------------------------------
// 5. wiretap: profile identity, the weight sandwich, leaked relations

bool criterion_wiretap(std::string& detail) {
  const auto corpus = corpus::build_corpus();
  std::size_t covered = 0, relations = 0;
  for (const auto& entry : corpus) {
    if (entry.code.n() > 5) continue;
    ++covered;
    const auto rep = verify_sandwich(entry.code);
    if (!rep.identity_ok) {
      detail = entry.name + ": delta_u + Delta_u != n-k";
      return false;
    }
    if (!rep.all_hold) {
      detail = entry.name + ": sandwich fails";
      return false;
    }
    for (std::size_t u = 1; u < rep.profile.delta.size(); ++u)
      if (rep.profile.delta[u] < rep.profile.delta[u - 1]) {
        detail = entry.name + ": delta_u decreased at u=" + std::to_string(u);
        return false;
      }
    relations += check_leakage_relations(entry.code, 0xACCE5511);
  }
  detail = std::to_string(covered) + " codes with n <= 5, " + std::to_string(relations) +
           " leaked relations verified";
  return covered > 0;
}

// ---------------------------------------------------------------------------
// 6. exhaustive constant-weight classification over F_4^n, n in {2,3,4}

bool criterion_classification(std::string& detail) {
  auto tower = make_tower(2, 1, 2);
  std::size_t total = 0, constant_found = 0;
  for (std::size_t n : {2u, 3u, 4u}) {
    auto en = enumerate_subspaces(tower, Scalars::Fqm, n, 2);
    while (auto gen = en.next()) {
      ++total;
      const auto code = make_code(tower, *gen);
      const auto dist = rank_weight_distribution(code);
      const bool constant = dist.size() == 2;  // zero weight plus one value
      const bool nondeg = is_nondegenerate(code);
      if (constant && nondeg) {
        if (n != 4) {
          detail = "constant-weight non-degenerate code at n=" + std::to_string(n);
          return false;
        }
        ++constant_found;
        const auto res = classify_constant_weight(code);
        if (res.verdict != ClassificationResult::Verdict::ConstantWeight ||
            res.structure != ClassificationResult::Structure::HadamardEquivalent ||
            !res.basis_certificate || res.hierarchy_weights != std::vector<std::size_t>{2, 4}) {
          detail = "certificate fails at n=4";
          return false;
        }
      }
    }
  }
  if (constant_found == 0) {
    detail = "no constant-weight codes found at n=4";
    return false;
  }

  // every k=1 code is constant weight
  std::size_t single = 0;
  for (std::size_t n : {2u, 3u, 4u}) {
    auto en = enumerate_subspaces(tower, Scalars::Fqm, n, 1);
    while (auto gen = en.next()) {
      ++single;
      const auto res = classify_constant_weight(make_code(tower, *gen));
      if (res.verdict != ClassificationResult::Verdict::ConstantWeight) {
        detail = "a k=1 code is not constant weight";
        return false;
      }
    }
  }
  detail = std::to_string(total) + " two-dimensional codes audited, " +
           std::to_string(constant_found) + " constant-weight at n=4, " +
           std::to_string(single) + " one-dimensional codes";
  return true;
}

// ---------------------------------------------------------------------------
// 7. the uniform-intersection counting identity on full ambient spaces

bool criterion_counting_identity(std::string& detail) {
  const std::vector<std::tuple<int, int, int>> params = {{2, 2, 2}, {2, 2, 3}, {3, 2, 2}};
  for (auto [q, m, k] : params) {
    const auto x = qsystem_from_code(hadamard_h1(q, m, k));
    const auto rep = check_counting_identity(x, static_cast<std::size_t>(k - 1));
    const std::string tag =
        "(" + std::to_string(q) + "," + std::to_string(m) + "," + std::to_string(k) + ")";
    if (!rep.uniform) {
      detail = tag + ": intersections are not uniform";
      return false;
    }
    if (rep.common_dim != static_cast<std::size_t>(m * (k - 1))) {
      detail = tag + ": l != m(k-1)";
      return false;
    }
    if (!rep.identity_holds) {
      detail = tag + ": identity fails (" + std::to_string(rep.lhs) +
               " != " + std::to_string(rep.rhs) + ")";
      return false;
    }
  }
  detail = std::to_string(params.size()) + " ambient spaces";
  return true;
}

// ---------------------------------------------------------------------------
// 8. oracles: invertible-transform distance, polynomial field model,
//    subspace counting formula

std::size_t hamming_min_distance_transformed(const RankMetricCode& code, const Matrix& transform) {
  std::size_t best = SIZE_MAX;
  for_each_projective_codeword(code, [&](const Codeword& w) {
    const auto moved = w.coords * transform;
    best = std::min(best, hamming_weight(Codeword{w.tower, moved}));
  });
  return best;
}

bool criterion_oracles(std::string& detail) {
  // rank distance as the least Hamming distance over invertible F_q transforms
  const auto corpus = corpus::build_corpus();
  std::size_t gl_checked = 0;
  for (const auto& entry : corpus) {
    const auto& code = entry.code;
    if (code.tower()->q() != 2 || code.n() > 3) continue;
    ++gl_checked;
    const std::size_t n = code.n();
    std::size_t best = SIZE_MAX;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (n * n)); ++mask) {
      Matrix m(code.tower(), n, n, Scalars::Fq);
      for (std::size_t bit = 0; bit < n * n; ++bit)
        if (mask >> bit & 1) m.set(bit / n, bit % n, code.tower()->one());
      if (rank(m) != n) continue;
      best = std::min(best, hamming_min_distance_transformed(code, m));
    }
    if (best != min_rank_distance(code)) {
      detail = entry.name + ": transform oracle " + std::to_string(best) +
               " != " + std::to_string(min_rank_distance(code));
      return false;
    }
  }
  if (gl_checked == 0) {
    detail = "no corpus codes with q=2, n<=3";
    return false;
  }

  // Zech arithmetic against the polynomial model, exhaustively up to 2^8
  const std::vector<std::tuple<int, int, int>> towers = {
      {2, 1, 2}, {2, 1, 3}, {2, 1, 4}, {2, 1, 6}, {2, 1, 8},
      {2, 2, 2}, {3, 1, 2}, {3, 1, 4}, {3, 2, 2}, {5, 1, 2}};
  for (auto [p, e, m] : towers) {
    const auto t = make_tower(p, e, m);
    oracle::PolyField f;
    f.p = t->p();
    f.mod.assign(t->modulus().begin(), t->modulus().end());
    const auto powers = f.generator_powers(t->order());
    std::map<std::vector<std::int64_t>, std::int64_t> log_of;
    for (std::int64_t i = 0; i < t->order(); ++i) log_of[powers[static_cast<std::size_t>(i)]] = i;
    if (log_of.size() != static_cast<std::size_t>(t->order())) {
      detail = "modulus is not primitive in the polynomial model";
      return false;
    }
    auto to_poly = [&](FieldElement a) {
      return a.is_zero() ? f.zero() : powers[static_cast<std::size_t>(a.log())];
    };
    auto from_poly = [&](const oracle::PolyField::Elem& v) {
      return f.is_zero(v) ? FieldElement::zero()
                          : FieldElement::from_log(static_cast<std::int32_t>(log_of.at(v)));
    };
    for (std::int64_t i = -1; i < t->order(); ++i)
      for (std::int64_t j = -1; j < t->order(); ++j) {
        const FieldElement a =
            i < 0 ? FieldElement::zero() : FieldElement::from_log(static_cast<std::int32_t>(i));
        const FieldElement b =
            j < 0 ? FieldElement::zero() : FieldElement::from_log(static_cast<std::int32_t>(j));
        if (t->add(a, b) != from_poly(f.add(to_poly(a), to_poly(b))) ||
            t->mul(a, b) != from_poly(f.mul(to_poly(a), to_poly(b)))) {
          detail = "arithmetic mismatch in tower (" + std::to_string(p) + "," +
                   std::to_string(e) + "," + std::to_string(m) + ")";
          return false;
        }
      }
  }

  // subspace counting formula against the streamed enumeration
  for (std::uint64_t s : {2, 3, 4}) {
    const auto t = s == 2   ? make_tower(2, 1, 2)
                   : s == 3 ? make_tower(3, 1, 2)
                            : make_tower(2, 2, 2);  // subfield size 4
    for (std::size_t n = 0; n <= 6; ++n)
      for (std::size_t r = 0; r <= n; ++r) {
        auto en = enumerate_subspaces(t, Scalars::Fq, n, r);
        std::uint64_t count = 0;
        while (en.next()) ++count;
        if (count != gaussian_binomial(n, r, s)) {
          detail = "count mismatch at [" + std::to_string(n) + " " + std::to_string(r) + "]_" +
                   std::to_string(s);
          return false;
        }
      }
  }

  detail = std::to_string(gl_checked) + " transform-oracle codes, " +
           std::to_string(towers.size()) + " towers, counts up to n=6, s=4";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "cross-definition equality (geometric = subcode = parity)", criterion_cross_definition},
      {2, "constant-weight family parameters and hierarchy", criterion_h1},
      {3, "dual family parameters and hierarchy formula", criterion_h2},
      {4, "monotonicity, Singleton bound, duality partition", criterion_structure},
      {5, "wiretap profile identity, sandwich, leaked relations", criterion_wiretap},
      {6, "exhaustive constant-weight classification audit", criterion_classification},
      {7, "uniform-intersection counting identity", criterion_counting_identity},
      {8, "oracles: transforms, polynomial model, subspace counts", criterion_oracles},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%d] %-58s %s (%6.2fs)  %s\n", c.id, c.name.c_str(), ok ? "PASS" : "FAIL", secs,
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures > 0) std::printf("%d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
