#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankgeo/wiretap.hpp"

using namespace rankgeo;

namespace {

Matrix basis_columns_generator(const TowerPtr& t) {
  const auto g = t->gen();
  const auto z = FieldElement::zero();
  return Matrix::from_rows(t, {{t->one(), g, z, z}, {z, z, t->one(), g}});
}

}  // namespace

TEST_CASE("coset encoding and syndromes") {
  auto t = make_tower(2, 1, 2);
  auto code = make_code(t, basis_columns_generator(t));

  SUBCASE("every secret is reproduced by the syndrome") {
    Rng rng(1);
    for (std::uint64_t a = 0; a < t->size(); ++a)
      for (std::uint64_t b = 0; b < t->size(); ++b) {
        const std::vector<FieldElement> s{t->nth_value(Scalars::Fqm, a),
                                          t->nth_value(Scalars::Fqm, b)};
        const Codeword x = coset_encode(code, s, rng);
        CHECK(syndrome(code, x) == s);
      }
  }
  SUBCASE("zero secret gives a codeword") {
    Rng rng(2);
    const std::vector<FieldElement> zero_secret(2, FieldElement::zero());
    const Codeword x = coset_encode(code, zero_secret, rng);
    // x lies in the code: its syndrome vanishes
    for (auto v : syndrome(code, x)) CHECK(v.is_zero());
  }
  SUBCASE("transmission is deterministic given the seed") {
    const std::vector<FieldElement> s{t->one(), t->gen()};
    CHECK(transmit(code, s, 99).transmitted == transmit(code, s, 99).transmitted);
  }
  SUBCASE("observing all n edges pins the word down") {
    Rng rng(3);
    const std::vector<FieldElement> s{t->one(), t->gen()};
    const Codeword x = coset_encode(code, s, rng);
    CHECK(eavesdrop(x, Matrix::identity(t, 4, Scalars::Fq)) == x.coords);
  }
  SUBCASE("bad inputs") {
    Rng rng(4);
    CHECK_THROWS_AS(coset_encode(code, {t->one()}, rng), DimensionOutOfRange);
    Matrix deficient(t, 2, 4, Scalars::Fq);
    deficient.set(0, 0, t->one());
    deficient.set(1, 0, t->one());
    const Codeword x = coset_encode(code, {t->one(), t->one()}, rng);
    CHECK_THROWS_AS(eavesdrop(x, deficient), RankDeficientB);
  }
}

TEST_CASE("leakage dimension") {
  auto t = make_tower(2, 1, 2);
  auto code = make_code(t, basis_columns_generator(t));

  SUBCASE("no observation leaks nothing") {
    CHECK(leakage_dim(code, Matrix(t, 0, 4, Scalars::Fq)) == 0);
  }
  SUBCASE("full observation leaks the whole redundancy") {
    CHECK(leakage_dim(code, Matrix::identity(t, 4, Scalars::Fq)) == 2);
  }
  SUBCASE("single-edge observations leak at most one dimension") {
    Matrix b(t, 1, 4, Scalars::Fq);
    b.set(0, 0, t->one());
    const std::size_t leak = leakage_dim(code, b);
    CHECK(leak <= 1);
  }
  SUBCASE("entries outside F_q are rejected") {
    Matrix b(t, 1, 4);
    b.set(0, 0, t->gen());
    CHECK_THROWS_AS(leakage_dim(code, b), RankDeficientB);
  }
}

TEST_CASE("leakage profile") {
  auto t = make_tower(2, 1, 2);
  auto code = make_code(t, basis_columns_generator(t));
  const auto prof = profile(code);

  CHECK(prof.delta.size() == 5);
  CHECK(prof.delta[0] == 0);
  CHECK(prof.delta[4] == 2);
  for (std::size_t u = 0; u <= 4; ++u) CHECK(prof.delta[u] + prof.Delta[u] == 2);
  for (std::size_t u = 1; u <= 4; ++u) CHECK(prof.delta[u] >= prof.delta[u - 1]);

  SUBCASE("canonical representatives cover all full-rank observation matrices") {
    // brute force over every u x n matrix over F_2 of full rank; the leakage
    // depends only on the row space, so the maxima must match the profile
    for (std::size_t u = 1; u <= 2; ++u) {
      std::size_t best = 0;
      const std::size_t bits = u * 4;
      for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << bits); ++mask) {
        Matrix b(t, u, 4, Scalars::Fq);
        for (std::size_t i = 0; i < bits; ++i)
          if (mask >> i & 1) b.set(i / 4, i % 4, t->one());
        if (rank(b) != u) continue;
        best = std::max(best, leakage_dim(code, b));
      }
      CHECK(best == prof.delta[u]);
    }
  }
  SUBCASE("parallel profile agrees") {
    Limits par;
    par.jobs = 3;
    const auto prof2 = profile(code, par);
    CHECK(prof2.delta == prof.delta);
    CHECK(prof2.Delta == prof.Delta);
  }
}

TEST_CASE("sandwich report") {
  auto t = make_tower(2, 1, 2);
  auto code = make_code(t, basis_columns_generator(t));
  const auto report = verify_sandwich(code);

  CHECK(report.all_hold);
  CHECK(report.identity_ok);
  REQUIRE(report.rows.size() == 5);
  // u = 0: Delta_0 = n - k, so the left index is k and the right side is the
  // flagged boundary convention d_{k+1} = infinity
  CHECK(report.rows[0].lhs_index == 2);
  CHECK(report.rows[0].rhs_vacuous);
  CHECK(report.rows[0].holds);
  // u = n: everything observed; the left side is the d_0 = 0 convention
  CHECK(report.rows[4].lhs_index == 0);
  CHECK(report.rows[4].lhs_vacuous);

  SUBCASE("holds for a [3,2] code over F_8 and for the full space") {
    auto t8 = make_tower(2, 1, 3);
    const auto g = t8->gen();
    const auto z = FieldElement::zero();
    auto c = make_code(t8, Matrix::from_rows(t8, {{t8->one(), z, g}, {z, t8->one(), t8->pow(g, 2)}}));
    CHECK(verify_sandwich(c).all_hold);
    auto full = make_code(t, Matrix::identity(t, 2));
    const auto rep = verify_sandwich(full);
    CHECK(rep.all_hold);
    CHECK(rep.identity_ok);
  }
}

TEST_CASE("sampled transmissions satisfy the leaked relations") {
  auto t = make_tower(2, 1, 2);
  auto code = make_code(t, basis_columns_generator(t));
  const std::size_t checked = check_leakage_relations(code, 12345, 25);
  CHECK(checked > 0);  // full observations alone guarantee intersections

  auto t8 = make_tower(2, 1, 3);
  const auto g = t8->gen();
  const auto z = FieldElement::zero();
  auto c = make_code(t8, Matrix::from_rows(t8, {{t8->one(), z, g}, {z, t8->one(), t8->pow(g, 2)}}));
  CHECK(check_leakage_relations(c, 6789, 25) > 0);
}
