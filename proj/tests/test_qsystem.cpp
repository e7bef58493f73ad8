#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankgeo/qsystem.hpp"
#include "rankgeo/rng.hpp"

using namespace rankgeo;

namespace {

Matrix basis_columns_generator(const TowerPtr& t) {
  const auto g = t->gen();
  const auto z = FieldElement::zero();
  return Matrix::from_rows(t, {{t->one(), g, z, z}, {z, z, t->one(), g}});
}

RankMetricCode random_code(const TowerPtr& t, std::size_t n, std::size_t k, Rng& rng,
                           bool require_nondegenerate) {
  while (true) {
    Matrix gen(t, k, n);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n; ++c)
        gen.set(r, c, t->nth_value(Scalars::Fqm, rng.below(t->size())));
    if (rank(gen) != k) continue;
    auto code = make_code(t, gen);
    if (require_nondegenerate && !is_nondegenerate(code)) continue;
    return code;
  }
}

}  // namespace

TEST_CASE("code <-> q-system correspondence") {
  auto t = make_tower(2, 1, 2);

  SUBCASE("the basis-columns [4,2] code maps to the full ambient space") {
    auto code = make_code(t, basis_columns_generator(t));
    auto x = qsystem_from_code(code);
    CHECK(x.n() == 4);
    CHECK(x.k() == 2);
    // X = F_4^2: all 16 vectors appear
    CHECK(x.elements().size() == 16);
  }
  SUBCASE("k=1 code spanned by (1, g) gives X = F_4 inside F_4^1") {
    auto code = make_code(t, Matrix::from_rows(t, {{t->one(), t->gen()}}));
    auto x = qsystem_from_code(code);
    CHECK(x.k() == 1);
    CHECK(x.n() == 2);
    CHECK(x.elements().size() == 4);
  }
  SUBCASE("round-trip is the identity on canonical forms") {
    Rng rng(5);
    for (int it = 0; it < 15; ++it) {
      // non-degeneracy needs n <= mk, so pick k = 2 with n in {3, 4}
      auto code = random_code(t, 3 + rng.below(2), 2, rng, true);
      CHECK(code_from_qsystem(qsystem_from_code(code)) == code);
    }
  }
  SUBCASE("degenerate codes are rejected") {
    auto code = make_code(t, Matrix::from_rows(t, {{t->one(), t->one()}}));
    CHECK_THROWS_AS(qsystem_from_code(code), DegenerateCode);
  }
  SUBCASE("parameters [n,k,d] are preserved both ways") {
    Rng rng(7);
    for (int it = 0; it < 10; ++it) {
      auto code = random_code(t, 3, 2, rng, true);
      auto x = qsystem_from_code(code);
      CHECK(x.n() == code.n());
      CHECK(x.k() == code.k());
      // minimum distance of the q-system (codim-1 definition) equals d^R
      CHECK(grw_geometric(x, 1) == min_rank_distance(code));
    }
  }
}

TEST_CASE("intersection dimensions") {
  auto t = make_tower(2, 1, 2);
  auto x = qsystem_from_code(make_code(t, basis_columns_generator(t)));  // X = F_4^2

  SUBCASE("every hyperplane meets the full space in m(k-1) = 2 dimensions") {
    auto en = enumerate_subspaces(t, Scalars::Fqm, 2, 1);
    while (auto h = en.next()) CHECK(intersection_dim(x, *h) == 2);
  }
  SUBCASE("full space and zero space") {
    CHECK(intersection_dim(x, Matrix::identity(t, 2)) == 4);
    CHECK(intersection_dim(x, Matrix(t, 0, 2)) == 0);
  }
  SUBCASE("brute-force and kernel routes agree") {
    auto t8 = make_tower(2, 1, 3);
    Rng rng(11);
    for (int it = 0; it < 20; ++it) {
      auto code = random_code(t8, 3, 2, rng, true);
      auto xs = qsystem_from_code(code);
      auto en = enumerate_subspaces(t8, Scalars::Fqm, 2, 1 + rng.below(2));
      while (auto sub = en.next())
        CHECK(intersection_dim_bruteforce(xs, *sub) == intersection_dim_kernel(xs, *sub));
    }
  }
}

TEST_CASE("geometric generalized weights") {
  auto t = make_tower(2, 1, 2);
  auto code = make_code(t, basis_columns_generator(t));

  SUBCASE("full-space q-system has weights m*r") {
    CHECK(grw_geometric(code, 1) == 2);
    CHECK(grw_geometric(code, 2) == 4);
  }
  SUBCASE("r = k forces weight n") {
    Rng rng(13);
    for (int it = 0; it < 8; ++it) {
      auto c = random_code(t, 3, 2, rng, true);
      CHECK(grw_geometric(c, 2) == c.n());
    }
  }
  SUBCASE("r = 1 equals the minimum rank distance") {
    auto t8 = make_tower(2, 1, 3);
    Rng rng(17);
    for (int it = 0; it < 8; ++it) {
      auto c = random_code(t8, 3, 2, rng, true);
      CHECK(grw_geometric(c, 1) == min_rank_distance(c));
    }
  }
  SUBCASE("index range is checked") {
    CHECK_THROWS_AS(grw_geometric(code, 0), DimensionOutOfRange);
    CHECK_THROWS_AS(grw_geometric(code, 3), DimensionOutOfRange);
  }
  SUBCASE("several workers agree with one") {
    Limits par;
    par.jobs = 3;
    CHECK(grw_geometric(code, 1, par) == 2);
  }
}

TEST_CASE("linear set points and weights") {
  auto t = make_tower(2, 1, 2);

  SUBCASE("X = F_4^2: all 5 points of the projective line, each of weight 2") {
    auto x = qsystem_from_code(make_code(t, basis_columns_generator(t)));
    auto points = linear_set_points(x);
    CHECK(points.size() == 5);  // (q^{mk}-1)/(q^m-1)
    for (const auto& p : points) CHECK(p.weight == 2);
    CHECK_FALSE(is_scattered(x));
  }
  SUBCASE("one-dimensional X has a single point of weight 1") {
    Matrix col(t, 1, 1);
    col.set(0, 0, t->one());
    auto x = make_qsystem(col);
    auto points = linear_set_points(x);
    REQUIRE(points.size() == 1);
    CHECK(points[0].weight == 1);
    CHECK(is_scattered(x));
  }
  SUBCASE("the standard-basis q-system in F_4^2 is scattered") {
    auto x = make_qsystem(Matrix::identity(t, 2));
    auto points = linear_set_points(x);
    CHECK(points.size() == 3);
    for (const auto& p : points) CHECK(p.weight == 1);
    CHECK(is_scattered(x));
    // scattered <=> the linear set has the maximum (q^n - 1)/(q - 1) points
    CHECK(points.size() == ((std::uint64_t(1) << x.n()) - 1) / (2 - 1));
  }
  SUBCASE("point weights account for every nonzero vector of X") {
    auto t8 = make_tower(2, 1, 3);
    Rng rng(19);
    for (int it = 0; it < 10; ++it) {
      auto code = random_code(t8, 3, 2, rng, true);
      auto x = qsystem_from_code(code);
      const std::uint64_t q = static_cast<std::uint64_t>(t8->q());
      std::uint64_t covered = 0;
      for (const auto& p : linear_set_points(x)) {
        std::uint64_t qw = 1;
        for (std::size_t i = 0; i < p.weight; ++i) qw *= q;
        covered += qw - 1;
      }
      std::uint64_t qn = 1;
      for (std::size_t i = 0; i < x.n(); ++i) qn *= q;
      CHECK(covered == qn - 1);
    }
  }
}

TEST_CASE("subspace weights line up with the geometric weights") {
  // n - d_{k-1} equals the largest point weight of the linear set
  auto t = make_tower(2, 1, 2);
  Rng rng(23);
  for (int it = 0; it < 10; ++it) {
    std::size_t n = 3 + rng.below(2);
    RankMetricCode code = [&] {
      while (true) {
        Matrix gen(t, 2, n);
        for (std::size_t r = 0; r < 2; ++r)
          for (std::size_t c = 0; c < n; ++c)
            gen.set(r, c, t->nth_value(Scalars::Fqm, rng.below(t->size())));
        if (rank(gen) != 2) continue;
        auto c = make_code(t, gen);
        if (is_nondegenerate(c)) return c;
      }
    }();
    auto x = qsystem_from_code(code);
    std::size_t max_weight = 0;
    for (const auto& p : linear_set_points(x)) max_weight = std::max(max_weight, p.weight);
    CHECK(x.n() - grw_geometric(x, x.k() - 1 == 0 ? 1 : x.k() - 1) == max_weight);
  }
}

TEST_CASE("generalized weights through subspace weights of the linear set") {
  // n - d_r equals the largest weight of a codimension-r subspace, for all r
  auto t8 = make_tower(2, 1, 3);
  Rng rng(29);
  for (int it = 0; it < 6; ++it) {
    auto code = random_code(t8, 3, 2, rng, true);
    auto x = qsystem_from_code(code);
    for (std::size_t r = 1; r <= x.k(); ++r) {
      std::size_t best = 0;
      auto en = enumerate_subspaces(t8, Scalars::Fqm, x.k(), x.k() - r);
      while (auto sub = en.next()) best = std::max(best, subspace_weight(x, *sub));
      CHECK(x.n() - grw_geometric(x, r) == best);
    }
  }
}

TEST_CASE("make_qsystem validation") {
  auto t = make_tower(2, 1, 2);
  const auto g = t->gen();
  // columns F_2-dependent
  CHECK_THROWS_AS(make_qsystem(Matrix::from_rows(t, {{t->one(), t->one()}})), DegenerateCode);
  // contained in a hyperplane: rank over F_4 is 1 < 2
  auto thin = Matrix::from_rows(t, {{t->one(), g}, {FieldElement::zero(), FieldElement::zero()}});
  CHECK_THROWS_AS(make_qsystem(thin), BadParameters);
}
