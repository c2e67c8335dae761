#include <random>

#include "doctest.h"
#include "liebracket/classify.hpp"
#include "liebracket/errors.hpp"
#include "test_support.hpp"

using namespace liebracket;
using liebracket::testing::random_matrix;

namespace {

bool witness_ok(const Matrix& j1, const Matrix& j2) {
  const std::size_t m = j1.rows(), n = j1.cols();
  auto w = iso_witness_factors(j1, j2);
  if (!(w.q * j2 * w.p == j1)) return false;
  auto h = hom_check(w.map, LieAlgebra::from_param(BracketParam(n, m, j1)),
                     LieAlgebra::from_param(BracketParam(n, m, j2)));
  return h.is_hom && h.bijective();
}

}  // namespace

TEST_CASE("equivalent") {
  Matrix a{{1, 0}, {0, 0}}, b{{0, 0}, {0, 1}};
  CHECK(equivalent(a, a));
  CHECK(equivalent(a, b));
  CHECK_FALSE(equivalent(Matrix::identity(2), a));
  CHECK_THROWS_AS(equivalent(Matrix(2, 3), Matrix(3, 2)), DimensionError);
}

TEST_CASE("equivalence is an equivalence relation") {
  std::mt19937_64 rng(30);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix a = random_matrix(rng, 3, 2, -1, 1);
    Matrix b = random_matrix(rng, 3, 2, -1, 1);
    Matrix c = random_matrix(rng, 3, 2, -1, 1);
    CHECK(equivalent(a, a));
    CHECK(equivalent(a, b) == equivalent(b, a));
    if (equivalent(a, b) && equivalent(b, c)) CHECK(equivalent(a, c));
  }
}

TEST_CASE("normal_form") {
  auto nf = normal_form(Matrix::rank_normal_form(3, 2, 1));
  CHECK(nf.r == 1);
  CHECK(nf.factorization.q == Matrix::identity(3));
  CHECK(nf.factorization.p == Matrix::identity(2));
  CHECK(normal_form(Matrix(2, 4)).r == 0);
  Matrix swap{{0, 1}, {1, 0}};
  auto sw = normal_form(swap);
  CHECK(sw.r == 2);
  CHECK(sw.factorization.q * Matrix::rank_normal_form(2, 2, 2) * sw.factorization.p ==
        swap);
}

TEST_CASE("iso_witness examples") {
  Matrix j = Matrix::rank_normal_form(3, 2, 1);
  auto same = iso_witness(j, j);
  CHECK(same.matrix() == Matrix::identity(6));

  Matrix a{{1, 0}, {0, 0}}, b{{0, 0}, {0, 1}};
  CHECK(witness_ok(a, b));
  CHECK(witness_ok(Matrix::identity(2) * Scalar(2), Matrix::identity(2)));

  try {
    (void)iso_witness(Matrix::identity(2), a);
    FAIL("expected classification error");
  } catch (const ClassificationError& e) {
    CHECK(e.rank1() == 2);
    CHECK(e.rank2() == 1);
  }
}

TEST_CASE("witnesses for random equal-rank parameters") {
  std::mt19937_64 rng(31);
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 1; m <= 4; ++m)
      for (std::size_t r = 0; r <= std::min(n, m); ++r) {
        Matrix j1 = random_parameter(m, n, r, rng);
        Matrix j2 = random_parameter(m, n, r, rng);
        CHECK(rank(j1) == r);
        CHECK(witness_ok(j1, j2));
      }
}

TEST_CASE("witness round trip is an automorphism") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix j1 = random_parameter(3, 2, 1 + trial % 2, rng);
    Matrix j2 = random_parameter(3, 2, rank(j1), rng);
    auto f = iso_witness(j1, j2);
    auto g = iso_witness(j2, j1);
    auto L1 = LieAlgebra::from_param(BracketParam(2, 3, j1));
    auto L2 = LieAlgebra::from_param(BracketParam(2, 3, j2));
    CHECK(hom_check(f, L1, L2).injective_hom());
    CHECK(hom_check(g, L2, L1).injective_hom());
    auto round = hom_check(g.after(f), L1, L1);
    CHECK(round.is_hom);
    CHECK(round.bijective());
  }
}

TEST_CASE("classify_rank_family") {
  auto sq = classify_rank_family(2, 2, 0);
  CHECK(sq.entries.size() == 3);
  CHECK(sq.within_theorem_scope);
  CHECK(sq.pairwise_distinct);
  CHECK(sq.pass());

  auto col = classify_rank_family(2, 1, 0);
  REQUIRE(col.entries.size() == 2);
  CHECK_FALSE(col.within_theorem_scope);
  CHECK(col.entries[0].signature.center_dim == 2);
  CHECK(col.entries[1].signature.center_dim == 0);
  CHECK(col.pairwise_distinct);

  auto one = classify_rank_family(1, 1, 0);
  REQUIRE(one.entries.size() == 2);
  CHECK_FALSE(one.within_theorem_scope);
  for (const auto& e : one.entries) {
    CHECK(e.signature.dim == 1);
    CHECK(e.signature.center_dim == 1);
  }
  CHECK_FALSE(one.pairwise_distinct);
  CHECK(one.pass());

  // Same seed, same samples.
  auto again = classify_rank_family(2, 2, 0);
  for (std::size_t r = 0; r < again.entries.size(); ++r)
    CHECK(again.entries[r].sample_a == sq.entries[r].sample_a);
}

TEST_CASE("random_parameter hits the requested rank") {
  std::mt19937_64 rng(33);
  for (std::size_t r = 0; r <= 3; ++r) CHECK(rank(random_parameter(4, 3, r, rng)) == r);
  CHECK_THROWS_AS(random_parameter(2, 3, 3, rng), HypothesisError);
}
