#include <random>

#include "doctest.h"
#include "liebracket/bracket.hpp"
#include "liebracket/errors.hpp"
#include "liebracket/linalg.hpp"
#include "test_support.hpp"

using namespace liebracket;
using liebracket::testing::random_matrix;
using liebracket::testing::random_rational_matrix;

namespace {

Matrix E(std::size_t n, std::size_t m, std::size_t i, std::size_t j) {
  return Matrix::unit(n, m, i, j);
}

Scalar delta(std::size_t a, std::size_t b) { return a == b ? 1 : 0; }

}  // namespace

TEST_CASE("bracket examples") {
  // Realization of the 3-dim Heisenberg algebra inside gl(2,1).
  BracketParam gl21(Matrix{{1, 0}, {0, 0}});
  CHECK(bracket(E(2, 2, 2, 1), E(2, 2, 1, 2), gl21) == E(2, 2, 2, 2));

  BracketParam lower(Matrix{{0, 0}, {0, 1}});
  Matrix h{{1, 0}, {0, -1}};
  CHECK(bracket(h, E(2, 2, 1, 2), lower) == E(2, 2, 1, 2));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a = random_rational_matrix(rng, 3, 2);
    BracketParam p(3, 2, random_matrix(rng, 2, 3));
    CHECK(bracket(a, a, p).is_zero());
    Matrix b = random_rational_matrix(rng, 3, 2);
    CHECK(bracket(a, b, BracketParam(3, 2, Matrix(2, 3))).is_zero());
  }
}

TEST_CASE("bracket shape errors") {
  CHECK_THROWS_AS(BracketParam(2, 3, Matrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(BracketParam(Matrix(2, 3)), DimensionError);
  BracketParam p(2, 3, Matrix(3, 2));
  CHECK_THROWS_AS(bracket(Matrix(2, 2), Matrix(2, 3), p), DimensionError);
}

TEST_CASE("bracket is linear in the parameter and antisymmetric") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<std::size_t> ext(1, 4);
    const std::size_t n = ext(rng), m = ext(rng);
    Matrix a = random_rational_matrix(rng, n, m);
    Matrix b = random_rational_matrix(rng, n, m);
    Matrix j1 = random_rational_matrix(rng, m, n);
    Matrix j2 = random_rational_matrix(rng, m, n);
    Scalar alpha = Scalar(std::uniform_int_distribution<int>(-4, 4)(rng)) / Scalar(3);
    CHECK(bracket(a, b, BracketParam(n, m, j1 + alpha * j2)) ==
          bracket(a, b, BracketParam(n, m, j1)) +
              alpha * bracket(a, b, BracketParam(n, m, j2)));
    CHECK(bracket(a, b, BracketParam(n, m, j1)) ==
          -bracket(b, a, BracketParam(n, m, j1)));
  }
}

TEST_CASE("full-rank square parameter transports to the commutator") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 4;
    Matrix j = random_matrix(rng, n, n);
    if (rank(j) != n) continue;
    Matrix a = random_rational_matrix(rng, n, n);
    Matrix b = random_rational_matrix(rng, n, n);
    Matrix ja = j * a, jb = j * b;
    CHECK(j * bracket(a, b, BracketParam(j)) == ja * jb - jb * ja);
  }
}

TEST_CASE("block_bracket examples") {
  for (std::size_t r = 0; r <= 3; ++r) {
    auto zero = BlockMatrix::split(Matrix(3, 3), r);
    auto c = block_bracket(zero, zero);
    CHECK(c.assemble().is_zero());
  }
  // Only the bottom-right blocks are nonzero: they never enter.
  std::mt19937_64 rng(10);
  Matrix a(4, 3), b(4, 3);
  a.set_block(2, 2, random_rational_matrix(rng, 2, 1));
  b.set_block(2, 2, random_rational_matrix(rng, 2, 1));
  CHECK(block_bracket(BlockMatrix::split(a, 2), BlockMatrix::split(b, 2))
            .assemble()
            .is_zero());

  Matrix x = random_rational_matrix(rng, 3, 3);
  Matrix y = random_rational_matrix(rng, 3, 3);
  CHECK(block_bracket(BlockMatrix::split(x, 1), BlockMatrix::split(y, 1)).assemble() ==
        bracket(x, y, BracketParam::normal(3, 3, 1)));
}

TEST_CASE("block_bracket rejects inconsistent blocks") {
  auto a = BlockMatrix::split(Matrix(3, 3), 1);
  auto b = BlockMatrix::split(Matrix(3, 3), 2);
  CHECK_THROWS_AS(block_bracket(a, b), DimensionError);
  a.top_left = Matrix(2, 2);
  CHECK_THROWS_AS(block_bracket(a, a), DimensionError);
  auto c = BlockMatrix::split(Matrix(3, 3), 1);
  c.bottom_right.reset();
  CHECK_THROWS_AS(block_bracket(c, c), DimensionError);
}

TEST_CASE("block_bracket equals the bracket on all basis pairs") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 1; m <= 4; ++m)
      for (std::size_t r = 0; r <= std::min(n, m); ++r) {
        BracketParam p = BracketParam::normal(n, m, r);
        for (std::size_t a = 0; a < n * m; ++a)
          for (std::size_t b = 0; b < n * m; ++b) {
            auto ia = BasisIndex::from_linear(a, m);
            auto ib = BasisIndex::from_linear(b, m);
            Matrix ea = E(n, m, ia.row, ia.col), eb = E(n, m, ib.row, ib.col);
            CHECK(block_bracket(BlockMatrix::split(ea, r), BlockMatrix::split(eb, r))
                      .assemble() == bracket(ea, eb, p));
          }
      }
}

TEST_CASE("basis index linearization is a bijection") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 1; m <= 4; ++m) {
      std::vector<bool> seen(n * m, false);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= m; ++j) {
          const std::size_t k = BasisIndex{i, j}.linear(m);
          REQUIRE(k < n * m);
          CHECK_FALSE(seen[k]);
          seen[k] = true;
          auto back = BasisIndex::from_linear(k, m);
          CHECK(back.row == i);
          CHECK(back.col == j);
        }
    }
}

TEST_CASE("structure constants of gl(2)") {
  auto sc = structure_constants(BracketParam(Matrix::identity(2)));
  CHECK(sc.dim() == 4);
  // [E_ij, E_kl] = delta_jk E_il - delta_li E_kj
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t j = 1; j <= 2; ++j)
      for (std::size_t k = 1; k <= 2; ++k)
        for (std::size_t l = 1; l <= 2; ++l) {
          Matrix expected = delta(j, k) * E(2, 2, i, l) - delta(l, i) * E(2, 2, k, j);
          Vector got = to_dense(
              sc.get(BasisIndex{i, j}.linear(2), BasisIndex{k, l}.linear(2)), 4);
          CHECK(Matrix::from_flat(2, 2, got) == expected);
        }
}

TEST_CASE("structure constants special cases") {
  CHECK(structure_constants(BracketParam(3, 2, Matrix(2, 3))).is_abelian());

  auto sc = structure_constants(BracketParam(2, 1, Matrix{{1, 0}}));
  // [e_2, e_1] = e_2
  CHECK(sc.get(1, 0) == SparseVector{{1, Scalar(1)}});
  CHECK(sc.get(0, 1) == SparseVector{{1, Scalar(-1)}});
  for (const auto& [key, terms] : sc.table()) CHECK(key.first < key.second);
}

TEST_CASE("structure constants reproduce the bracket") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<std::size_t> ext(1, 4);
    const std::size_t n = ext(rng), m = ext(rng);
    BracketParam p(n, m, random_matrix(rng, m, n));
    auto sc = structure_constants(p);
    for (std::size_t a = 0; a < n * m; ++a)
      for (std::size_t b = 0; b < n * m; ++b) {
        auto ia = BasisIndex::from_linear(a, m), ib = BasisIndex::from_linear(b, m);
        Matrix direct = bracket(E(n, m, ia.row, ia.col), E(n, m, ib.row, ib.col), p);
        CHECK(Matrix::from_flat(n, m, to_dense(sc.get(a, b), n * m)) == direct);
      }
    // Bilinear extension matches the matrix bracket.
    Matrix x = random_rational_matrix(rng, n, m), y = random_rational_matrix(rng, n, m);
    CHECK(Matrix::from_flat(n, m, sc.bracket(x.flatten(), y.flatten())) ==
          bracket(x, y, p));
  }
}

TEST_CASE("structure constant storage") {
  StructureConstants sc(3);
  sc.set(2, 0, {{1, Scalar(5)}, {2, Scalar(0)}});
  CHECK(sc.table().size() == 1);
  CHECK(sc.get(0, 2) == SparseVector{{1, Scalar(-5)}});
  CHECK(sc.get(2, 0) == SparseVector{{1, Scalar(5)}});
  CHECK(sc.get(1, 1).empty());
  sc.set(0, 2, {});
  CHECK(sc.is_abelian());
  CHECK_THROWS(sc.set(1, 1, {{0, Scalar(1)}}));
  CHECK_THROWS_AS(sc.set(0, 3, {}), DimensionError);
}
