#include <random>

#include "doctest.h"
#include "liebracket/classify.hpp"
#include "liebracket/errors.hpp"
#include "liebracket/lie_algebra.hpp"
#include "test_support.hpp"

using namespace liebracket;
using liebracket::testing::random_matrix;
using liebracket::testing::random_rational_matrix;

namespace {

Matrix E(std::size_t n, std::size_t m, std::size_t i, std::size_t j) {
  return Matrix::unit(n, m, i, j);
}

// Basis (x, y, z) with [x, y] = z.
LieAlgebra heisenberg3() {
  StructureConstants sc(3);
  sc.set(0, 1, {{2, Scalar(1)}});
  return LieAlgebra(sc, {"X", "Y", "Z"});
}

// Basis (H, X, Y) with [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H.
StructureConstants sl2_constants() {
  StructureConstants sc(3);
  sc.set(0, 1, {{1, Scalar(2)}});
  sc.set(0, 2, {{2, Scalar(-2)}});
  sc.set(1, 2, {{0, Scalar(1)}});
  return sc;
}

std::vector<std::size_t> dims(const std::vector<Subspace>& series) {
  std::vector<std::size_t> out;
  for (const auto& s : series) out.push_back(s.dim());
  return out;
}

LieAlgebra gl_nr(std::size_t n, std::size_t r) {
  return LieAlgebra::from_param(BracketParam::normal(n, n, r));
}

}  // namespace

TEST_CASE("jacobi_check") {
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 5; ++trial) {
    auto L = LieAlgebra::from_param(BracketParam(random_matrix(rng, 3, 3)));
    CHECK(jacobi_check(L).pass());
  }
  CHECK(jacobi_check(LieAlgebra(StructureConstants(4))).pass());
  CHECK(jacobi_check(LieAlgebra(sl2_constants())).pass());

  auto tampered = sl2_constants();
  tampered.set(1, 2, {{0, Scalar(1)}, {1, Scalar(1)}});  // [X,Y] = H + X
  auto result = jacobi_check(LieAlgebra(tampered));
  REQUIRE_FALSE(result.pass());
  CHECK(result.violation->a == 0);
  CHECK(result.violation->b == 1);
  CHECK(result.violation->c == 2);
  // [H,[X,Y]] + [X,[Y,H]] + [Y,[H,X]] = 2X
  CHECK(result.violation->defect == Vector{0, 2, 0});
  CHECK_THROWS(LieAlgebra::verified(tampered));
  CHECK_NOTHROW(LieAlgebra::verified(sl2_constants()));
}

TEST_CASE("center examples") {
  auto z = center(LieAlgebra::general_linear(2));
  REQUIRE(z.dim() == 1);
  CHECK(z.basis()[0] == Matrix::identity(2));

  auto z21 = center(gl_nr(2, 1));
  REQUIRE(z21.dim() == 1);
  CHECK(z21.basis()[0] == E(2, 2, 2, 2));

  CHECK(center(LieAlgebra::from_param(BracketParam::normal(3, 2, 1))).dim() == 2);
  CHECK(center(LieAlgebra::from_param(BracketParam(3, 2, Matrix(2, 3)))).dim() == 6);
}

TEST_CASE("center dimension law") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 1; m <= 4; ++m)
      for (std::size_t r = 0; r <= std::min(n, m); ++r) {
        const std::size_t expected = (n == m && r == n) ? 1 : (n - r) * (m - r);
        CHECK(center(LieAlgebra::from_param(BracketParam::normal(n, m, r))).dim() ==
              expected);
      }
}

TEST_CASE("center transports through the equivalence witnesses") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<std::size_t> ext(1, 3);
    const std::size_t n = ext(rng), m = ext(rng);
    Matrix j = random_matrix(rng, m, n, -1, 1);
    const std::size_t r = rank(j);
    auto w = iso_witness_factors(j, Matrix::rank_normal_form(m, n, r));
    // j = Q J_r P  =>  Z_j = P^{-1} Z_{J_r} Q^{-1}
    Subspace zr = center(LieAlgebra::from_param(BracketParam::normal(n, m, r)));
    Matrix pinv = inverse(w.p), qinv = inverse(w.q);
    std::vector<Matrix> moved;
    for (const auto& b : zr.basis()) moved.push_back(pinv * b * qinv);
    Subspace expected = Subspace::span(n, m, moved);
    CHECK(center(LieAlgebra::from_param(BracketParam(n, m, j))).same_as(expected));
  }
}

TEST_CASE("centralizer") {
  auto gl = LieAlgebra::general_linear(3);
  CHECK(centralizer(gl, Subspace::whole(3, 3)).same_as(center(gl)));
  CHECK(centralizer(gl, Subspace(3, 3)).dim() == 9);

  // End(V1) inside gl(3, 2): centralizer is lambda*(I_2 + 0) plus the
  // bottom-right block.
  auto L = gl_nr(3, 2);
  std::vector<Matrix> end_v1;
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t j = 1; j <= 2; ++j) end_v1.push_back(E(3, 3, i, j));
  Subspace S = Subspace::from_basis(3, 3, end_v1);
  std::vector<Matrix> expected{E(3, 3, 1, 1) + E(3, 3, 2, 2), E(3, 3, 3, 3)};
  CHECK(centralizer(L, S).same_as(Subspace::from_basis(3, 3, expected)));

  CHECK_THROWS_AS(centralizer(L, Subspace::whole(2, 2)), DimensionError);
}

TEST_CASE("derived and lower central series") {
  auto ab = LieAlgebra(StructureConstants(5));
  CHECK(dims(derived_series(ab)) == std::vector<std::size_t>{5, 0});
  CHECK(dims(lower_central_series(ab)) == std::vector<std::size_t>{5, 0});

  auto gl2 = LieAlgebra::general_linear(2);
  CHECK(dims(derived_series(gl2)) == std::vector<std::size_t>{4, 3, 3});
  CHECK(dims(lower_central_series(heisenberg3())) ==
        std::vector<std::size_t>{3, 1, 0});

  for (const auto& alg : {gl2, gl_nr(3, 1), heisenberg3()}) {
    auto ds = dims(derived_series(alg));
    auto ls = dims(lower_central_series(alg));
    CHECK(std::is_sorted(ds.rbegin(), ds.rend()));
    CHECK(std::is_sorted(ls.rbegin(), ls.rend()));
  }
}

TEST_CASE("killing form") {
  auto ab = killing_form(LieAlgebra(StructureConstants(3)));
  CHECK(ab.gram.is_zero());
  CHECK(ab.rank == 0);
  auto h = killing_form(heisenberg3());
  CHECK(h.gram.is_zero());

  // On gl(n): B(x, y) = 2n tr(xy) - 2 tr(x) tr(y).
  for (std::size_t n = 1; n <= 3; ++n) {
    auto kf = killing_form(LieAlgebra::general_linear(n));
    for (std::size_t a = 0; a < n * n; ++a)
      for (std::size_t b = 0; b < n * n; ++b) {
        auto ia = BasisIndex::from_linear(a, n), ib = BasisIndex::from_linear(b, n);
        Matrix x = E(n, n, ia.row, ia.col), y = E(n, n, ib.row, ib.col);
        Scalar expected = Scalar(static_cast<long>(2 * n)) * (x * y).trace() -
                          Scalar(2) * x.trace() * y.trace();
        CHECK(kf.gram(a, b) == expected);
      }
  }
  CHECK(killing_form(LieAlgebra::general_linear(2)).rank == 3);
}

TEST_CASE("adjoint") {
  auto gl2 = LieAlgebra::general_linear(2);
  auto z = center(gl2).basis()[0].flatten();
  CHECK(adjoint(gl2, z).matrix().is_zero());

  auto ad = adjoint(gl2, gl2.basis_vector(0));  // E_11
  CHECK(ad(gl2.basis_vector(1)) == E(2, 2, 1, 2).flatten());
  CHECK(ad(gl2.basis_vector(2)) == (-E(2, 2, 2, 1)).flatten());
  CHECK_THROWS_AS(adjoint(gl2, Vector(3)), DimensionError);

  // ad is a homomorphism into the commutator algebra of linear maps.
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    auto L = LieAlgebra::from_param(BracketParam(random_matrix(rng, 3, 3)));
    Vector x = random_rational_matrix(rng, 9, 1).flatten();
    Vector y = random_rational_matrix(rng, 9, 1).flatten();
    Matrix adx = adjoint(L, x).matrix(), ady = adjoint(L, y).matrix();
    CHECK(adjoint(L, L.bracket(x, y)).matrix() == adx * ady - ady * adx);
  }
}

TEST_CASE("subalgebra_closed") {
  auto gl2 = LieAlgebra::general_linear(2);
  CHECK(subalgebra_closed(gl2, Subspace::whole(2, 2)).pass());
  auto bad = subalgebra_closed(
      gl2, Subspace::from_basis(2, 2, {E(2, 2, 1, 2), E(2, 2, 2, 1)}));
  REQUIRE_FALSE(bad.pass());
  CHECK(bad.violation->bracket == (E(2, 2, 1, 1) - E(2, 2, 2, 2)).flatten());

  // (g h; 0 0), (g h; 0 h''), (g 0; h' 0), (g 0; h' h'') inside gl(4, 2) with
  // g the upper-triangular 2x2 matrices.
  auto L = gl_nr(4, 2);
  std::vector<Matrix> g{E(4, 4, 1, 1), E(4, 4, 1, 2), E(4, 4, 2, 2)};
  std::vector<Matrix> h, h1, h2;
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t j = 3; j <= 4; ++j) {
      h.push_back(E(4, 4, i, j));
      h1.push_back(E(4, 4, j, i));
    }
  for (std::size_t i = 3; i <= 4; ++i)
    for (std::size_t j = 3; j <= 4; ++j) h2.push_back(E(4, 4, i, j));
  auto join = [](std::vector<std::vector<Matrix>> parts) {
    std::vector<Matrix> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return Subspace::from_basis(4, 4, out);
  };
  CHECK(subalgebra_closed(L, join({g, h})).pass());
  CHECK(subalgebra_closed(L, join({g, h, h2})).pass());
  CHECK(subalgebra_closed(L, join({g, h1})).pass());
  CHECK(subalgebra_closed(L, join({g, h1, h2})).pass());
}

TEST_CASE("hom_check") {
  auto gl2 = LieAlgebra::general_linear(2);
  auto id = hom_check(LinearMap::identity(4), gl2, gl2);
  CHECK(id.is_hom);
  CHECK(id.injective);
  auto zero = hom_check(LinearMap(Matrix(4, 4)), gl2, gl2);
  CHECK(zero.is_hom);
  CHECK_FALSE(zero.injective);

  std::mt19937_64 rng(23);
  for (std::size_t n = 1; n <= 3; ++n) {
    Matrix j = random_matrix(rng, n, n);
    while (rank(j) != n) j = random_matrix(rng, n, n);
    auto phi = sandwich_map(j, Matrix::identity(n));  // A -> J A
    auto res = hom_check(phi, LieAlgebra::from_param(BracketParam(j)),
                         LieAlgebra::general_linear(n));
    CHECK(res.is_hom);
    CHECK(res.injective);
  }

  auto not_hom = hom_check(sandwich_map(Matrix{{2, 0}, {0, 1}}, Matrix::identity(2)),
                           gl2, gl2);
  CHECK_FALSE(not_hom.is_hom);
  CHECK(not_hom.violation.has_value());
  CHECK_THROWS_AS(hom_check(LinearMap::identity(3), gl2, gl2), DimensionError);
}

TEST_CASE("invariant signature") {
  auto ab = invariant_signature(LieAlgebra(StructureConstants(4)));
  CHECK(ab.dim == 4);
  CHECK(ab.center_dim == 4);
  CHECK(ab.derived_dims == std::vector<std::size_t>{4, 0});
  CHECK(ab.lcs_dims == std::vector<std::size_t>{4, 0});
  CHECK(ab.killing_rank == 0);
  CHECK(ab.derived_center_dim == 0);

  auto gl2 = invariant_signature(LieAlgebra::general_linear(2));
  CHECK(gl2.center_dim == 1);
  CHECK(gl2.killing_rank == 3);
  auto gl21 = invariant_signature(gl_nr(2, 1));
  CHECK(gl21.center_dim == 1);
  CHECK(gl21.killing_rank != gl2.killing_rank);
}

TEST_CASE("signature is preserved by verified isomorphisms") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 8; ++trial) {
    std::uniform_int_distribution<std::size_t> ext(2, 3);
    const std::size_t n = ext(rng), m = ext(rng);
    Matrix j1 = random_matrix(rng, m, n, -1, 1);
    Matrix j2 = random_parameter(m, n, rank(j1), rng);
    auto L1 = LieAlgebra::from_param(BracketParam(n, m, j1));
    auto L2 = LieAlgebra::from_param(BracketParam(n, m, j2));
    LinearMap phi = iso_witness(j1, j2);
    REQUIRE(hom_check(phi, L1, L2).is_hom);
    auto moved = transport(L1, phi);
    CHECK(moved.constants() == L2.constants());
    CHECK(invariant_signature(moved) == invariant_signature(L1));
  }
}

TEST_CASE("restrict_to") {
  auto L = gl_nr(3, 2);
  auto sub = Subspace::from_basis(3, 3, {E(3, 3, 1, 1), E(3, 3, 1, 3)});
  auto R = restrict_to(L, sub, {"a", "b"});
  // [E11, E13]_J = E13
  CHECK(R.constants().get(0, 1) == SparseVector{{1, Scalar(1)}});
  CHECK_THROWS(restrict_to(LieAlgebra::general_linear(2),
                           Subspace::from_basis(2, 2, {E(2, 2, 1, 2), E(2, 2, 2, 1)})));
}
