#include "liebracket/constructions.hpp"

#include <algorithm>
#include <array>

#include "liebracket/errors.hpp"

namespace liebracket {

namespace {

std::string indexed(std::string_view stem, std::size_t i) {
  return std::string(stem) + "_" + std::to_string(i);
}

LinearMap flattening_map(std::span<const Matrix> images) {
  std::vector<Vector> columns;
  columns.reserve(images.size());
  for (const auto& m : images) columns.push_back(m.flatten());
  return LinearMap::from_columns(columns);
}

}  // namespace

std::vector<Matrix> HeisenbergModel::generators() const {
  std::vector<Matrix> out = x;
  out.insert(out.end(), y.begin(), y.end());
  out.push_back(z);
  return out;
}

std::vector<std::string> HeisenbergModel::labels() const {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(indexed("X", i));
  for (std::size_t i = 1; i <= n; ++i) out.push_back(indexed("Y", i));
  out.push_back("Z");
  return out;
}

Subspace HeisenbergModel::span() const {
  return Subspace::from_basis(n + 2, n + 2, generators());
}

LieAlgebra HeisenbergModel::algebra() const {
  return restrict_to(LieAlgebra::from_param(ambient), span(), labels());
}

HeisenbergModel heisenberg_realization(std::size_t n) {
  if (n < 1) throw HypothesisError("heisenberg_realization needs n >= 1");
  const std::size_t size = n + 2;
  HeisenbergModel h{n, BracketParam::normal(size, size, n + 1), {}, {},
                    Matrix::unit(size, size, 1, size)};
  for (std::size_t i = 1; i <= n; ++i) {
    h.x.push_back(Matrix::unit(size, size, 1, i + 1));
    h.y.push_back(Matrix::unit(size, size, i + 1, size));
  }
  const auto gens = h.generators();
  const Matrix zero(size, size);
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = 0; b < gens.size(); ++b) {
      Matrix expected = zero;
      if (a < n && b == n + a) expected = h.z;
      if (b < n && a == n + b) expected = -h.z;
      if (bracket(gens[a], gens[b], h.ambient) != expected)
        throw Error("Heisenberg relation fails for generators " + std::to_string(a) +
                    ", " + std::to_string(b));
    }
  return h;
}

LieAlgebra heisenberg_algebra(std::size_t n) {
  if (n < 1) throw HypothesisError("heisenberg_algebra needs n >= 1");
  StructureConstants sc(2 * n + 1);
  for (std::size_t i = 0; i < n; ++i) sc.set(i, n + i, {{2 * n, Scalar(1)}});
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(indexed("X", i));
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(indexed("Y", i));
  labels.push_back("Z");
  return LieAlgebra(std::move(sc), std::move(labels));
}

RepCandidate::RepCandidate(LieAlgebra src, std::vector<Matrix> images)
    : src_(std::move(src)), images_(std::move(images)) {
  if (images_.size() != src_.dim())
    throw DimensionError("representation needs " + std::to_string(src_.dim()) +
                         " images, got " + std::to_string(images_.size()));
  const std::size_t p = images_.front().rows();
  for (const auto& m : images_)
    if (m.rows() != p || m.cols() != p)
      throw DimensionError("representation images must all be " + std::to_string(p) +
                           "x" + std::to_string(p) + ", got " + shape_string(m));
}

LinearMap RepCandidate::as_map() const { return flattening_map(images_); }

std::string_view to_string(ObstructionVerdict v) {
  switch (v) {
    case ObstructionVerdict::NotAHom: return "not-a-hom";
    case ObstructionVerdict::NotFaithful: return "not-faithful";
    case ObstructionVerdict::Faithful: return "faithful";
    case ObstructionVerdict::ScalarZContradiction: return "scalar-Z-contradiction";
  }
  return "unknown";
}

ObstructionReport heisenberg_obstruction(const RepCandidate& cand) {
  const std::size_t d = cand.src().dim();
  if (d < 3 || d % 2 == 0)
    throw HypothesisError("candidate source is not a Heisenberg algebra");
  const std::size_t n = (d - 1) / 2;
  if (!(cand.src().constants() == heisenberg_algebra(n).constants()))
    throw HypothesisError("candidate source is not a Heisenberg algebra");

  const std::size_t p = cand.target_dim();
  const Matrix& z = cand.images().back();
  const Scalar lambda = z(0, 0);
  const bool scalar_z = !lambda.is_zero() && z == lambda * Matrix::identity(p);

  ObstructionReport report{ObstructionVerdict::NotAHom, n, p, scalar_z, z.trace(),
                           hom_check(cand.as_map(), cand.src(),
                                     LieAlgebra::general_linear(p))};
  if (scalar_z)
    report.verdict = ObstructionVerdict::ScalarZContradiction;
  else if (!report.hom.is_hom)
    report.verdict = ObstructionVerdict::NotAHom;
  else if (!report.hom.injective)
    report.verdict = ObstructionVerdict::NotFaithful;
  else
    report.verdict = ObstructionVerdict::Faithful;
  return report;
}

namespace {

// Offsets of the X, A, B, C blocks in the flat coordinate vector.
struct SemidirectLayout {
  std::size_t r, s;

  std::size_t x(std::size_t i, std::size_t j) const { return i * r + j; }
  std::size_t a(std::size_t i, std::size_t j) const { return r * r + i * r + j; }
  std::size_t b(std::size_t i, std::size_t j) const {
    return r * r + s * r + i * s + j;
  }
  std::size_t c(std::size_t i, std::size_t j) const {
    return r * r + 2 * s * r + i * s + j;
  }
  std::size_t dim() const { return (r + s) * (r + s); }
};

Vector semidirect_bracket(const SemidirectLayout& L, const Vector& u, const Vector& v) {
  Vector out(L.dim());
  const std::size_t r = L.r, s = L.s;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Scalar acc;
      for (std::size_t k = 0; k < r; ++k)
        acc += u[L.x(i, k)] * v[L.x(k, j)] - v[L.x(i, k)] * u[L.x(k, j)];
      out[L.x(i, j)] = acc;
    }
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Scalar acc;
      for (std::size_t k = 0; k < r; ++k)
        acc += u[L.a(i, k)] * v[L.x(k, j)] - v[L.a(i, k)] * u[L.x(k, j)];
      out[L.a(i, j)] = acc;
    }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      Scalar acc;
      for (std::size_t k = 0; k < r; ++k)
        acc += u[L.x(i, k)] * v[L.b(k, j)] - v[L.x(i, k)] * u[L.b(k, j)];
      out[L.b(i, j)] = acc;
    }
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      Scalar acc;
      for (std::size_t k = 0; k < r; ++k)
        acc += u[L.a(i, k)] * v[L.b(k, j)] - v[L.a(i, k)] * u[L.b(k, j)];
      out[L.c(i, j)] = acc;
    }
  return out;
}

}  // namespace

Subspace SemidirectModel::nilpotent_part() const {
  const std::size_t d = algebra.dim();
  std::vector<Matrix> basis;
  for (std::size_t k = r * r; k < d; ++k) basis.push_back(Matrix::unit(d, 1, k + 1, 1));
  if (basis.empty()) return Subspace(d, 1);
  return Subspace::from_basis(d, 1, std::move(basis));
}

LieAlgebra SemidirectModel::target() const {
  return LieAlgebra::from_param(BracketParam::normal(r + s, r + s, r));
}

SemidirectModel semidirect_S(std::size_t r, std::size_t s) {
  if (r < 1) throw HypothesisError("semidirect_S needs r >= 1");
  const SemidirectLayout layout{r, s};
  const std::size_t d = layout.dim(), n = r + s;

  std::vector<std::string> labels(d);
  auto name = [](char stem, std::size_t i, std::size_t j) {
    return std::string(1, stem) + "_" + std::to_string(i + 1) + "," + std::to_string(j + 1);
  };
  Matrix phi(d, d);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      labels[layout.x(i, j)] = name('X', i, j);
      phi(i * n + j, layout.x(i, j)) = 1;
    }
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      labels[layout.a(i, j)] = name('A', i, j);
      phi((r + i) * n + j, layout.a(i, j)) = 1;
    }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      labels[layout.b(i, j)] = name('B', i, j);
      phi(i * n + r + j, layout.b(i, j)) = 1;
    }
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      labels[layout.c(i, j)] = name('C', i, j);
      phi((r + i) * n + r + j, layout.c(i, j)) = 1;
    }

  StructureConstants sc(d);
  std::vector<Vector> basis;
  for (std::size_t k = 0; k < d; ++k) {
    Vector e(d);
    e[k] = 1;
    basis.push_back(std::move(e));
  }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      sc.set(a, b, to_sparse(semidirect_bracket(layout, basis[a], basis[b])));

  return {r, s, LieAlgebra(std::move(sc), std::move(labels)), LinearMap(std::move(phi))};
}

AdoEmbedding ado_embed(const RepCandidate& cand, std::size_t n, std::size_t m,
                       std::size_t q) {
  const std::size_t p = cand.target_dim();
  if (q < p)
    throw HypothesisError("ado_embed needs q >= p, got q = " + std::to_string(q) +
                          ", p = " + std::to_string(p));
  if (n < q || m < q)
    throw HypothesisError("ado_embed needs n, m >= q, got " + std::to_string(n) + "x" +
                          std::to_string(m) + " with q = " + std::to_string(q));
  HomResult source =
      hom_check(cand.as_map(), cand.src(), LieAlgebra::general_linear(p));
  if (!source.is_hom)
    throw HypothesisError("ado_embed needs a homomorphic candidate");

  std::vector<Matrix> padded;
  padded.reserve(cand.images().size());
  for (const auto& img : cand.images()) {
    Matrix big(n, m);
    big.set_block(0, 0, img);
    padded.push_back(std::move(big));
  }
  LinearMap map = flattening_map(padded);
  HomResult embedded =
      hom_check(map, cand.src(), LieAlgebra::from_param(BracketParam::normal(n, m, q)));
  return {Subspace::span(n, m, padded), std::move(map), std::move(embedded)};
}

bool CatalogEntry::has_discrepancy() const {
  return std::any_of(claims.begin(), claims.end(),
                     [](const BracketClaim& c) { return !c.consistent(); });
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"heisenberg3_gl21", "affine2_column",
                                              "g32_1",            "column4",
                                              "mat2_rank1",       "mat2_full"};
  return names;
}

namespace {

struct Named {
  std::string label;
  Matrix value;
};

BracketClaim claim(const Named& a, const Named& b, Matrix claimed,
                   const BracketParam& p, std::string note = {}) {
  Matrix computed = bracket(a.value, b.value, p);
  return {a.label, b.label, a.value, b.value, std::move(claimed), std::move(computed),
          std::move(note)};
}

CatalogEntry make_entry(std::string name, std::string description, BracketParam p,
                        std::vector<Named> basis) {
  std::vector<std::string> labels;
  std::vector<Matrix> mats;
  for (auto& b : basis) {
    labels.push_back(b.label);
    mats.push_back(b.value);
  }
  LieAlgebra alg = restrict_to(LieAlgebra::from_param(p),
                               Subspace::from_basis(p.n(), p.m(), mats), labels);
  return {std::move(name), std::move(description), std::move(p), std::move(labels),
          std::move(mats), std::move(alg), {}};
}

std::vector<Named> canonical_basis(std::size_t n, std::size_t m, bool column) {
  std::vector<Named> out;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      out.push_back({column ? indexed("e", i)
                            : "E_" + std::to_string(i) + "," + std::to_string(j),
                     Matrix::unit(n, m, i, j)});
  return out;
}

CatalogEntry heisenberg3_gl21() {
  BracketParam p(Matrix{{1, 0}, {0, 0}});
  Named x{"X", Matrix::unit(2, 2, 2, 1)}, y{"Y", Matrix::unit(2, 2, 1, 2)},
      z{"Z", Matrix::unit(2, 2, 2, 2)};
  auto e = make_entry("heisenberg3_gl21",
                      "3-dim Heisenberg algebra inside Mat(2) with J = diag(1,0)", p,
                      {x, y, z});
  e.claims = {claim(x, y, z.value, p), claim(x, z, Matrix(2, 2), p),
              claim(y, z, Matrix(2, 2), p)};
  return e;
}

CatalogEntry affine2_column() {
  BracketParam p(2, 1, Matrix{{1, 0}});
  auto basis = canonical_basis(2, 1, true);
  auto e = make_entry("affine2_column",
                      "2-dim nonabelian algebra on Mat(2x1) with J = (1 0)", p, basis);
  e.claims = {claim(basis[1], basis[0], basis[0].value, p,
                    "claimed e_1, the bracket gives e_2")};
  return e;
}

CatalogEntry g32_1() {
  BracketParam p(3, 1, Matrix{{1, 0, 0}});
  Named e1{"e_1", Matrix::column(std::array<Scalar, 3>{-1, 0, 0})};
  Named e2{"e_2", Matrix::unit(3, 1, 2, 1)}, e3{"e_3", Matrix::unit(3, 1, 3, 1)};
  auto e = make_entry("g32_1", "3-dim algebra on Mat(3x1) with J = (1 0 0)", p,
                      {e1, e2, e3});
  e.claims = {claim(e1, e2, e2.value, p), claim(e1, e3, e3.value, p),
              claim(e2, e3, Matrix(3, 1), p)};
  return e;
}

CatalogEntry column4() {
  BracketParam p(4, 1, Matrix{{1, 0, 0, 0}});
  auto basis = canonical_basis(4, 1, true);
  auto e = make_entry("column4", "4-dim algebra on Mat(4x1) with J = (1 0 0 0)", p, basis);
  // [e_i, e_j] = delta_{j,1} e_i - delta_{i,1} e_j; only i < j is listed.
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      Matrix expected = i == 0 ? -basis[j].value : Matrix(4, 1);
      e.claims.push_back(claim(basis[i], basis[j], std::move(expected), p));
    }
  return e;
}

std::array<Named, 3> sl2_triple() {
  return {Named{"H", Matrix{{1, 0}, {0, -1}}}, Named{"X", Matrix::unit(2, 2, 1, 2)},
          Named{"Y", Matrix::unit(2, 2, 2, 1)}};
}

CatalogEntry mat2_rank1() {
  BracketParam p(Matrix{{0, 0}, {0, 1}});
  auto e = make_entry("mat2_rank1", "Mat(2) with J = diag(0,1)", p,
                      canonical_basis(2, 2, false));
  auto [h, x, y] = sl2_triple();
  e.claims = {claim(h, x, x.value, p), claim(h, y, -y.value, p),
              claim(x, y, Matrix(2, 2), p,
                    "claimed 0, the bracket gives E_1,1; span{H,X,Y} is not closed")};
  return e;
}

CatalogEntry mat2_full() {
  BracketParam p(Matrix::identity(2));
  auto e = make_entry("mat2_full", "gl(2): Mat(2) with J = I_2", p,
                      canonical_basis(2, 2, false));
  auto [h, x, y] = sl2_triple();
  e.claims = {claim(h, x, Scalar(2) * x.value, p), claim(h, y, Scalar(-2) * y.value, p),
              claim(x, y, h.value, p)};
  return e;
}

}  // namespace

CatalogEntry example_catalog(std::string_view name) {
  if (name == "heisenberg3_gl21") return heisenberg3_gl21();
  if (name == "affine2_column") return affine2_column();
  if (name == "g32_1") return g32_1();
  if (name == "column4") return column4();
  if (name == "mat2_rank1") return mat2_rank1();
  if (name == "mat2_full") return mat2_full();
  std::string valid;
  for (const auto& n : catalog_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw Error("unknown example '" + std::string(name) + "'; valid names: " + valid);
}

}  // namespace liebracket
