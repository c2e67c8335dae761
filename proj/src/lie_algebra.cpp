#include "liebracket/lie_algebra.hpp"

#include "liebracket/errors.hpp"

namespace liebracket {

namespace {

std::vector<std::string> default_labels(std::size_t dim,
                                        const std::optional<BracketParam>& model) {
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < dim; ++k) {
    if (model) {
      auto idx = BasisIndex::from_linear(k, model->m());
      labels.push_back("E_" + std::to_string(idx.row) + "," +
                       std::to_string(idx.col));
    } else {
      labels.push_back("x_" + std::to_string(k + 1));
    }
  }
  return labels;
}

void require_subspace_of(const LieAlgebra& L, const Subspace& S) {
  if (S.ambient_dim() != L.dim())
    throw DimensionError("subspace of ambient dimension " +
                         std::to_string(S.ambient_dim()) +
                         " does not live in an algebra of dimension " +
                         std::to_string(L.dim()));
}

Subspace span_in(const LieAlgebra& L, const std::vector<Vector>& vectors) {
  std::vector<Matrix> gens;
  gens.reserve(vectors.size());
  for (const auto& v : vectors) gens.push_back(L.element(v));
  return Subspace::span(L.ambient_rows(), L.ambient_cols(), gens);
}

Subspace kernel_in(const LieAlgebra& L, const Matrix& system) {
  Subspace k = kernel(system);
  std::vector<Matrix> basis;
  for (const auto& v : k.basis()) basis.push_back(L.element(v.flatten()));
  return Subspace::from_basis(L.ambient_rows(), L.ambient_cols(),
                              std::move(basis));
}

// Series step: span of [x, y] for x in `left`, y in `right`.
Subspace bracket_span(const LieAlgebra& L, const Subspace& left,
                      const Subspace& right) {
  std::vector<Vector> brackets;
  for (const auto& x : left.basis())
    for (const auto& y : right.basis()) {
      Vector v = L.bracket(x.flatten(), y.flatten());
      bool zero = true;
      for (const auto& c : v) zero = zero && c.is_zero();
      if (!zero) brackets.push_back(std::move(v));
    }
  return span_in(L, brackets);
}

template <typename Step>
std::vector<Subspace> series(const LieAlgebra& L, Step step) {
  std::vector<Subspace> terms{
      Subspace::whole(L.ambient_rows(), L.ambient_cols())};
  for (std::size_t iter = 0; iter <= L.dim(); ++iter) {
    Subspace next = step(terms.back());
    const std::size_t prev_dim = terms.back().dim();
    terms.push_back(std::move(next));
    if (terms.back().dim() == 0 || terms.back().dim() == prev_dim) break;
  }
  return terms;
}

Matrix ad_matrix(const LieAlgebra& L, std::span<const Scalar> x) {
  const std::size_t d = L.dim();
  Matrix ad(d, d);
  for (std::size_t b = 0; b < d; ++b) {
    Vector col = L.bracket(x, L.basis_vector(b));
    for (std::size_t k = 0; k < d; ++k) ad(k, b) = col[k];
  }
  return ad;
}

bool is_zero_vector(std::span<const Scalar> v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace

LieAlgebra::LieAlgebra(StructureConstants constants,
                       std::vector<std::string> labels,
                       std::optional<BracketParam> model)
    : constants_(std::move(constants)),
      labels_(std::move(labels)),
      model_(std::move(model)) {
  if (constants_.dim() == 0) throw DimensionError("Lie algebra of dimension 0");
  if (model_ && model_->dim() != constants_.dim())
    throw DimensionError("model dimension does not match structure constants");
  if (labels_.empty()) labels_ = default_labels(constants_.dim(), model_);
  if (labels_.size() != constants_.dim())
    throw DimensionError("label count does not match dimension");
}

LieAlgebra LieAlgebra::from_param(const BracketParam& param) {
  return LieAlgebra(structure_constants(param), {}, param);
}

LieAlgebra LieAlgebra::general_linear(std::size_t p) {
  return from_param(BracketParam(Matrix::identity(p)));
}

LieAlgebra LieAlgebra::verified(StructureConstants constants,
                                std::vector<std::string> labels) {
  LieAlgebra L(std::move(constants), std::move(labels));
  JacobiResult j = jacobi_check(L);
  if (!j.pass())
    throw Error("Jacobi identity fails on basis triple (" +
                std::to_string(j.violation->a) + ", " +
                std::to_string(j.violation->b) + ", " +
                std::to_string(j.violation->c) + ")");
  return L;
}

Vector LieAlgebra::basis_vector(std::size_t k) const {
  if (k >= dim()) throw DimensionError("basis index out of range");
  Vector v(dim());
  v[k] = 1;
  return v;
}

std::size_t LieAlgebra::ambient_rows() const {
  return model_ ? model_->n() : dim();
}

std::size_t LieAlgebra::ambient_cols() const {
  return model_ ? model_->m() : 1;
}

Matrix LieAlgebra::element(std::span<const Scalar> coords) const {
  if (coords.size() != dim())
    throw DimensionError("coordinate vector of length " +
                         std::to_string(coords.size()) + " in dimension " +
                         std::to_string(dim()));
  return Matrix::from_flat(ambient_rows(), ambient_cols(), coords);
}

LinearMap::LinearMap(std::size_t src_dim, std::size_t dst_dim, Matrix matrix)
    : matrix_(std::move(matrix)) {
  if (matrix_.rows() != dst_dim || matrix_.cols() != src_dim)
    throw DimensionError("linear map " + std::to_string(src_dim) + " -> " +
                         std::to_string(dst_dim) + " needs a " +
                         std::to_string(dst_dim) + "x" +
                         std::to_string(src_dim) + " matrix, got " +
                         shape_string(matrix_));
}

LinearMap LinearMap::from_columns(std::span<const Vector> columns) {
  if (columns.empty()) throw DimensionError("linear map without columns");
  Matrix m(columns.front().size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != m.rows())
      throw DimensionError("columns of unequal length");
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = columns[c][r];
  }
  return LinearMap(std::move(m));
}

LinearMap LinearMap::after(const LinearMap& other) const {
  return LinearMap(matrix_ * other.matrix_);
}

JacobiResult jacobi_check(const LieAlgebra& L) {
  const auto& sc = L.constants();
  const std::size_t d = L.dim();
  // [x_a, v] for sparse v.
  auto bracket_with = [&](std::size_t a, const SparseVector& v, Vector& out,
                          const Scalar& sign) {
    for (const auto& [k, c] : v)
      for (const auto& [l, e] : sc.get(a, k)) out[l] += sign * c * e;
  };
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t c = b + 1; c < d; ++c) {
        Vector defect(d);
        bracket_with(a, sc.get(b, c), defect, 1);
        bracket_with(b, sc.get(c, a), defect, 1);
        bracket_with(c, sc.get(a, b), defect, 1);
        if (!is_zero_vector(defect))
          return {JacobiViolation{a, b, c, std::move(defect)}};
      }
  return {};
}

Subspace center(const LieAlgebra& L) {
  const std::size_t d = L.dim();
  // Row (b, k) holds the k-th coordinate of [x, e_b] = sum_a x_a c_{a,b}^k.
  Matrix system(d * d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (const auto& [k, c] : L.constants().get(a, b)) system(b * d + k, a) = c;
  return kernel_in(L, system);
}

Subspace centralizer(const LieAlgebra& L, const Subspace& S) {
  require_subspace_of(L, S);
  const std::size_t d = L.dim();
  if (S.dim() == 0) return Subspace::whole(L.ambient_rows(), L.ambient_cols());
  Matrix system(S.dim() * d, d);
  for (std::size_t s = 0; s < S.dim(); ++s) {
    const Vector& y = S.basis()[s].flatten();
    for (std::size_t a = 0; a < d; ++a) {
      Vector col = L.bracket(L.basis_vector(a), y);
      for (std::size_t k = 0; k < d; ++k) system(s * d + k, a) = col[k];
    }
  }
  return kernel_in(L, system);
}

std::vector<Subspace> derived_series(const LieAlgebra& L) {
  return series(L, [&](const Subspace& prev) {
    return bracket_span(L, prev, prev);
  });
}

std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
  const Subspace whole = Subspace::whole(L.ambient_rows(), L.ambient_cols());
  return series(L, [&](const Subspace& prev) {
    return bracket_span(L, whole, prev);
  });
}

KillingForm killing_form(const LieAlgebra& L) {
  const std::size_t d = L.dim();
  std::vector<Matrix> ads;
  ads.reserve(d);
  for (std::size_t a = 0; a < d; ++a) ads.push_back(ad_matrix(L, L.basis_vector(a)));
  Matrix gram(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) {
      Scalar t;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
          const Scalar& x = ads[a](i, k);
          const Scalar& y = ads[b](k, i);
          if (!x.is_zero() && !y.is_zero()) t += x * y;
        }
      gram(a, b) = t;
      gram(b, a) = t;
    }
  std::size_t r = rank(gram);
  return {std::move(gram), r};
}

LinearMap adjoint(const LieAlgebra& L, std::span<const Scalar> x) {
  if (x.size() != L.dim())
    throw DimensionError("adjoint: element of length " +
                         std::to_string(x.size()) + " in dimension " +
                         std::to_string(L.dim()));
  return LinearMap(ad_matrix(L, x));
}

SubalgebraResult subalgebra_closed(const LieAlgebra& L, const Subspace& S) {
  require_subspace_of(L, S);
  const auto& basis = S.basis();
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      Vector v = L.bracket(basis[a].flatten(), basis[b].flatten());
      if (!S.coordinates_flat(v)) return {ClosureViolation{a, b, std::move(v)}};
    }
  return {};
}

LieAlgebra restrict_to(const LieAlgebra& L, const Subspace& S,
                       std::vector<std::string> labels) {
  require_subspace_of(L, S);
  if (S.dim() == 0) throw DimensionError("restriction to the zero subspace");
  const auto& basis = S.basis();
  StructureConstants sc(S.dim());
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      Vector v = L.bracket(basis[a].flatten(), basis[b].flatten());
      auto coords = S.coordinates_flat(v);
      if (!coords)
        throw Error("subspace is not closed under the bracket: basis pair (" +
                    std::to_string(a) + ", " + std::to_string(b) + ")");
      sc.set(a, b, to_sparse(*coords));
    }
  return LieAlgebra(std::move(sc), std::move(labels));
}

HomResult hom_check(const LinearMap& f, const LieAlgebra& src,
                    const LieAlgebra& dst) {
  if (f.src_dim() != src.dim() || f.dst_dim() != dst.dim())
    throw DimensionError("hom_check: map " + std::to_string(f.src_dim()) +
                         " -> " + std::to_string(f.dst_dim()) +
                         " between algebras of dimension " +
                         std::to_string(src.dim()) + " and " +
                         std::to_string(dst.dim()));
  HomResult result;
  const std::size_t d = src.dim();
  std::vector<Vector> images;
  images.reserve(d);
  for (std::size_t a = 0; a < d; ++a) images.push_back(f(src.basis_vector(a)));
  result.is_hom = true;
  for (std::size_t a = 0; a < d && result.is_hom; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      Vector expected = f(to_dense(src.constants().get(a, b), d));
      Vector actual = dst.bracket(images[a], images[b]);
      if (expected != actual) {
        result.is_hom = false;
        result.violation = HomViolation{a, b, std::move(expected), std::move(actual)};
        break;
      }
    }
  const std::size_t r = rank(f.matrix());
  result.injective = r == src.dim();
  result.surjective = r == dst.dim();
  return result;
}

InvariantSignature invariant_signature(const LieAlgebra& L) {
  InvariantSignature sig;
  sig.dim = L.dim();
  sig.center_dim = center(L).dim();
  auto derived = derived_series(L);
  for (const auto& s : derived) sig.derived_dims.push_back(s.dim());
  for (const auto& s : lower_central_series(L)) sig.lcs_dims.push_back(s.dim());
  sig.killing_rank = killing_form(L).rank;
  const Subspace& d1 = derived.at(1);
  sig.derived_center_dim = d1.dim() == 0 ? 0 : center(restrict_to(L, d1)).dim();
  return sig;
}

LieAlgebra transport(const LieAlgebra& L, const LinearMap& f) {
  if (f.src_dim() != L.dim() || f.dst_dim() != L.dim())
    throw DimensionError("transport needs a square map of the algebra's size");
  const Matrix finv = inverse(f.matrix());
  const std::size_t d = L.dim();
  std::vector<Vector> pre;
  for (std::size_t a = 0; a < d; ++a) pre.push_back(mat_vec(finv, L.basis_vector(a)));
  StructureConstants sc(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      sc.set(a, b, to_sparse(f(L.bracket(pre[a], pre[b]))));
  return LieAlgebra(std::move(sc));
}

}  // namespace liebracket
