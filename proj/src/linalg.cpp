#include "liebracket/linalg.hpp"

#include <algorithm>
#include <utility>

#include "liebracket/errors.hpp"

namespace liebracket {

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void scale_row(Matrix& m, std::size_t row, const Scalar& s) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!m(row, j).is_zero()) m(row, j) *= s;
}

// row[target] -= factor * row[source]
void eliminate_row(Matrix& m, std::size_t target, std::size_t source,
                   const Scalar& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!m(source, j).is_zero()) m(target, j) -= factor * m(source, j);
}

}  // namespace

RrefResult rref(const Matrix& m) {
  Matrix r = m;
  Matrix t = Matrix::identity(m.rows());
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < r.cols() && pivot_row < r.rows(); ++c) {
    std::size_t found = pivot_row;
    while (found < r.rows() && r(found, c).is_zero()) ++found;
    if (found == r.rows()) continue;
    swap_rows(r, pivot_row, found);
    swap_rows(t, pivot_row, found);
    const Scalar inv = Scalar(1) / r(pivot_row, c);
    scale_row(r, pivot_row, inv);
    scale_row(t, pivot_row, inv);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == pivot_row || r(i, c).is_zero()) continue;
      const Scalar factor = r(i, c);
      eliminate_row(r, i, pivot_row, factor);
      eliminate_row(t, i, pivot_row, factor);
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return {std::move(r), std::move(pivots), std::move(t)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix inverse(const Matrix& m) {
  if (!m.is_square())
    throw DimensionError("inverse of non-square " + shape_string(m));
  RrefResult res = rref(m);
  if (res.pivots.size() != m.rows())
    throw SingularMatrixError(res.pivots.size(), m.rows());
  return std::move(res.transform);
}

RankFactorization rank_factorization(const Matrix& j) {
  // T j = R in reduced echelon form. J_r * p selects the first r rows of p,
  // so p takes the nonzero rows of R, completed by unit rows on the
  // non-pivot columns; then q = T^{-1} gives q J_r p = T^{-1} R = j.
  RrefResult res = rref(j);
  const std::size_t r = res.pivots.size();
  const std::size_t n = j.cols();
  Matrix p(n, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < n; ++c) p(i, c) = res.reduced(i, c);
  std::size_t next = r;
  for (std::size_t c = 0; c < n; ++c) {
    if (std::find(res.pivots.begin(), res.pivots.end(), c) != res.pivots.end())
      continue;
    p(next++, c) = 1;
  }
  return {inverse(res.transform), std::move(p), r};
}

Subspace::Subspace(std::size_t ambient_rows, std::size_t ambient_cols)
    : rows_(ambient_rows), cols_(ambient_cols) {
  if (rows_ == 0 || cols_ == 0)
    throw DimensionError("subspace ambient extents must be positive");
}

Subspace::Subspace(std::size_t rows, std::size_t cols, std::vector<Matrix> basis,
                   Matrix solver)
    : rows_(rows), cols_(cols), basis_(std::move(basis)), solver_(std::move(solver)) {}

std::optional<Matrix> basis_matrix(const Subspace& s) {
  if (s.dim() == 0) return std::nullopt;
  Matrix b(s.ambient_dim(), s.dim());
  for (std::size_t k = 0; k < s.dim(); ++k) {
    const Vector& v = s.basis()[k].flatten();
    for (std::size_t i = 0; i < v.size(); ++i) b(i, k) = v[i];
  }
  return b;
}

Subspace Subspace::from_basis(std::size_t ambient_rows, std::size_t ambient_cols,
                              std::vector<Matrix> basis) {
  Subspace zero(ambient_rows, ambient_cols);
  if (basis.empty()) return zero;
  for (const auto& b : basis)
    if (b.rows() != ambient_rows || b.cols() != ambient_cols)
      throw DimensionError("basis element " + shape_string(b) +
                           " does not live in " + std::to_string(ambient_rows) +
                           "x" + std::to_string(ambient_cols));
  if (basis.size() > zero.ambient_dim())
    throw Error("basis elements are linearly dependent");
  zero.basis_ = std::move(basis);
  RrefResult res = rref(*basis_matrix(zero));
  if (res.pivots.size() != zero.basis_.size())
    throw Error("basis elements are linearly dependent");
  return Subspace(ambient_rows, ambient_cols, std::move(zero.basis_),
                  std::move(res.transform));
}

Subspace Subspace::span(std::size_t ambient_rows, std::size_t ambient_cols,
                        std::span<const Matrix> generators) {
  if (generators.empty()) return Subspace(ambient_rows, ambient_cols);
  const std::size_t d = ambient_rows * ambient_cols;
  Matrix g(generators.size(), d);
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const Matrix& m = generators[k];
    if (m.rows() != ambient_rows || m.cols() != ambient_cols)
      throw DimensionError("generator " + shape_string(m) +
                           " does not live in " + std::to_string(ambient_rows) +
                           "x" + std::to_string(ambient_cols));
    for (std::size_t i = 0; i < d; ++i) g(k, i) = m.flatten()[i];
  }
  RrefResult res = rref(g);
  std::vector<Matrix> basis;
  for (std::size_t k = 0; k < res.pivots.size(); ++k) {
    Vector row(d);
    for (std::size_t i = 0; i < d; ++i) row[i] = res.reduced(k, i);
    basis.push_back(Matrix::from_flat(ambient_rows, ambient_cols, row));
  }
  return from_basis(ambient_rows, ambient_cols, std::move(basis));
}

Subspace Subspace::whole(std::size_t ambient_rows, std::size_t ambient_cols) {
  std::vector<Matrix> basis;
  for (std::size_t i = 1; i <= ambient_rows; ++i)
    for (std::size_t j = 1; j <= ambient_cols; ++j)
      basis.push_back(Matrix::unit(ambient_rows, ambient_cols, i, j));
  return from_basis(ambient_rows, ambient_cols, std::move(basis));
}

std::optional<Vector> Subspace::coordinates_flat(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim())
    throw DimensionError("vector of length " + std::to_string(v.size()) +
                         " outside ambient dimension " +
                         std::to_string(ambient_dim()));
  if (basis_.empty()) {
    for (const auto& x : v)
      if (!x.is_zero()) return std::nullopt;
    return Vector{};
  }
  Vector t = mat_vec(*solver_, v);
  for (std::size_t i = dim(); i < t.size(); ++i)
    if (!t[i].is_zero()) return std::nullopt;
  t.resize(dim());
  return t;
}

std::optional<Vector> Subspace::coordinates(const Matrix& m) const {
  if (m.rows() != rows_ || m.cols() != cols_)
    throw DimensionError("matrix " + shape_string(m) + " outside ambient " +
                         std::to_string(rows_) + "x" + std::to_string(cols_));
  return coordinates_flat(m.flatten());
}

bool Subspace::same_as(const Subspace& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || dim() != o.dim()) return false;
  return std::all_of(o.basis_.begin(), o.basis_.end(),
                     [this](const Matrix& b) { return contains(b); });
}

Subspace kernel(const Matrix& m) {
  RrefResult res = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : res.pivots) is_pivot[c] = true;
  std::vector<Matrix> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < res.pivots.size(); ++i)
      v[res.pivots[i]] = -res.reduced(i, f);
    basis.push_back(Matrix::column(v));
  }
  return Subspace::from_basis(n, 1, std::move(basis));
}

}  // namespace liebracket
