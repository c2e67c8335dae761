#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "liebracket/matrix.hpp"

namespace liebracket {

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  Matrix transform;                 // transform * input == reduced
};

/// Gauss-Jordan elimination. Pivots are chosen column by column, taking the
/// first nonzero entry from the top of the unreduced rows.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// m = q * J_{rows,cols,rank} * p with q, p invertible.
struct RankFactorization {
  Matrix q;
  Matrix p;
  std::size_t rank;
};

RankFactorization rank_factorization(const Matrix& j);

/// Throws DimensionError for non-square input, SingularMatrixError otherwise.
Matrix inverse(const Matrix& m);

/// A linear subspace of Mat(rows x cols), held by an ordered basis of
/// linearly independent matrices. The basis may be empty.
class Subspace {
 public:
  /// The zero subspace.
  Subspace(std::size_t ambient_rows, std::size_t ambient_cols);

  /// Keeps `basis` verbatim; throws DimensionError on a shape mismatch and
  /// Error if the elements are linearly dependent.
  static Subspace from_basis(std::size_t ambient_rows, std::size_t ambient_cols,
                             std::vector<Matrix> basis);
  /// Span of arbitrary generators, reduced to an echelon basis.
  static Subspace span(std::size_t ambient_rows, std::size_t ambient_cols,
                       std::span<const Matrix> generators);
  static Subspace whole(std::size_t ambient_rows, std::size_t ambient_cols);

  std::size_t ambient_rows() const noexcept { return rows_; }
  std::size_t ambient_cols() const noexcept { return cols_; }
  std::size_t ambient_dim() const noexcept { return rows_ * cols_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Matrix>& basis() const noexcept { return basis_; }

  /// Coordinates of `m` with respect to basis(), or nullopt if m is outside.
  std::optional<Vector> coordinates(const Matrix& m) const;
  std::optional<Vector> coordinates_flat(std::span<const Scalar> v) const;
  bool contains(const Matrix& m) const { return coordinates(m).has_value(); }

  /// Same subspace of the ambient space (order-insensitive).
  bool same_as(const Subspace& o) const;

 private:
  Subspace(std::size_t rows, std::size_t cols, std::vector<Matrix> basis,
           Matrix solver);

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Matrix> basis_;
  // Rows 0..dim-1 of solver * v give the coordinates of v; the remaining
  // rows vanish exactly when v lies in the span.
  std::optional<Matrix> solver_;
};

/// Null space {v : m v = 0}, as column vectors of length m.cols().
Subspace kernel(const Matrix& m);

/// Matrix whose columns are the flattened basis elements.
std::optional<Matrix> basis_matrix(const Subspace& s);

}  // namespace liebracket
