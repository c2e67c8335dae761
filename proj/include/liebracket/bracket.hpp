#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>

#include "liebracket/matrix.hpp"

namespace liebracket {

/// Parameter of the bracket [A,B]_J = AJB - BJA on Mat(n x m); J is m x n.
class BracketParam {
 public:
  BracketParam(std::size_t n, std::size_t m, Matrix j);
  /// Square case Mat(n) with an n x n parameter.
  explicit BracketParam(Matrix j);

  /// (Mat(n x m), [.,.]_{J_{m,n,r}}).
  static BracketParam normal(std::size_t n, std::size_t m, std::size_t r);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t dim() const noexcept { return n_ * m_; }
  const Matrix& j() const noexcept { return j_; }

  friend bool operator==(const BracketParam&, const BracketParam&) = default;

 private:
  std::size_t n_;
  std::size_t m_;
  Matrix j_;
};

Matrix bracket(const Matrix& a, const Matrix& b, const BracketParam& param);

/// Row-major position of E_{row,col} (1-based) in Mat(n x m).
struct BasisIndex {
  std::size_t row;
  std::size_t col;

  std::size_t linear(std::size_t m) const { return (row - 1) * m + (col - 1); }
  static BasisIndex from_linear(std::size_t k, std::size_t m) {
    return {k / m + 1, k % m + 1};
  }
};

/// Matrix split along row r and column r:
///   (top_left     top_right   )
///   (bottom_left  bottom_right)
/// top_left is r x r, bottom_left (n-r) x r, top_right r x (m-r),
/// bottom_right (n-r) x (m-r). Blocks with a zero extent are absent.
struct BlockMatrix {
  std::size_t n;
  std::size_t m;
  std::size_t r;
  std::optional<Matrix> top_left;
  std::optional<Matrix> bottom_left;
  std::optional<Matrix> top_right;
  std::optional<Matrix> bottom_right;

  static BlockMatrix split(const Matrix& a, std::size_t r);
  Matrix assemble() const;
};

/// Bracket under J_{m,n,r} computed blockwise:
/// ([A1,B1], A2 B1 - B2 A1, A1 B3 - B1 A3, A2 B3 - B2 A3); the bottom-right
/// blocks of the operands never enter.
BlockMatrix block_bracket(const BlockMatrix& a, const BlockMatrix& b);

/// Sparse coordinate vector: basis index -> nonzero coefficient.
using SparseVector = std::map<std::size_t, Scalar>;

/// Structure constants c_{i,j}^k of a Lie algebra with a fixed basis. Only
/// pairs i < j are stored; [x_j, x_i] reads as the negation and [x_i, x_i]
/// as zero.
class StructureConstants {
 public:
  explicit StructureConstants(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const noexcept { return dim_; }

  /// Sets [x_i, x_j] for i != j (i > j stores the negation). Zero
  /// coefficients are dropped and an all-zero value erases the entry.
  void set(std::size_t i, std::size_t j, const SparseVector& value);

  /// [x_i, x_j] expanded in the basis.
  SparseVector get(std::size_t i, std::size_t j) const;

  /// Bracket of two coordinate vectors.
  Vector bracket(std::span<const Scalar> x, std::span<const Scalar> y) const;

  using Table = std::map<std::pair<std::size_t, std::size_t>, SparseVector>;
  const Table& table() const noexcept { return table_; }
  bool is_abelian() const noexcept { return table_.empty(); }

  friend bool operator==(const StructureConstants&,
                         const StructureConstants&) = default;

 private:
  std::size_t dim_;
  Table table_;
};

/// Expands [E_a, E_b]_J over the canonical basis of Mat(n x m).
StructureConstants structure_constants(const BracketParam& param);

SparseVector to_sparse(std::span<const Scalar> v);
Vector to_dense(const SparseVector& v, std::size_t dim);

}  // namespace liebracket
