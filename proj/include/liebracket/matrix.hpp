#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "liebracket/scalar.hpp"

namespace liebracket {

/// Coordinate vector with respect to some basis.
using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact rationals. Both extents are at least 1.
class Matrix {
 public:
  /// Zero matrix of the given shape; throws DimensionError on a zero extent.
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix zero(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols);
  }
  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Scalar> diag);
  /// E_{i,j} with 1-based (i, j), as written in the literature.
  static Matrix unit(std::size_t rows, std::size_t cols, std::size_t i,
                     std::size_t j);
  /// The rank normal form: I_r in the top-left corner, zeros elsewhere.
  static Matrix rank_normal_form(std::size_t rows, std::size_t cols,
                                 std::size_t r);
  /// Column vector holding `v`.
  static Matrix column(std::span<const Scalar> v);
  /// Inverse of flatten(): reshapes a row-major coordinate vector.
  static Matrix from_flat(std::size_t rows, std::size_t cols,
                          std::span<const Scalar> v);

  /// Text format "1 0; 0 1/2": rows split by ';', entries by whitespace.
  static Matrix parse(std::string_view text);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Scalar& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  std::span<const Scalar> entries() const noexcept { return entries_; }
  /// Row-major coordinates in the canonical basis E_{i,j}.
  const Vector& flatten() const noexcept { return entries_; }

  bool is_zero() const;
  Matrix transpose() const;
  Scalar trace() const;

  /// Sub-block starting at (row, col) of the given extents (0-based).
  Matrix block(std::size_t row, std::size_t col, std::size_t nrows,
               std::size_t ncols) const;
  void set_block(std::size_t row, std::size_t col, const Matrix& b);

  std::string to_string() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// Exact product; throws DimensionError naming both shapes on mismatch.
Matrix mat_mul(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) {
  return mat_mul(a, b);
}

/// Matrix times coordinate vector.
Vector mat_vec(const Matrix& a, std::span<const Scalar> v);

std::string shape_string(const Matrix& m);
std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace liebracket
