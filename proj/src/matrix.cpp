#include "liebracket/matrix.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "liebracket/errors.hpp"

namespace liebracket {

namespace {

void require_extent(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0)
    throw DimensionError("matrix extents must be positive, got " +
                         std::to_string(rows) + "x" + std::to_string(cols));
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(op) + ": shape mismatch " +
                         shape_string(a) + " vs " + shape_string(b));
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {
  require_extent(rows, cols);
  entries_.resize(rows * cols);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  require_extent(rows_, cols_);
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require_extent(rows, cols);
  if (entries_.size() != rows * cols)
    throw DimensionError("entry count " + std::to_string(entries_.size()) +
                         " does not match shape " + std::to_string(rows) +
                         "x" + std::to_string(cols));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::unit(std::size_t rows, std::size_t cols, std::size_t i,
                    std::size_t j) {
  if (i < 1 || i > rows || j < 1 || j > cols)
    throw DimensionError("E_{" + std::to_string(i) + "," + std::to_string(j) +
                         "} outside " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  Matrix m(rows, cols);
  m(i - 1, j - 1) = 1;
  return m;
}

Matrix Matrix::rank_normal_form(std::size_t rows, std::size_t cols,
                                std::size_t r) {
  if (r > std::min(rows, cols))
    throw DimensionError("normal form rank " + std::to_string(r) +
                         " exceeds min(" + std::to_string(rows) + ", " +
                         std::to_string(cols) + ")");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < r; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column(std::span<const Scalar> v) {
  return Matrix(v.size(), 1, Vector(v.begin(), v.end()));
}

Matrix Matrix::from_flat(std::size_t rows, std::size_t cols,
                         std::span<const Scalar> v) {
  return Matrix(rows, cols, Vector(v.begin(), v.end()));
}

Matrix Matrix::parse(std::string_view text) {
  std::vector<std::vector<Scalar>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row_text = text.substr(start, end - start);
    std::vector<Scalar> row;
    std::size_t i = 0;
    while (i < row_text.size()) {
      while (i < row_text.size() &&
             std::isspace(static_cast<unsigned char>(row_text[i])))
        ++i;
      std::size_t j = i;
      while (j < row_text.size() &&
             !std::isspace(static_cast<unsigned char>(row_text[j])))
        ++j;
      if (j > i) row.push_back(Scalar::parse(row_text.substr(i, j - i)));
      i = j;
    }
    if (row.empty())
      throw ParseError("empty row in matrix text '" + std::string(text) + "'");
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("ragged rows in matrix text '" + std::string(text) +
                       "'");
    rows.push_back(std::move(row));
    start = end + 1;
  }
  Vector entries;
  for (auto& r : rows) entries.insert(entries.end(), r.begin(), r.end());
  return Matrix(rows.size(), rows.front().size(), std::move(entries));
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Scalar Matrix::trace() const {
  if (!is_square())
    throw DimensionError("trace of non-square " + shape_string(*this));
  Scalar t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::block(std::size_t row, std::size_t col, std::size_t nrows,
                     std::size_t ncols) const {
  if (row + nrows > rows_ || col + ncols > cols_)
    throw DimensionError("block out of range of " + shape_string(*this));
  Matrix b(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(row + i, col + j);
  return b;
}

void Matrix::set_block(std::size_t row, std::size_t col, const Matrix& b) {
  if (row + b.rows() > rows_ || col + b.cols() > cols_)
    throw DimensionError("block " + shape_string(b) + " does not fit in " +
                         shape_string(*this));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(row + i, col + j) = b(i, j);
}

std::string Matrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ' ';
      out += (*this)(i, j).to_string();
    }
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_same_shape(*this, o, "add");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_same_shape(*this, o, "subtract");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw DimensionError("mat_mul: cannot multiply " + shape_string(a) +
                         " by " + shape_string(b));
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vector mat_vec(const Matrix& a, std::span<const Scalar> v) {
  if (a.cols() != v.size())
    throw DimensionError("apply: " + shape_string(a) +
                         " matrix on vector of length " +
                         std::to_string(v.size()));
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

std::string shape_string(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  return os << "[" << m.to_string() << "]";
}

}  // namespace liebracket
