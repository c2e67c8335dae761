#include "liebracket/bracket.hpp"

#include "liebracket/errors.hpp"

namespace liebracket {

BracketParam::BracketParam(std::size_t n, std::size_t m, Matrix j)
    : n_(n), m_(m), j_(std::move(j)) {
  if (j_.rows() != m_ || j_.cols() != n_)
    throw DimensionError("bracket parameter on Mat(" + std::to_string(n) +
                         "x" + std::to_string(m) + ") must be " +
                         std::to_string(m) + "x" + std::to_string(n) +
                         ", got " + shape_string(j_));
}

BracketParam::BracketParam(Matrix j) : n_(j.cols()), m_(j.rows()), j_(std::move(j)) {
  if (!j_.is_square())
    throw DimensionError("square bracket parameter expected, got " +
                         shape_string(j_));
}

BracketParam BracketParam::normal(std::size_t n, std::size_t m, std::size_t r) {
  return BracketParam(n, m, Matrix::rank_normal_form(m, n, r));
}

Matrix bracket(const Matrix& a, const Matrix& b, const BracketParam& param) {
  for (const Matrix* x : {&a, &b})
    if (x->rows() != param.n() || x->cols() != param.m())
      throw DimensionError("bracket operand " + shape_string(*x) +
                           " does not live in Mat(" + std::to_string(param.n()) +
                           "x" + std::to_string(param.m()) + ")");
  return a * param.j() * b - b * param.j() * a;
}

namespace {

std::optional<Matrix> maybe_block(const Matrix& a, std::size_t row,
                                  std::size_t col, std::size_t nrows,
                                  std::size_t ncols) {
  if (nrows == 0 || ncols == 0) return std::nullopt;
  return a.block(row, col, nrows, ncols);
}

void check_block(const std::optional<Matrix>& blk, std::size_t rows,
                 std::size_t cols, const char* name) {
  const bool expected = rows > 0 && cols > 0;
  if (expected != blk.has_value() ||
      (blk && (blk->rows() != rows || blk->cols() != cols)))
    throw DimensionError(std::string("block ") + name + " must be " +
                         std::to_string(rows) + "x" + std::to_string(cols) +
                         (blk ? ", got " + shape_string(*blk) : ", got none"));
}

void check_blocks(const BlockMatrix& x) {
  if (x.r > x.n || x.r > x.m)
    throw DimensionError("block split r = " + std::to_string(x.r) +
                         " exceeds the matrix shape");
  check_block(x.top_left, x.r, x.r, "top_left");
  check_block(x.bottom_left, x.n - x.r, x.r, "bottom_left");
  check_block(x.top_right, x.r, x.m - x.r, "top_right");
  check_block(x.bottom_right, x.n - x.r, x.m - x.r, "bottom_right");
}

// a1 * b1 - a2 * b2, where an absent factor contributes zero.
std::optional<Matrix> product_difference(const std::optional<Matrix>& a1,
                                         const std::optional<Matrix>& b1,
                                         const std::optional<Matrix>& a2,
                                         const std::optional<Matrix>& b2,
                                         std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) return std::nullopt;
  Matrix out(rows, cols);
  if (a1 && b1) out += *a1 * *b1;
  if (a2 && b2) out -= *a2 * *b2;
  return out;
}

}  // namespace

BlockMatrix BlockMatrix::split(const Matrix& a, std::size_t r) {
  const std::size_t n = a.rows(), m = a.cols();
  if (r > n || r > m)
    throw DimensionError("cannot split " + shape_string(a) + " at r = " +
                         std::to_string(r));
  return {n,
          m,
          r,
          maybe_block(a, 0, 0, r, r),
          maybe_block(a, r, 0, n - r, r),
          maybe_block(a, 0, r, r, m - r),
          maybe_block(a, r, r, n - r, m - r)};
}

Matrix BlockMatrix::assemble() const {
  check_blocks(*this);
  Matrix out(n, m);
  if (top_left) out.set_block(0, 0, *top_left);
  if (bottom_left) out.set_block(r, 0, *bottom_left);
  if (top_right) out.set_block(0, r, *top_right);
  if (bottom_right) out.set_block(r, r, *bottom_right);
  return out;
}

BlockMatrix block_bracket(const BlockMatrix& a, const BlockMatrix& b) {
  check_blocks(a);
  check_blocks(b);
  if (a.n != b.n || a.m != b.m || a.r != b.r)
    throw DimensionError("block_bracket: operands split differently");
  const std::size_t n = a.n, m = a.m, r = a.r;
  BlockMatrix c{n, m, r, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  c.top_left = product_difference(a.top_left, b.top_left, b.top_left,
                                  a.top_left, r, r);
  c.bottom_left = product_difference(a.bottom_left, b.top_left, b.bottom_left,
                                     a.top_left, n - r, r);
  c.top_right = product_difference(a.top_left, b.top_right, b.top_left,
                                   a.top_right, r, m - r);
  c.bottom_right = product_difference(a.bottom_left, b.top_right,
                                      b.bottom_left, a.top_right, n - r, m - r);
  return c;
}

void StructureConstants::set(std::size_t i, std::size_t j,
                             const SparseVector& value) {
  if (i >= dim_ || j >= dim_)
    throw DimensionError("structure constant index out of range");
  if (i == j) {
    for (const auto& [k, c] : value)
      if (!c.is_zero()) throw Error("[x_i, x_i] must vanish");
    return;
  }
  SparseVector clean;
  for (const auto& [k, c] : value) {
    if (k >= dim_) throw DimensionError("structure constant index out of range");
    if (!c.is_zero()) clean.emplace(k, i < j ? c : -c);
  }
  auto key = std::make_pair(std::min(i, j), std::max(i, j));
  if (clean.empty())
    table_.erase(key);
  else
    table_[key] = std::move(clean);
}

SparseVector StructureConstants::get(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_)
    throw DimensionError("structure constant index out of range");
  if (i == j) return {};
  auto it = table_.find({std::min(i, j), std::max(i, j)});
  if (it == table_.end()) return {};
  if (i < j) return it->second;
  SparseVector neg;
  for (const auto& [k, c] : it->second) neg.emplace(k, -c);
  return neg;
}

Vector StructureConstants::bracket(std::span<const Scalar> x,
                                   std::span<const Scalar> y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw DimensionError("bracket of vectors of length " +
                         std::to_string(x.size()) + " and " +
                         std::to_string(y.size()) + " in dimension " +
                         std::to_string(dim_));
  Vector out(dim_);
  for (const auto& [key, terms] : table_) {
    const auto [i, j] = key;
    // x_i y_j - x_j y_i multiplies c_{i,j}.
    Scalar w;
    if (!x[i].is_zero() && !y[j].is_zero()) w += x[i] * y[j];
    if (!x[j].is_zero() && !y[i].is_zero()) w -= x[j] * y[i];
    if (w.is_zero()) continue;
    for (const auto& [k, c] : terms) out[k] += w * c;
  }
  return out;
}

SparseVector to_sparse(std::span<const Scalar> v) {
  SparseVector s;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) s.emplace(k, v[k]);
  return s;
}

Vector to_dense(const SparseVector& v, std::size_t dim) {
  Vector d(dim);
  for (const auto& [k, c] : v) {
    if (k >= dim) throw DimensionError("sparse index out of range");
    d[k] = c;
  }
  return d;
}

StructureConstants structure_constants(const BracketParam& param) {
  const std::size_t n = param.n(), m = param.m(), d = param.dim();
  StructureConstants sc(d);
  std::vector<Matrix> basis;
  basis.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    auto idx = BasisIndex::from_linear(k, m);
    basis.push_back(Matrix::unit(n, m, idx.row, idx.col));
  }
  std::vector<Matrix> left;  // E_a J
  for (const auto& e : basis) left.push_back(e * param.j());
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      Matrix c = left[a] * basis[b] - left[b] * basis[a];
      sc.set(a, b, to_sparse(c.flatten()));
    }
  return sc;
}

}  // namespace liebracket
