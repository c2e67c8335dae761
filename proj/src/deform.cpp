#include "liebracket/deform.hpp"

#include <vector>

#include "liebracket/errors.hpp"

namespace liebracket {

LaurentScalar::LaurentScalar(Scalar c, int exponent) {
  if (!c.is_zero()) terms_.emplace(exponent, std::move(c));
}

std::optional<int> LaurentScalar::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

Scalar LaurentScalar::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Scalar() : it->second;
}

Scalar LaurentScalar::evaluate(const Scalar& value) const {
  Scalar out;
  for (const auto& [e, c] : terms_) {
    Scalar power(1);
    const Scalar base = e < 0 ? Scalar(1) / value : value;
    for (int k = 0; k < (e < 0 ? -e : e); ++k) power *= base;
    out += c * power;
  }
  return out;
}

std::string LaurentScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (e != 0) out += "*eps^" + std::to_string(e);
  }
  return out;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
  for (const auto& [e, c] : o.terms_) {
    Scalar& slot = terms_[e];
    slot += c;
    if (slot.is_zero()) terms_.erase(e);
  }
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) { return *this += -o; }

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
  LaurentScalar out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out += LaurentScalar(ca * cb, ea + eb);
  return out;
}

EpsStructureConstants::EpsStructureConstants(std::size_t dim) : dim_(dim) {}

void EpsStructureConstants::set(std::size_t i, std::size_t j, LaurentVector terms) {
  if (i >= dim_ || j >= dim_) throw DimensionError("basis index out of range");
  if (i == j) throw Error("[x_i, x_i] is always zero");
  if (i > j) {
    for (auto& [k, c] : terms) c = -c;
    std::swap(i, j);
  }
  std::erase_if(terms, [](const auto& kv) { return kv.second.is_zero(); });
  if (terms.empty())
    table_.erase({i, j});
  else
    table_[{i, j}] = std::move(terms);
}

LaurentVector EpsStructureConstants::get(std::size_t i, std::size_t j) const {
  if (i == j) return {};
  const bool flip = i > j;
  auto it = table_.find(flip ? std::pair{j, i} : std::pair{i, j});
  if (it == table_.end()) return {};
  LaurentVector out = it->second;
  if (flip)
    for (auto& [k, c] : out) c = -c;
  return out;
}

StructureConstants EpsStructureConstants::evaluate(const Scalar& eps) const {
  StructureConstants sc(dim_);
  for (const auto& [key, terms] : table_) {
    SparseVector v;
    for (const auto& [k, c] : terms) v[k] = c.evaluate(eps);
    sc.set(key.first, key.second, v);
  }
  return sc;
}

EpsStructureConstants contraction_constants(std::size_t n, std::size_t r) {
  if (n == 0 || r > n)
    throw HypothesisError("contraction needs 0 <= r <= n, n >= 1; got n = " +
                          std::to_string(n) + ", r = " + std::to_string(r));
  const std::size_t d = n * n;
  // Exponent of eps in s(i, j).
  std::vector<int> e(d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      e[i * n + j] = static_cast<int>(i >= r) + static_cast<int>(j >= r);

  const StructureConstants gl = structure_constants(BracketParam(Matrix::identity(n)));
  EpsStructureConstants out(d);
  for (const auto& [key, terms] : gl.table()) {
    const auto [a, b] = key;
    LaurentVector v;
    for (const auto& [k, c] : terms) v[k] = LaurentScalar(c, e[a] + e[b] - e[k]);
    out.set(a, b, std::move(v));
  }
  return out;
}

StructureConstants contraction_limit(const EpsStructureConstants& c) {
  StructureConstants out(c.dim());
  for (const auto& [key, terms] : c.table()) {
    SparseVector v;
    for (const auto& [k, coef] : terms) {
      const int low = *coef.min_exponent();
      if (low < 0) throw ContractionDivergenceError(key.first, key.second, k, low);
      v[k] = coef.coefficient(0);
    }
    out.set(key.first, key.second, v);
  }
  return out;
}

Matrix DeformationPath::j_t() const {
  return (Scalar(1) - t) * Matrix::identity(n) + t * j;
}

BracketParam deformation_bracket(std::size_t n, const Matrix& j, const Scalar& t) {
  if (j.rows() != n || j.cols() != n)
    throw DimensionError("deformation needs a " + std::to_string(n) + "x" +
                         std::to_string(n) + " parameter, got " + shape_string(j));
  return DeformationPath{n, j, t}.param();
}

namespace {

Matrix psi_diagonal(std::size_t n, const Scalar& t, std::size_t r) {
  if (r > n) throw HypothesisError("psi_t needs r <= n");
  std::vector<Scalar> d(n, Scalar(1));
  for (std::size_t k = r; k < n; ++k) d[k] = Scalar(1) - t;
  return Matrix::diagonal(d);
}

}  // namespace

Matrix psi_t(const Matrix& x, const Scalar& t, std::size_t r) {
  if (!x.is_square()) throw DimensionError("psi_t needs a square matrix, got " + shape_string(x));
  return x * psi_diagonal(x.rows(), t, r);
}

Matrix psi_t_inverse(const Matrix& x, const Scalar& t, std::size_t r) {
  if (!x.is_square()) throw DimensionError("psi_t needs a square matrix, got " + shape_string(x));
  return x * inverse(psi_diagonal(x.rows(), t, r));
}

Matrix alpha_coboundary(const Matrix& x, const Matrix& j) {
  if (!x.is_square() || x.rows() != j.rows() || x.cols() != j.cols())
    throw DimensionError("alpha needs square matrices of one size, got " + shape_string(x) +
                         " and " + shape_string(j));
  return (Scalar(1) / Scalar(2)) * (x * j + j * x);
}

CoboundaryResult ce_coboundary_check(const Matrix& j, std::size_t n) {
  if (j.rows() != n || j.cols() != n)
    throw DimensionError("coboundary check needs a " + std::to_string(n) + "x" +
                         std::to_string(n) + " parameter, got " + shape_string(j));
  auto comm = [](const Matrix& a, const Matrix& b) { return a * b - b * a; };
  const BracketParam param(j);
  CoboundaryResult result;
  const std::size_t d = n * n;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b) {
      const Matrix A = Matrix::unit(n, n, a / n + 1, a % n + 1);
      const Matrix B = Matrix::unit(n, n, b / n + 1, b % n + 1);
      Matrix lhs = comm(A, alpha_coboundary(B, j)) - comm(B, alpha_coboundary(A, j)) -
                   alpha_coboundary(comm(A, B), j);
      Matrix rhs = bracket(A, B, param);
      ++result.pairs_checked;
      if (lhs != rhs) {
        result.counterexample = CoboundaryCounterexample{a, b, std::move(lhs), std::move(rhs)};
        return result;
      }
    }
  return result;
}

}  // namespace liebracket
