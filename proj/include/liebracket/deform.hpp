#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "liebracket/bracket.hpp"
#include "liebracket/lie_algebra.hpp"

namespace liebracket {

/// Finite Laurent polynomial in a formal parameter eps, exponent -> coefficient.
/// Zero coefficients are never stored.
class LaurentScalar {
 public:
  LaurentScalar() = default;
  LaurentScalar(Scalar c, int exponent = 0);

  static LaurentScalar monomial(Scalar c, int exponent) { return {std::move(c), exponent}; }

  const std::map<int, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Smallest exponent; nullopt for zero.
  std::optional<int> min_exponent() const;
  Scalar coefficient(int exponent) const;
  /// Substitutes eps = value; value must be nonzero when negative powers occur.
  Scalar evaluate(const Scalar& value) const;
  std::string to_string() const;

  LaurentScalar& operator+=(const LaurentScalar& o);
  LaurentScalar& operator-=(const LaurentScalar& o);
  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
  LaurentScalar operator-() const;
  friend bool operator==(const LaurentScalar&, const LaurentScalar&) = default;

 private:
  std::map<int, Scalar> terms_;
};

using LaurentVector = std::map<std::size_t, LaurentScalar>;

/// Structure constants with Laurent coefficients, stored for i < j only.
class EpsStructureConstants {
 public:
  explicit EpsStructureConstants(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  void set(std::size_t i, std::size_t j, LaurentVector terms);
  LaurentVector get(std::size_t i, std::size_t j) const;
  const std::map<std::pair<std::size_t, std::size_t>, LaurentVector>& table() const noexcept {
    return table_;
  }
  StructureConstants evaluate(const Scalar& eps) const;

 private:
  std::size_t dim_;
  std::map<std::pair<std::size_t, std::size_t>, LaurentVector> table_;
};

/// Commutator constants of gl(n) in the basis E'_{i,j} = s(i,j) E_{i,j}, where
/// s is 1 on the top-left r x r block, eps on the off-diagonal blocks and
/// eps^2 on the bottom-right block.
EpsStructureConstants contraction_constants(std::size_t n, std::size_t r);

/// The eps^0 part; throws ContractionDivergenceError on a negative exponent.
StructureConstants contraction_limit(const EpsStructureConstants& c);

struct DeformationPath {
  std::size_t n;
  Matrix j;
  Scalar t;

  /// J_t = (1 - t) I + t j.
  Matrix j_t() const;
  BracketParam param() const { return BracketParam(j_t()); }
};

BracketParam deformation_bracket(std::size_t n, const Matrix& j, const Scalar& t);

/// x * diag(I_r, (1 - t) I_{n-r}).
Matrix psi_t(const Matrix& x, const Scalar& t, std::size_t r);
/// Inverse of psi_t; throws SingularMatrixError at t = 1 when r < n.
Matrix psi_t_inverse(const Matrix& x, const Scalar& t, std::size_t r);

/// (x j + j x) / 2.
Matrix alpha_coboundary(const Matrix& x, const Matrix& j);

struct CoboundaryCounterexample {
  std::size_t a, b;
  Matrix lhs;  // [A, alpha(B)] - [B, alpha(A)] - alpha([A, B])
  Matrix rhs;  // [A, B]_j
};

struct CoboundaryResult {
  std::size_t pairs_checked = 0;
  std::optional<CoboundaryCounterexample> counterexample;
  bool pass() const noexcept { return !counterexample; }
};

/// Exhaustive over canonical basis pairs a < b of Mat(n).
CoboundaryResult ce_coboundary_check(const Matrix& j, std::size_t n);

}  // namespace liebracket
