#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liebracket/bracket.hpp"
#include "liebracket/linalg.hpp"

namespace liebracket {

/// A finite-dimensional Lie algebra given by structure constants over a
/// fixed ordered basis, optionally tagged with the matrix model it came from.
class LieAlgebra {
 public:
  explicit LieAlgebra(StructureConstants constants,
                      std::vector<std::string> labels = {},
                      std::optional<BracketParam> model = std::nullopt);

  /// (Mat(n x m), [.,.]_J) over the canonical basis E_{i,j}.
  static LieAlgebra from_param(const BracketParam& param);
  /// gl(p, K): Mat(p) under the ordinary commutator.
  static LieAlgebra general_linear(std::size_t p);
  /// Constructs and runs jacobi_check; throws Error on a violation.
  static LieAlgebra verified(StructureConstants constants,
                             std::vector<std::string> labels = {});

  std::size_t dim() const noexcept { return constants_.dim(); }
  const StructureConstants& constants() const noexcept { return constants_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::optional<BracketParam>& model() const noexcept { return model_; }

  Vector bracket(std::span<const Scalar> x, std::span<const Scalar> y) const {
    return constants_.bracket(x, y);
  }
  Vector basis_vector(std::size_t k) const;

  /// Shape used for elements in Subspace results: n x m for matrix models,
  /// dim x 1 otherwise. Coordinates are the row-major flattening.
  std::size_t ambient_rows() const;
  std::size_t ambient_cols() const;
  Matrix element(std::span<const Scalar> coords) const;

 private:
  StructureConstants constants_;
  std::vector<std::string> labels_;
  std::optional<BracketParam> model_;
};

/// Linear map between coordinate spaces; matrix is dst_dim x src_dim.
class LinearMap {
 public:
  explicit LinearMap(Matrix matrix) : matrix_(std::move(matrix)) {}
  LinearMap(std::size_t src_dim, std::size_t dst_dim, Matrix matrix);

  static LinearMap identity(std::size_t dim) {
    return LinearMap(Matrix::identity(dim));
  }
  /// Map whose k-th column is the k-th image.
  static LinearMap from_columns(std::span<const Vector> columns);

  std::size_t src_dim() const noexcept { return matrix_.cols(); }
  std::size_t dst_dim() const noexcept { return matrix_.rows(); }
  const Matrix& matrix() const noexcept { return matrix_; }

  Vector operator()(std::span<const Scalar> x) const { return mat_vec(matrix_, x); }
  /// this after other.
  LinearMap after(const LinearMap& other) const;

 private:
  Matrix matrix_;
};

struct JacobiViolation {
  std::size_t a, b, c;
  Vector defect;
};

struct JacobiResult {
  std::optional<JacobiViolation> violation;
  bool pass() const noexcept { return !violation; }
};

/// Cyclic Jacobi sum over all basis triples a < b < c; reports the first
/// nonzero defect.
JacobiResult jacobi_check(const LieAlgebra& L);

Subspace center(const LieAlgebra& L);
/// {z : [z, s] = 0 for every basis element s of S}.
Subspace centralizer(const LieAlgebra& L, const Subspace& S);

/// Terms start with the whole algebra and stop once a term is zero or has
/// the same dimension as its predecessor (that repeated term is included).
std::vector<Subspace> derived_series(const LieAlgebra& L);
std::vector<Subspace> lower_central_series(const LieAlgebra& L);

struct KillingForm {
  Matrix gram;
  std::size_t rank;
};
KillingForm killing_form(const LieAlgebra& L);

/// Matrix of y -> [x, y].
LinearMap adjoint(const LieAlgebra& L, std::span<const Scalar> x);

struct ClosureViolation {
  std::size_t a, b;  // indices into the subspace basis
  Vector bracket;    // [s_a, s_b] in algebra coordinates, outside S
};

struct SubalgebraResult {
  std::optional<ClosureViolation> violation;
  bool pass() const noexcept { return !violation; }
};
SubalgebraResult subalgebra_closed(const LieAlgebra& L, const Subspace& S);

/// Structure constants of a closed subspace in the given basis of S.
/// Throws Error if S is not closed.
LieAlgebra restrict_to(const LieAlgebra& L, const Subspace& S,
                       std::vector<std::string> labels = {});

struct HomViolation {
  std::size_t a, b;
  Vector expected;  // f([x_a, x_b])
  Vector actual;    // [f(x_a), f(x_b)]
};

struct HomResult {
  bool is_hom = false;
  bool injective = false;
  bool surjective = false;
  std::optional<HomViolation> violation;
  bool bijective() const noexcept { return injective && surjective; }
  bool injective_hom() const noexcept { return is_hom && injective; }
};
HomResult hom_check(const LinearMap& f, const LieAlgebra& src,
                    const LieAlgebra& dst);

struct InvariantSignature {
  std::size_t dim = 0;
  std::size_t center_dim = 0;
  std::vector<std::size_t> derived_dims;
  std::vector<std::size_t> lcs_dims;
  std::size_t killing_rank = 0;
  std::size_t derived_center_dim = 0;

  friend bool operator==(const InvariantSignature&,
                         const InvariantSignature&) = default;
};
InvariantSignature invariant_signature(const LieAlgebra& L);

/// Structure constants transported along a bijective linear map:
/// [y_a, y_b] := f [f^{-1} y_a, f^{-1} y_b] on the image basis.
LieAlgebra transport(const LieAlgebra& L, const LinearMap& f);

}  // namespace liebracket
