#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "liebracket/lie_algebra.hpp"

namespace liebracket {

/// The (2n+1)-dimensional Heisenberg algebra realized inside
/// (Mat(n+2), [.,.]_{J_{n+2,n+1}}):
///   X_i = E_{1,i+1}, Y_i = E_{i+1,n+2}, Z = E_{1,n+2}.
struct HeisenbergModel {
  std::size_t n;
  BracketParam ambient;
  std::vector<Matrix> x;
  std::vector<Matrix> y;
  Matrix z;

  /// X_1..X_n, Y_1..Y_n, Z.
  std::vector<Matrix> generators() const;
  std::vector<std::string> labels() const;
  Subspace span() const;
  /// The span as an abstract algebra in the generator basis.
  LieAlgebra algebra() const;
};

/// Builds the realization and verifies every generator bracket against
/// [X_i, Y_j] = delta_ij Z (all others zero); throws HypothesisError for n < 1.
HeisenbergModel heisenberg_realization(std::size_t n);

/// Abstract H_n on the basis X_1..X_n, Y_1..Y_n, Z.
LieAlgebra heisenberg_algebra(std::size_t n);

/// A candidate representation: one square matrix per basis element of src,
/// acting under the ordinary commutator.
class RepCandidate {
 public:
  RepCandidate(LieAlgebra src, std::vector<Matrix> images);

  const LieAlgebra& src() const noexcept { return src_; }
  const std::vector<Matrix>& images() const noexcept { return images_; }
  std::size_t target_dim() const noexcept { return images_.front().rows(); }
  /// Flattened map into gl(target_dim).
  LinearMap as_map() const;

 private:
  LieAlgebra src_;
  std::vector<Matrix> images_;
};

enum class ObstructionVerdict { NotAHom, NotFaithful, Faithful, ScalarZContradiction };

std::string_view to_string(ObstructionVerdict v);

struct ObstructionReport {
  ObstructionVerdict verdict;
  std::size_t n;
  std::size_t target_dim;
  bool z_is_nonzero_scalar;
  Scalar z_trace;
  HomResult hom;
};

/// Classifies a candidate representation of H_n. A nonzero scalar image of Z
/// is reported as a contradiction: Z = [X_1, Y_1] forces rho(Z) to be a
/// commutator, whose trace is zero.
ObstructionReport heisenberg_obstruction(const RepCandidate& cand);

/// S(V1, V2) with dim V1 = r, dim V2 = s on coordinates (X, A, B, C), where
/// X is r x r, A is s x r, B is r x s and C is s x s:
///   [(X,A,B,C), (X',A',B',C')] = ([X,X'], AX'-A'X, XB'-X'B, AB'-A'B),
/// together with phi(X,A,B,C) = (X B; A C) into gl(r+s, r).
struct SemidirectModel {
  std::size_t r;
  std::size_t s;
  LieAlgebra algebra;
  LinearMap phi;

  /// The ideal X = 0, in the algebra's coordinates.
  Subspace nilpotent_part() const;
  LieAlgebra target() const;
};

/// Requires r >= 1.
SemidirectModel semidirect_S(std::size_t r, std::size_t s);

struct AdoEmbedding {
  Subspace image;      // padded images inside Mat(n x m)
  LinearMap map;       // src -> Mat(n x m) coordinates
  HomResult embedded;  // padded map into (Mat(n x m), [.,.]_{J_{m,n,q}})
  bool pass() const noexcept { return embedded.injective_hom(); }
};

/// Pads p x p images with zeros into Mat(n x m) and checks the result is a
/// bracket-preserving injection for J_{m,n,q}. Requires a homomorphic
/// candidate, q >= p and n, m >= q (HypothesisError otherwise).
AdoEmbedding ado_embed(const RepCandidate& cand, std::size_t n, std::size_t m,
                       std::size_t q);

struct BracketClaim {
  std::string left;
  std::string right;
  Matrix left_value;
  Matrix right_value;
  Matrix claimed;
  Matrix computed;
  std::string note;

  bool consistent() const { return claimed == computed; }
};

struct CatalogEntry {
  std::string name;
  std::string description;
  BracketParam param;
  std::vector<std::string> labels;
  std::vector<Matrix> basis;
  LieAlgebra algebra;  // structure constants in `basis`
  std::vector<BracketClaim> claims;

  bool has_discrepancy() const;
};

const std::vector<std::string>& catalog_names();
/// Throws Error listing the valid names on an unknown name.
CatalogEntry example_catalog(std::string_view name);

}  // namespace liebracket
