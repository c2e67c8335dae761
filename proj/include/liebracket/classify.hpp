#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "liebracket/lie_algebra.hpp"
#include "liebracket/linalg.hpp"

namespace liebracket {

/// J (m x n) = q * J_{m,n,r} * p.
struct NormalForm {
  std::size_t m;
  std::size_t n;
  std::size_t r;
  RankFactorization factorization;
};

NormalForm normal_form(const Matrix& j);

/// Same shape and same rank; throws DimensionError on a shape mismatch.
bool equivalent(const Matrix& j1, const Matrix& j2);

/// The flattened map A -> P A Q on Mat(n x m), with P n x n and Q m x m.
LinearMap sandwich_map(const Matrix& p, const Matrix& q);

/// Witness of ([.,.]_{j1}) ~= ([.,.]_{j2}): j1 = q j2 p and A -> p A q is a
/// Lie algebra isomorphism from the j1-bracket onto the j2-bracket.
struct IsoWitness {
  Matrix p;  // n x n
  Matrix q;  // m x m
  LinearMap map;
};

/// Throws ClassificationError when the ranks differ.
IsoWitness iso_witness_factors(const Matrix& j1, const Matrix& j2);
inline LinearMap iso_witness(const Matrix& j1, const Matrix& j2) {
  return iso_witness_factors(j1, j2).map;
}

/// Random rows x cols matrix of exact rank r, as a product of integer
/// factors with entries in [-3, 3] (redrawn until the rank is hit).
Matrix random_parameter(std::size_t rows, std::size_t cols, std::size_t r,
                        std::mt19937_64& rng);

struct RankFamilyEntry {
  std::size_t r;
  InvariantSignature signature;
  Matrix sample_a;  // two random rank-r parameters (m x n)
  Matrix sample_b;
  bool witness_verified;
};

struct ClassificationReport {
  std::size_t n;
  std::size_t m;
  std::uint64_t seed;
  /// The classification theorems need min(n, m) >= 2.
  bool within_theorem_scope;
  std::vector<RankFamilyEntry> entries;  // r ascending
  bool pairwise_distinct;

  bool all_witnesses_verified() const;
  /// Distinct signatures and verified witnesses; shapes outside the theorem
  /// hypotheses only need verified witnesses.
  bool pass() const;
};

/// Builds gl(n, m, r) for every rank r, compares invariant signatures, and
/// checks an explicit isomorphism between two random rank-r parameters.
ClassificationReport classify_rank_family(std::size_t n, std::size_t m,
                                          std::uint64_t seed = 0);

}  // namespace liebracket
