#include "liebracket/classify.hpp"

#include <algorithm>

#include "liebracket/errors.hpp"

namespace liebracket {

NormalForm normal_form(const Matrix& j) {
  RankFactorization f = rank_factorization(j);
  const std::size_t r = f.rank;
  return {j.rows(), j.cols(), r, std::move(f)};
}

bool equivalent(const Matrix& j1, const Matrix& j2) {
  if (j1.rows() != j2.rows() || j1.cols() != j2.cols())
    throw DimensionError("equivalence needs equal shapes, got " +
                         shape_string(j1) + " and " + shape_string(j2));
  return rank(j1) == rank(j2);
}

LinearMap sandwich_map(const Matrix& p, const Matrix& q) {
  if (!p.is_square() || !q.is_square())
    throw DimensionError("sandwich_map needs square factors");
  const std::size_t n = p.rows(), m = q.rows();
  // (P E_{ij} Q)_{ab} = P_{ai} Q_{jb}
  Matrix map(n * m, n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t col = i * m + j;
      for (std::size_t a = 0; a < n; ++a) {
        if (p(a, i).is_zero()) continue;
        for (std::size_t b = 0; b < m; ++b)
          if (!q(j, b).is_zero()) map(a * m + b, col) = p(a, i) * q(j, b);
      }
    }
  return LinearMap(std::move(map));
}

IsoWitness iso_witness_factors(const Matrix& j1, const Matrix& j2) {
  if (j1.rows() != j2.rows() || j1.cols() != j2.cols())
    throw DimensionError("iso_witness needs equal shapes, got " +
                         shape_string(j1) + " and " + shape_string(j2));
  NormalForm f1 = normal_form(j1);
  NormalForm f2 = normal_form(j2);
  if (f1.r != f2.r) throw ClassificationError(f1.r, f2.r);
  // j1 = Q1 J P1, j2 = Q2 J P2  =>  j1 = (Q1 Q2^-1) j2 (P2^-1 P1).
  Matrix q = f1.factorization.q * inverse(f2.factorization.q);
  Matrix p = inverse(f2.factorization.p) * f1.factorization.p;
  LinearMap map = sandwich_map(p, q);
  return {std::move(p), std::move(q), std::move(map)};
}

Matrix random_parameter(std::size_t rows, std::size_t cols, std::size_t r,
                        std::mt19937_64& rng) {
  if (r > std::min(rows, cols))
    throw HypothesisError("rank " + std::to_string(r) + " impossible for " +
                          std::to_string(rows) + "x" + std::to_string(cols));
  if (r == 0) return Matrix(rows, cols);
  std::uniform_int_distribution<int> dist(-3, 3);
  auto draw = [&](std::size_t a, std::size_t b) {
    Matrix x(a, b);
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j) x(i, j) = dist(rng);
    return x;
  };
  for (;;) {
    Matrix left = draw(rows, r);
    Matrix right = draw(r, cols);
    Matrix j = left * right;
    if (rank(j) == r) return j;
  }
}

bool ClassificationReport::all_witnesses_verified() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const RankFamilyEntry& e) { return e.witness_verified; });
}

bool ClassificationReport::pass() const {
  if (!all_witnesses_verified()) return false;
  return within_theorem_scope ? pairwise_distinct : true;
}

ClassificationReport classify_rank_family(std::size_t n, std::size_t m,
                                          std::uint64_t seed) {
  if (n == 0 || m == 0)
    throw HypothesisError("classify_rank_family needs n, m >= 1");
  ClassificationReport report{n, m, seed, std::min(n, m) >= 2, {}, true};
  std::mt19937_64 rng(seed);
  for (std::size_t r = 0; r <= std::min(n, m); ++r) {
    const BracketParam normal = BracketParam::normal(n, m, r);
    InvariantSignature sig = invariant_signature(LieAlgebra::from_param(normal));
    Matrix a = random_parameter(m, n, r, rng);
    Matrix b = random_parameter(m, n, r, rng);
    IsoWitness w = iso_witness_factors(a, b);
    HomResult h = hom_check(w.map, LieAlgebra::from_param(BracketParam(n, m, a)),
                            LieAlgebra::from_param(BracketParam(n, m, b)));
    report.entries.push_back(
        {r, std::move(sig), std::move(a), std::move(b), h.is_hom && h.bijective()});
  }
  for (std::size_t i = 0; i < report.entries.size(); ++i)
    for (std::size_t k = i + 1; k < report.entries.size(); ++k)
      if (report.entries[i].signature == report.entries[k].signature)
        report.pairwise_distinct = false;
  return report;
}

}  // namespace liebracket
