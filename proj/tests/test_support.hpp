#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "liebracket/linalg.hpp"
#include "liebracket/matrix.hpp"

namespace liebracket::testing {

/// Integer entries drawn uniformly from [lo, hi].
inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                            std::size_t cols, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

/// Rational entries p/q with p in [-5, 5], q in [1, 4].
inline Matrix random_rational_matrix(std::mt19937_64& rng, std::size_t rows,
                                     std::size_t cols) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = Scalar(num(rng)) / Scalar(den(rng));
  return m;
}

/// Determinant by cofactor expansion; independent of elimination code.
inline Scalar cofactor_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Scalar det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, jj++) = m(i, j);
      }
    Scalar term = m(0, c) * cofactor_det(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

/// Rank as the largest k with a nonzero k x k minor (brute force).
inline std::size_t minor_rank(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t best = 0;
  for (std::uint32_t rmask = 1; rmask < (1u << rows); ++rmask)
    for (std::uint32_t cmask = 1; cmask < (1u << cols); ++cmask) {
      const auto k = static_cast<std::size_t>(__builtin_popcount(rmask));
      if (k != static_cast<std::size_t>(__builtin_popcount(cmask)) || k <= best)
        continue;
      Matrix sub(k, k);
      for (std::size_t i = 0, si = 0; i < rows; ++i) {
        if (!(rmask >> i & 1u)) continue;
        for (std::size_t j = 0, sj = 0; j < cols; ++j)
          if (cmask >> j & 1u) sub(si, sj++) = m(i, j);
        ++si;
      }
      if (!cofactor_det(sub).is_zero()) best = k;
    }
  return best;
}

inline bool is_rref(const Matrix& m) {
  std::optional<std::size_t> last_pivot;
  bool seen_zero_row = false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::size_t c = 0;
    while (c < m.cols() && m(i, c).is_zero()) ++c;
    if (c == m.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row || (last_pivot && c <= *last_pivot)) return false;
    if (!m(i, c).is_one()) return false;
    for (std::size_t k = 0; k < m.rows(); ++k)
      if (k != i && !m(k, c).is_zero()) return false;
    last_pivot = c;
  }
  return true;
}

}  // namespace liebracket::testing
