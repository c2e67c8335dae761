#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liebracket {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  SingularMatrixError(std::size_t rank, std::size_t size)
      : Error("matrix is singular: rank " + std::to_string(rank) + " < " +
              std::to_string(size)),
        rank_(rank) {}

  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

/// Two parameters of different rank were asked for an isomorphism witness.
class ClassificationError : public Error {
 public:
  ClassificationError(std::size_t rank1, std::size_t rank2)
      : Error("parameters are not equivalent: rank " + std::to_string(rank1) +
              " vs rank " + std::to_string(rank2)),
        rank1_(rank1),
        rank2_(rank2) {}

  std::size_t rank1() const noexcept { return rank1_; }
  std::size_t rank2() const noexcept { return rank2_; }

 private:
  std::size_t rank1_;
  std::size_t rank2_;
};

/// A structure constant has a negative power of the contraction parameter,
/// so the limit does not exist.
class ContractionDivergenceError : public Error {
 public:
  ContractionDivergenceError(std::size_t i, std::size_t j, std::size_t k,
                             int exponent)
      : Error("contraction diverges at (" + std::to_string(i) + ", " +
              std::to_string(j) + ", " + std::to_string(k) +
              "): exponent " + std::to_string(exponent)),
        i_(i),
        j_(j),
        k_(k),
        exponent_(exponent) {}

  std::size_t i() const noexcept { return i_; }
  std::size_t j() const noexcept { return j_; }
  std::size_t k() const noexcept { return k_; }
  int exponent() const noexcept { return exponent_; }

 private:
  std::size_t i_, j_, k_;
  int exponent_;
};

/// Inputs violate the hypotheses of a construction (sizes, ranges).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

}  // namespace liebracket
