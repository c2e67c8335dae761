#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace liebracket {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : value_(value) {}  // NOLINT: integers convert implicitly
  Scalar(int value) : value_(value) {}   // NOLINT
  Scalar(const mpz_class& numerator, const mpz_class& denominator);

  /// Parses "p/q", "p" or "-p/q" (whitespace around the token is allowed).
  static Scalar parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  Scalar& operator+=(const Scalar& o) {
    value_ += o.value_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    value_ -= o.value_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    value_ *= o.value_;
    return *this;
  }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const {
    Scalar r;
    r.value_ = -value_;
    return r;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace liebracket
