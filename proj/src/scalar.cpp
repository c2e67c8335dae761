#include "liebracket/scalar.hpp"

#include <cctype>
#include <ostream>

#include "liebracket/errors.hpp"

namespace liebracket {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Scalar::Scalar(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw Error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_token(s))
      throw ParseError("not a rational number: '" + std::string(text) + "'");
    Scalar r;
    r.value_ = mpq_class(parse_integer(s));
    return r;
  }
  std::string_view num = s.substr(0, slash);
  std::string_view den = s.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) || den.front() == '-' ||
      den.front() == '+')
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  mpz_class d = parse_integer(den);
  if (d == 0)
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Scalar(parse_integer(num), d);
}

std::string Scalar::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace liebracket
