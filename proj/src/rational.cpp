#include "majcl/rational.hpp"

#include <cctype>

#include "majcl/error.hpp"

namespace majcl {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::OutOfUnitInterval, "zero denominator");
  }
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
  }
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace majcl
