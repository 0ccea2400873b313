#include "kmoduli/rational.hpp"

#include <cctype>

namespace kmoduli {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!valid_integer_token(text))
      throw std::invalid_argument("malformed rational: '" + text + "'");
    return Rational(Integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den))
    throw std::invalid_argument("malformed rational: '" + text + "'");
  const Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  Rational r(Integer(num), d);
  // GMP's mpq contract requires canonical form; the raw ctor does not canonicalize.
  mpq_canonicalize(r.backend().data());
  return r;
}

std::string rational_str(const Rational& value) { return value.str(); }

int sign(const Rational& value) {
  if (value > 0) return 1;
  if (value < 0) return -1;
  return 0;
}

}  // namespace kmoduli
