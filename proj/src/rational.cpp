#include "pathsum/rational.hpp"

#include <cctype>

namespace pathsum::exact {

namespace {

bool valid_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer_token(text)) throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    return Rational(BigInt(std::string(text)));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den))
    throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  return Rational(BigInt(std::string(num)), BigInt(std::string(den)));
}

long Rational::as_long() const {
  BigInt v = as_integer();
  return static_cast<long>(v);
}

std::string Rational::str() const {
  std::string out = numerator().str();
  if (!is_integer()) {
    out += '/';
    out += denominator().str();
  }
  return out;
}

Rational abs(const Rational& v) { return v.is_negative() ? -v : v; }

Rational pow(const Rational& base, long exp) {
  if (exp == 0) return 1;
  if (base.is_zero()) {
    if (exp < 0) throw std::domain_error("pow: zero base with negative exponent");
    return 0;
  }
  bool invert = exp < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-(exp + 1)) + 1 : static_cast<unsigned long>(exp);
  Rational acc = 1;
  Rational b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return invert ? Rational(1) / acc : acc;
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt acc = 1;
  for (long i = 2; i <= n; ++i) acc *= i;
  return acc;
}

}  // namespace pathsum::exact
