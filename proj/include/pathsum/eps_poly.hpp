#pragma once

#include "pathsum/rational.hpp"

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

namespace pathsum::exact {

/// Dense polynomial in the perturbation symbol eps, with exact rational
/// coefficients. Trailing zero coefficients are trimmed; the zero polynomial
/// has an empty coefficient list.
class EpsPoly {
 public:
  EpsPoly() = default;
  EpsPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) c_.push_back(c);
  }
  EpsPoly(long c) : EpsPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  EpsPoly(const Rational& c0, const Rational& c1) : c_{c0, c1} { trim(); }
  static EpsPoly from_coeffs(std::vector<Rational> coeffs) {
    EpsPoly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  /// Index of the first nonzero coefficient; nullopt for the zero polynomial.
  std::optional<std::size_t> valuation() const;

  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational at_zero() const { return coeff(0); }

  EpsPoly operator-() const;
  EpsPoly& operator+=(const EpsPoly& o);
  EpsPoly& operator-=(const EpsPoly& o);
  friend EpsPoly operator+(EpsPoly a, const EpsPoly& b) { return a += b; }
  friend EpsPoly operator-(EpsPoly a, const EpsPoly& b) { return a -= b; }
  friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b);
  EpsPoly& operator*=(const EpsPoly& o) { return *this = *this * o; }

  EpsPoly scaled(const Rational& s) const;

  friend bool operator==(const EpsPoly& a, const EpsPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Marker for a limit that diverges (denominator vanishes faster than the
/// numerator).
struct Pole {
  friend bool operator==(const Pole&, const Pole&) { return true; }
};

using LimitValue = std::variant<Rational, Pole>;

inline bool is_pole(const LimitValue& v) { return std::holds_alternative<Pole>(v); }
inline const Rational& as_rational(const LimitValue& v) { return std::get<Rational>(v); }
inline bool limits_equal(const LimitValue& a, const LimitValue& b) {
  if (is_pole(a) || is_pole(b)) return is_pole(a) && is_pole(b);
  return as_rational(a) == as_rational(b);
}

/// lim_{eps->0} num(eps)/den(eps), decided by comparing eps-valuations.
/// An identically zero denominator is a malformed expression.
LimitValue eps_limit(const EpsPoly& num, const EpsPoly& den);

}  // namespace pathsum::exact
