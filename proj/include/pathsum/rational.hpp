#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pathsum::exact {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(BigInt v) : v_(std::move(v)) {}
  Rational(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    v_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
  }

  /// Parses "p" or "p/q" with optional leading minus.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_ == 0; }
  bool is_negative() const { return v_ < 0; }
  bool is_integer() const { return denominator() == 1; }
  /// Integral value; throws unless denominator is 1.
  BigInt as_integer() const {
    if (!is_integer()) throw std::domain_error("Rational: not an integer: " + str());
    return numerator();
  }
  long as_long() const;

  std::string str() const;

  Rational operator-() const {
    Rational out;
    out.v_ = -v_;
    return out;
  }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  boost::multiprecision::cpp_rational v_;
};

Rational abs(const Rational& v);

/// base^exp for integer exp; 0^negative is a domain error.
Rational pow(const Rational& base, long exp);

BigInt factorial(long n);

}  // namespace pathsum::exact
