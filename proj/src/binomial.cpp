#include "pathsum/binomial.hpp"

namespace pathsum::exact {

Rational binomial(const Rational& x, long j) {
  if (j < 0) return 0;
  if (j == 0) return 1;
  if (x.is_integer()) {
    BigInt xi = x.as_integer();
    if (xi >= 0 && xi < j) return 0;
    BigInt num = 1;
    for (long i = 0; i < j; ++i) num *= xi - i;
    // A product of j consecutive integers is divisible by j!.
    return Rational(num / factorial(j));
  }
  Rational num = 1;
  for (long i = 0; i < j; ++i) num *= x - Rational(i);
  return num / Rational(factorial(j));
}

EpsPoly binomial(const EpsPoly& x, long j) {
  if (j < 0) return {};
  EpsPoly num = Rational(1);
  for (long i = 0; i < j; ++i) num *= x - EpsPoly(Rational(i));
  return num.scaled(Rational(BigInt(1), factorial(j)));
}

BigInt int_binomial(long n, long j) {
  if (j < 0 || j > n || n < 0) return 0;
  if (j > n - j) j = n - j;
  BigInt acc = 1;
  for (long i = 0; i < j; ++i) {
    acc *= n - i;
    acc /= i + 1;  // exact at every step
  }
  return acc;
}

}  // namespace pathsum::exact
