#pragma once

#include "pathsum/eps_poly.hpp"
#include "pathsum/rational.hpp"

namespace pathsum::exact {

/// Generalized binomial coefficient: x(x-1)...(x-j+1)/j! for j >= 0, and 0
/// for negative j. Total on rational x; integer x with 0 <= x < j gives 0
/// through the vanishing factor.
Rational binomial(const Rational& x, long j);

/// Same falling-factorial product with a perturbed upper argument.
EpsPoly binomial(const EpsPoly& x, long j);

/// C(n, j) on integers, 0 outside 0 <= j <= n. Counts stay in BigInt.
BigInt int_binomial(long n, long j);

}  // namespace pathsum::exact
