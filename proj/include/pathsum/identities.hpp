#pragma once

#include "pathsum/binomial.hpp"
#include "pathsum/linear_form.hpp"
#include "pathsum/report.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace pathsum::identities {

using exact::Assignment;
using exact::LimitValue;
using exact::LinearForm;
using exact::Rational;
using exact::Sym;

/// coeff * product of linear factors; an empty factor list is the constant.
struct ProductPart {
  Rational coeff = 1;
  std::vector<LinearForm> factors;
};

struct BinomialPart {
  LinearForm upper;
  LinearForm lower;  // integer-valued at integer n, k (and m where it occurs)
};

struct ExponentialPart {
  Rational base;
  LinearForm exponent;
};

/// constant * (sum of products) / (product of linear forms)
///          * product of binomials * product of exponentials
struct Term {
  Rational constant = 1;
  std::vector<ProductPart> numerator;  // empty means 1
  std::vector<LinearForm> denominator;
  std::vector<BinomialPart> binomials;
  std::vector<ExponentialPart> exponentials;
};

enum class IdentityId { I1, I2, I3, I4, I5, I6, I7, I8, I9, I10 };

inline constexpr IdentityId kAllIdentities[] = {
    IdentityId::I1, IdentityId::I2, IdentityId::I3, IdentityId::I4, IdentityId::I5,
    IdentityId::I6, IdentityId::I7, IdentityId::I8, IdentityId::I9, IdentityId::I10,
};

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

struct IdentityDef {
  IdentityId id;
  bool has_m = false;
  bool has_r = false;
  Term summand;          // summed over k = 0..n
  Term rhs;
  Rational rhs_offset;   // additive constant on the right side
  /// Binomial lower indices contain m, so only integer m >= 0 is in scope.
  bool integer_m_only = false;
};

/// The ten identity definitions, built once, structurally immutable.
const std::vector<IdentityDef>& registry();
const IdentityDef& identity(IdentityId id);

/// Evaluates a term at a full assignment. Vanishing denominator factors are
/// resolved by perturbing the m/r symbols they involve and taking the limit
/// of the resulting eps-polynomial ratio; a Pole is returned when the limit
/// diverges or when resolution would need a perturbed symbol inside a
/// binomial lower index (outside this library's scope).
LimitValue eval_term(const Term& term, const Assignment& a);

/// Summand of `def` at summation index k.
LimitValue eval_term(const IdentityDef& def, long k, long n, const std::optional<Rational>& m,
                     const std::optional<Rational>& r);

/// Left side (sum over k) vs right side at one parameter point.
CheckReport eval_identity(const IdentityDef& def, long n, const std::optional<Rational>& m,
                          const std::optional<Rational>& r);

/// Rewrites k to n-k in the summand and interchanges m with r everywhere.
/// Only meaningful for the identities whose two sides carry both m and r.
IdentityDef apply_reversal(const IdentityDef& def);

}  // namespace pathsum::identities
