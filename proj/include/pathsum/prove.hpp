#pragma once

#include "pathsum/identities.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace pathsum::prove {

using exact::Rational;
using identities::IdentityDef;
using identities::IdentityId;

/// Result of a fixed-n grid verification. `verified` required equality at
/// every grid point; otherwise the first failing point is recorded.
struct ProofCertificate {
  IdentityId id;
  long n = 0;
  long bound = 0;                 // per-variable degree bound used
  std::vector<Rational> grid_m;   // evaluation points per free variable
  std::vector<Rational> grid_r;
  std::size_t evaluations = 0;
  bool verified = false;
  std::optional<std::pair<Rational, std::optional<Rational>>> refuted_at;
};

/// Conservative per-variable degree bound for the denominator-cleared
/// difference of the two sides at fixed n.
long degree_bound(const IdentityDef& def, long n);

/// Checks that no denominator factor vanishes anywhere on the evaluation
/// grid; throws std::logic_error with a diagnostic if one does.
void audit_grid_pole_freedom(const IdentityDef& def, long n);

/// Establishes the identity at fixed n as a rational-function identity in
/// its free variables by evaluating on a bound+1 grid per variable.
/// Grid offsets: m runs over 1/2 + i, r over 1/3 + j.
ProofCertificate verify_polynomial(const IdentityDef& def, long n);

/// Base case n=0 via verify_polynomial, then for each n <= n_max the step
/// rhs(n) - rhs(n-1) = summand(k=n) checked on the same kind of grid in m.
std::vector<ProofCertificate> verify_induction(const IdentityDef& def, long n_max);

}  // namespace pathsum::prove
