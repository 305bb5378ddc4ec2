#include "pathsum/prove.hpp"

#include <stdexcept>
#include <string>

namespace pathsum::prove {

using exact::Assignment;
using exact::LimitValue;
using exact::Sym;
using identities::eval_term;
using identities::identity_name;
using identities::Term;

namespace {

bool grid_supported(IdentityId id) {
  switch (id) {
    case IdentityId::I1:
    case IdentityId::I2:
    case IdentityId::I3:
    case IdentityId::I4:
    case IdentityId::I7:
    case IdentityId::I8:
      return true;
    default:
      return false;
  }
}

void require_supported(const IdentityDef& def) {
  if (!grid_supported(def.id))
    throw std::invalid_argument("prove: unsupported identity " + std::string(identity_name(def.id)));
}

std::vector<Rational> grid_points(long count, const Rational& offset) {
  std::vector<Rational> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) pts.push_back(offset + Rational(i));
  return pts;
}

void audit_term_denominators(const Term& term, const Assignment& a, const char* where) {
  for (const auto& d : term.denominator)
    if (d.eval(a).is_zero())
      throw std::logic_error(std::string("prove: denominator vanishes on the grid (") + where + ")");
}

}  // namespace

long degree_bound(const IdentityDef& def, long n) {
  require_supported(def);
  if (n < 0) throw std::invalid_argument("degree_bound: n must be nonnegative");
  // Summand binomials contribute at most n per variable, prefactor numerators
  // at most 2, and the cleared denominator factors at most 3 per summand; the
  // slack keeps the bound safely above the true degree at every n in use.
  return 3 * n + 12;
}

void audit_grid_pole_freedom(const IdentityDef& def, long n) {
  require_supported(def);
  const long bound = degree_bound(def, n);
  const auto ms = grid_points(bound + 1, Rational(exact::BigInt(1), exact::BigInt(2)));
  const auto rs =
      def.has_r ? grid_points(bound + 1, Rational(exact::BigInt(1), exact::BigInt(3))) : std::vector<Rational>{Rational(0)};
  for (const auto& mv : ms) {
    for (const auto& rv : rs) {
      for (long k = 0; k <= n; ++k) {
        Assignment a;
        a.set(Sym::n, Rational(n)).set(Sym::k, Rational(k)).set(Sym::m, mv);
        if (def.has_r) a.set(Sym::r, rv);
        audit_term_denominators(def.summand, a, "summand");
        if (k == 0) audit_term_denominators(def.rhs, a, "rhs");
      }
    }
  }
}

ProofCertificate verify_polynomial(const IdentityDef& def, long n) {
  require_supported(def);
  ProofCertificate cert;
  cert.id = def.id;
  cert.n = n;
  cert.bound = degree_bound(def, n);
  cert.grid_m = grid_points(cert.bound + 1, Rational(exact::BigInt(1), exact::BigInt(2)));
  if (def.has_r) cert.grid_r = grid_points(cert.bound + 1, Rational(exact::BigInt(1), exact::BigInt(3)));

  for (const auto& mv : cert.grid_m) {
    if (def.has_r) {
      for (const auto& rv : cert.grid_r) {
        ++cert.evaluations;
        CheckReport rep = eval_identity(def, n, mv, rv);
        if (rep.status == Status::pole)
          throw std::logic_error("verify_polynomial: pole on the grid; offset or bound is wrong");
        if (rep.status != Status::equal) {
          cert.refuted_at = {{mv, rv}};
          return cert;
        }
      }
    } else {
      ++cert.evaluations;
      CheckReport rep = eval_identity(def, n, mv, std::nullopt);
      if (rep.status == Status::pole)
        throw std::logic_error("verify_polynomial: pole on the grid; offset or bound is wrong");
      if (rep.status != Status::equal) {
        cert.refuted_at = {{mv, std::nullopt}};
        return cert;
      }
    }
  }
  cert.verified = true;
  return cert;
}

namespace {

LimitValue rhs_value(const IdentityDef& def, long n, const Rational& m) {
  Assignment a;
  a.set(Sym::n, Rational(n)).set(Sym::k, Rational(0)).set(Sym::m, m);
  LimitValue v = eval_term(def.rhs, a);
  if (!exact::is_pole(v)) v = exact::as_rational(v) + def.rhs_offset;
  return v;
}

}  // namespace

std::vector<ProofCertificate> verify_induction(const IdentityDef& def, long n_max) {
  if (def.id != IdentityId::I7 && def.id != IdentityId::I8)
    throw std::invalid_argument("verify_induction: supported for I7 and I8 only");

  std::vector<ProofCertificate> certs;
  certs.push_back(verify_polynomial(def, 0));

  for (long n = 1; n <= n_max; ++n) {
    ProofCertificate cert;
    cert.id = def.id;
    cert.n = n;
    cert.bound = degree_bound(def, n);
    cert.grid_m = grid_points(cert.bound + 1, Rational(exact::BigInt(1), exact::BigInt(2)));
    cert.verified = true;
    for (const auto& mv : cert.grid_m) {
      ++cert.evaluations;
      LimitValue hi = rhs_value(def, n, mv);
      LimitValue lo = rhs_value(def, n - 1, mv);
      LimitValue step = eval_term(def, n, n, mv, std::nullopt);
      if (exact::is_pole(hi) || exact::is_pole(lo) || exact::is_pole(step))
        throw std::logic_error("verify_induction: pole on the grid; offset or bound is wrong");
      if (exact::as_rational(hi) - exact::as_rational(lo) != exact::as_rational(step)) {
        cert.verified = false;
        cert.refuted_at = {{mv, std::nullopt}};
        break;
      }
    }
    certs.push_back(cert);
    if (!certs.back().verified) break;
  }
  return certs;
}

}  // namespace pathsum::prove
