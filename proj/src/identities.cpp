#include "pathsum/identities.hpp"

#include <stdexcept>
#include <string>

namespace pathsum::identities {

using exact::contains;
using exact::EpsPoly;
using exact::eps_limit;
using exact::Pole;
using exact::pow;
using exact::Sym;
using exact::SymSet;

std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::I1: return "I1";
    case IdentityId::I2: return "I2";
    case IdentityId::I3: return "I3";
    case IdentityId::I4: return "I4";
    case IdentityId::I5: return "I5";
    case IdentityId::I6: return "I6";
    case IdentityId::I7: return "I7";
    case IdentityId::I8: return "I8";
    case IdentityId::I9: return "I9";
    case IdentityId::I10: return "I10";
  }
  return "?";
}

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (IdentityId id : kAllIdentities)
    if (identity_name(id) == name) return id;
  return std::nullopt;
}

namespace {

std::vector<IdentityDef> build_registry() {
  const LinearForm n_ = LinearForm::var(Sym::n);
  const LinearForm m_ = LinearForm::var(Sym::m);
  const LinearForm r_ = LinearForm::var(Sym::r);
  const LinearForm k_ = LinearForm::var(Sym::k);

  std::vector<IdentityDef> defs;

  defs.push_back({
      .id = IdentityId::I1,
      .has_m = true,
      .has_r = true,
      .summand = {.binomials = {{m_ + k_, k_}, {n_ + r_ - k_, n_ - k_}}},
      .rhs = {.binomials = {{n_ + m_ + r_ + 1, n_}}},
  });

  defs.push_back({
      .id = IdentityId::I2,
      .has_m = true,
      .has_r = true,
      .summand = {.numerator = {{1, {m_ + 1}}},
                  .denominator = {m_ + k_ + 1},
                  .binomials = {{m_ + 2 * k_, k_}, {2 * n_ + r_ - 2 * k_, n_ - k_}}},
      .rhs = {.binomials = {{2 * n_ + m_ + r_ + 1, n_}}},
  });

  defs.push_back({
      .id = IdentityId::I3,
      .has_m = true,
      .has_r = true,
      .summand = {.numerator = {{1, {r_ + 1}}},
                  .denominator = {n_ + r_ - k_ + 1},
                  .binomials = {{m_ + 2 * k_, k_}, {2 * n_ + r_ - 2 * k_, n_ - k_}}},
      .rhs = {.binomials = {{2 * n_ + m_ + r_ + 1, n_}}},
  });

  defs.push_back({
      .id = IdentityId::I4,
      .has_m = true,
      .has_r = true,
      .summand = {.numerator = {{1, {m_ + 1, r_ + 1}}},
                  .denominator = {m_ + k_ + 1, n_ + r_ - k_ + 1},
                  .binomials = {{m_ + 2 * k_, k_}, {2 * n_ + r_ - 2 * k_, n_ - k_}}},
      .rhs = {.numerator = {{1, {m_ + r_ + 2}}},
              .denominator = {n_ + m_ + r_ + 2},
              .binomials = {{2 * n_ + m_ + r_ + 1, n_}}},
  });

  defs.push_back({
      .id = IdentityId::I5,
      .has_m = true,
      .summand = {.numerator = {{1, {2 * k_ + 1, 2 * k_ + 1}}},
                  .denominator = {n_ + k_ + 1, m_ + k_ + 1},
                  .binomials = {{2 * m_, m_ + k_}, {2 * n_, n_ + k_}}},
      .rhs = {.denominator = {n_ + m_ + 1}, .binomials = {{2 * n_ + 2 * m_, n_ + m_}}},
      .integer_m_only = true,
  });

  defs.push_back({
      .id = IdentityId::I6,
      .has_m = true,
      .summand = {.numerator = {{1, {k_ + 1, k_ + 2}}},
                  .denominator = {m_ + k_ + 2},
                  .binomials = {{2 * m_ + k_ + 1, m_}, {2 * n_ - k_, n_}}},
      .rhs = {.numerator = {{1, {n_ + 1}}},
              .denominator = {n_ + m_ + 2},
              .binomials = {{2 * n_ + 2 * m_ + 2, n_ + m_ + 1}}},
      .integer_m_only = true,
  });

  defs.push_back({
      .id = IdentityId::I7,
      .has_m = true,
      .summand = {.numerator = {{1, {m_ + 1, m_ + 5}}, {3, {m_ + 2 * k_ + 1, m_ + 2 * k_ + 1}}},
                  .denominator = {m_ + k_ + 1, m_ + k_ + 2, m_ + k_ + 3},
                  .binomials = {{m_ + 2 * k_, k_}}},
      .rhs = {.constant = 4, .denominator = {n_ + m_ + 3}, .binomials = {{2 * n_ + m_ + 2, n_}}},
  });

  defs.push_back({
      .id = IdentityId::I8,
      .has_m = true,
      .summand = {.numerator = {{1, {m_ + 1, m_ + 5}}, {1, {m_ + 2 * k_ - 1, m_ + 2 * k_ + 1}}},
                  .denominator = {m_ + k_ + 1, m_ + k_ + 2, m_ + k_ + 3},
                  .binomials = {{m_ + 2 * k_, k_}},
                  .exponentials = {{2, -k_}}},
      .rhs = {.denominator = {n_ + m_ + 3},
              .binomials = {{2 * n_ + m_ + 2, n_}},
              .exponentials = {{2, -n_ + 1}}},
  });

  defs.push_back({
      .id = IdentityId::I9,
      .summand = {.constant = 3, .denominator = {k_ + 2}, .binomials = {{2 * k_, k_ + 1}}},
      .rhs = {.constant = 2, .denominator = {n_ + 2}, .binomials = {{2 * n_ + 1, n_}}},
      .rhs_offset = -1,
  });

  defs.push_back({
      .id = IdentityId::I10,
      .summand = {.constant = 4,
                  .denominator = {k_ + 3},
                  .binomials = {{2 * k_ + 1, k_ + 2}},
                  .exponentials = {{2, -k_}}},
      .rhs = {.denominator = {n_ + 3},
              .binomials = {{2 * n_ + 4, n_ + 2}},
              .exponentials = {{2, -n_}}},
      .rhs_offset = -2,
  });

  return defs;
}

SymSet perturbable() { return exact::sym_set(Sym::m, Sym::r); }

}  // namespace

const std::vector<IdentityDef>& registry() {
  static const std::vector<IdentityDef> defs = build_registry();
  return defs;
}

const IdentityDef& identity(IdentityId id) { return registry()[static_cast<std::size_t>(id)]; }

LimitValue eval_term(const Term& term, const Assignment& a) {
  // Exponentials and binomial lower indices must come out integral; they
  // never participate in the perturbation.
  Rational exp_product = 1;
  for (const auto& e : term.exponentials) exp_product *= pow(e.base, e.exponent.eval(a).as_long());

  std::vector<long> lower_values;
  lower_values.reserve(term.binomials.size());
  for (const auto& b : term.binomials) {
    Rational j = b.lower.eval(a);
    if (!j.is_integer()) throw std::domain_error("eval_term: binomial lower index is not an integer");
    lower_values.push_back(j.as_long());
  }

  SymSet perturbed;
  bool degenerate = false;
  for (const auto& d : term.denominator) {
    if (!d.eval(a).is_zero()) continue;
    degenerate = true;
    SymSet syms;
    for (Sym s : exact::kAllSyms)
      if (contains(perturbable(), s) && d.uses(s)) syms.set(static_cast<std::size_t>(s));
    if (syms.none()) return Pole{};  // nothing in the vanishing factor to perturb
    perturbed |= syms;
  }

  if (!degenerate) {
    Rational num = 1;
    if (!term.numerator.empty()) {
      num = 0;
      for (const auto& p : term.numerator) {
        Rational prod = p.coeff;
        for (const auto& f : p.factors) prod *= f.eval(a);
        num += prod;
      }
    }
    Rational den = 1;
    for (const auto& d : term.denominator) den *= d.eval(a);
    Rational value = term.constant * num / den * exp_product;
    for (std::size_t i = 0; i < term.binomials.size(); ++i)
      value *= exact::binomial(term.binomials[i].upper.eval(a), lower_values[i]);
    return value;
  }

  // A perturbed symbol inside a lower index would need the gamma-function
  // continuation of the binomial; that is out of scope, so the point is
  // reported as unresolvable.
  for (const auto& b : term.binomials)
    if (b.lower.uses_any(perturbed)) return Pole{};
  for (const auto& e : term.exponentials)
    if (e.exponent.uses_any(perturbed)) return Pole{};

  EpsPoly num = EpsPoly(Rational(1));
  if (!term.numerator.empty()) {
    num = EpsPoly{};
    for (const auto& p : term.numerator) {
      EpsPoly prod = EpsPoly(p.coeff);
      for (const auto& f : p.factors) prod *= f.eval_eps(a, perturbed);
      num += prod;
    }
  }
  num = num.scaled(term.constant * exp_product);
  for (std::size_t i = 0; i < term.binomials.size(); ++i)
    num *= exact::binomial(term.binomials[i].upper.eval_eps(a, perturbed), lower_values[i]);

  EpsPoly den = EpsPoly(Rational(1));
  for (const auto& d : term.denominator) den *= d.eval_eps(a, perturbed);
  if (den.is_zero()) return Pole{};  // direction-degenerate along the diagonal

  return eps_limit(num, den);
}

namespace {

Assignment make_assignment(long n, long k, const std::optional<Rational>& m,
                           const std::optional<Rational>& r) {
  Assignment a;
  a.set(Sym::n, Rational(n)).set(Sym::k, Rational(k));
  if (m) a.set(Sym::m, *m);
  if (r) a.set(Sym::r, *r);
  return a;
}

}  // namespace

LimitValue eval_term(const IdentityDef& def, long k, long n, const std::optional<Rational>& m,
                     const std::optional<Rational>& r) {
  return eval_term(def.summand, make_assignment(n, k, m, r));
}

CheckReport eval_identity(const IdentityDef& def, long n, const std::optional<Rational>& m,
                          const std::optional<Rational>& r) {
  if (n < 0) throw std::invalid_argument("eval_identity: n must be nonnegative");
  if (def.has_m != m.has_value())
    throw std::invalid_argument(std::string("eval_identity: ") + (def.has_m ? "missing" : "excess") +
                                " symbol m for " + std::string(identity_name(def.id)));
  if (def.has_r != r.has_value())
    throw std::invalid_argument(std::string("eval_identity: ") + (def.has_r ? "missing" : "excess") +
                                " symbol r for " + std::string(identity_name(def.id)));

  CheckReport rep;
  rep.id = identity_name(def.id);
  rep.n = n;
  rep.m = m;
  rep.r = r;

  if (def.integer_m_only && (!m->is_integer() || m->is_negative())) {
    rep.status = Status::skipped;
    rep.note = "m must be a nonnegative integer for this identity";
    return rep;
  }

  bool lhs_pole = false;
  Rational lhs_sum = 0;
  for (long k = 0; k <= n; ++k) {
    LimitValue term = eval_term(def, k, n, m, r);
    if (exact::is_pole(term)) {
      lhs_pole = true;
      break;
    }
    lhs_sum += exact::as_rational(term);
  }
  rep.lhs = lhs_pole ? LimitValue(Pole{}) : LimitValue(lhs_sum);

  LimitValue rhs = eval_term(def.rhs, make_assignment(n, 0, m, r));
  if (!exact::is_pole(rhs)) rhs = exact::as_rational(rhs) + def.rhs_offset;
  rep.rhs = rhs;

  if (lhs_pole || exact::is_pole(rhs))
    rep.status = Status::pole;
  else
    rep.status = lhs_sum == exact::as_rational(rhs) ? Status::equal : Status::unequal;
  return rep;
}

namespace {

LinearForm reverse_form(const LinearForm& f, const LinearForm& n_minus_k) {
  return f.substituted(Sym::k, n_minus_k).with_swapped(Sym::m, Sym::r);
}

Term reverse_term(const Term& t, bool substitute_k) {
  const LinearForm n_minus_k = LinearForm::var(Sym::n) - LinearForm::var(Sym::k);
  auto rewrite = [&](const LinearForm& f) {
    return substitute_k ? reverse_form(f, n_minus_k) : f.with_swapped(Sym::m, Sym::r);
  };
  Term out = t;
  for (auto& p : out.numerator)
    for (auto& f : p.factors) f = rewrite(f);
  for (auto& d : out.denominator) d = rewrite(d);
  for (auto& b : out.binomials) {
    b.upper = rewrite(b.upper);
    b.lower = rewrite(b.lower);
  }
  for (auto& e : out.exponentials) e.exponent = rewrite(e.exponent);
  return out;
}

}  // namespace

IdentityDef apply_reversal(const IdentityDef& def) {
  if (!(def.has_m && def.has_r))
    throw std::invalid_argument("apply_reversal: identity must have both m and r free");
  IdentityDef out = def;
  out.summand = reverse_term(def.summand, /*substitute_k=*/true);
  out.rhs = reverse_term(def.rhs, /*substitute_k=*/false);
  return out;
}

}  // namespace pathsum::identities
