#include "pathsum/linear_form.hpp"

namespace pathsum::exact {

const char* sym_name(Sym s) {
  switch (s) {
    case Sym::n: return "n";
    case Sym::m: return "m";
    case Sym::r: return "r";
    case Sym::k: return "k";
    case Sym::N: return "N";
  }
  return "?";
}

bool LinearForm::uses_any(const SymSet& set) const {
  for (Sym s : kAllSyms)
    if (contains(set, s) && uses(s)) return true;
  return false;
}

Rational LinearForm::eval(const Assignment& a) const {
  Rational acc = constant;
  for (Sym s : kAllSyms) {
    const Rational& c = coeff[static_cast<std::size_t>(s)];
    if (!c.is_zero()) acc += c * a.get(s);
  }
  return acc;
}

EpsPoly LinearForm::eval_eps(const Assignment& a, const SymSet& perturbed) const {
  Rational c0 = constant;
  Rational c1 = 0;
  for (Sym s : kAllSyms) {
    const Rational& c = coeff[static_cast<std::size_t>(s)];
    if (c.is_zero()) continue;
    c0 += c * a.get(s);
    if (contains(perturbed, s)) c1 += c;
  }
  return EpsPoly(c0, c1);
}

LinearForm LinearForm::substituted(Sym s, const LinearForm& replacement) const {
  LinearForm out = *this;
  Rational c = out.coeff[static_cast<std::size_t>(s)];
  if (c.is_zero()) return out;
  out.coeff[static_cast<std::size_t>(s)] = 0;
  out += c * replacement;
  return out;
}

LinearForm LinearForm::with_swapped(Sym a, Sym b) const {
  LinearForm out = *this;
  std::swap(out.coeff[static_cast<std::size_t>(a)], out.coeff[static_cast<std::size_t>(b)]);
  return out;
}

LinearForm LinearForm::operator-() const {
  LinearForm out = *this;
  out.constant = -out.constant;
  for (auto& c : out.coeff) c = -c;
  return out;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  constant += o.constant;
  for (std::size_t i = 0; i < kSymCount; ++i) coeff[i] += o.coeff[i];
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) { return *this += -o; }

LinearForm operator*(const Rational& s, LinearForm f) {
  f.constant *= s;
  for (auto& c : f.coeff) c *= s;
  return f;
}

}  // namespace pathsum::exact
