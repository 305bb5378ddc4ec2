#include "pathsum/eps_poly.hpp"

#include <algorithm>

namespace pathsum::exact {

std::optional<std::size_t> EpsPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return i;
  return std::nullopt;
}

EpsPoly EpsPoly::operator-() const {
  EpsPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

EpsPoly& EpsPoly::operator+=(const EpsPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

EpsPoly& EpsPoly::operator-=(const EpsPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  EpsPoly out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  out.trim();
  return out;
}

EpsPoly EpsPoly::scaled(const Rational& s) const {
  if (s.is_zero()) return {};
  EpsPoly out = *this;
  for (auto& c : out.c_) c *= s;
  return out;
}

LimitValue eps_limit(const EpsPoly& num, const EpsPoly& den) {
  if (den.is_zero()) throw std::domain_error("eps_limit: denominator is identically zero");
  auto vn = num.valuation();
  if (!vn) return Rational(0);
  std::size_t vd = *den.valuation();
  if (*vn > vd) return Rational(0);
  if (*vn == vd) return num.coeff(*vn) / den.coeff(vd);
  return Pole{};
}

}  // namespace pathsum::exact
