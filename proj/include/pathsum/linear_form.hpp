#pragma once

#include "pathsum/eps_poly.hpp"
#include "pathsum/rational.hpp"

#include <array>
#include <bitset>
#include <cstddef>
#include <optional>
#include <string>

namespace pathsum::exact {

enum class Sym : int { n = 0, m = 1, r = 2, k = 3, N = 4 };
inline constexpr std::size_t kSymCount = 5;
inline constexpr std::array<Sym, kSymCount> kAllSyms = {Sym::n, Sym::m, Sym::r, Sym::k, Sym::N};

const char* sym_name(Sym s);

using SymSet = std::bitset<kSymCount>;

inline SymSet sym_set() { return {}; }
inline SymSet sym_set(Sym a) {
  SymSet s;
  s.set(static_cast<std::size_t>(a));
  return s;
}
inline SymSet sym_set(Sym a, Sym b) { return sym_set(a) | sym_set(b); }
inline bool contains(const SymSet& set, Sym s) { return set.test(static_cast<std::size_t>(s)); }

/// Partial symbol-to-value binding.
class Assignment {
 public:
  Assignment& set(Sym s, Rational v) {
    v_[static_cast<std::size_t>(s)] = std::move(v);
    return *this;
  }
  bool has(Sym s) const { return v_[static_cast<std::size_t>(s)].has_value(); }
  const Rational& get(Sym s) const {
    const auto& slot = v_[static_cast<std::size_t>(s)];
    if (!slot) throw std::invalid_argument(std::string("Assignment: missing symbol ") + sym_name(s));
    return *slot;
  }

 private:
  std::array<std::optional<Rational>, kSymCount> v_;
};

/// constant + sum of coeff[s] * s over the symbols.
struct LinearForm {
  Rational constant;
  std::array<Rational, kSymCount> coeff{};

  LinearForm() = default;
  LinearForm(long c) : constant(c) {}  // NOLINT(google-explicit-constructor)
  LinearForm(Rational c) : constant(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  static LinearForm var(Sym s) {
    LinearForm f;
    f.coeff[static_cast<std::size_t>(s)] = 1;
    return f;
  }

  bool uses(Sym s) const { return !coeff[static_cast<std::size_t>(s)].is_zero(); }
  bool uses_any(const SymSet& set) const;

  Rational eval(const Assignment& a) const;
  /// Substitutes value+eps for the perturbed symbols; degree <= 1 in eps.
  EpsPoly eval_eps(const Assignment& a, const SymSet& perturbed) const;

  /// Replaces symbol s by the given form (used for the k -> n-k rewrite).
  LinearForm substituted(Sym s, const LinearForm& replacement) const;
  LinearForm with_swapped(Sym a, Sym b) const;

  LinearForm operator-() const;
  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator*(const Rational& s, LinearForm f);

  friend bool operator==(const LinearForm& a, const LinearForm& b) = default;
};

inline LinearForm operator+(LinearForm a, long c) { return a += LinearForm(c); }
inline LinearForm operator-(LinearForm a, long c) { return a -= LinearForm(c); }
inline LinearForm operator*(long s, const LinearForm& f) { return Rational(s) * f; }

/// Evaluates a form with some of its symbols perturbed.
inline EpsPoly eval_linear_form(const LinearForm& f, const Assignment& a, const SymSet& perturbed) {
  return f.eval_eps(a, perturbed);
}

}  // namespace pathsum::exact
