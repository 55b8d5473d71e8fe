#pragma once

/**
 * @file grothendieck.hpp
 * @brief The ring L0(R-mod): formal integer combinations of module classes
 * with [N][N'] = [N ⊕ N'], polynomials over it, and the evaluation
 * homomorphism phi sending free modules to 1 and torsion modules to their
 * cardinality.
 *
 * There are no exact-sequence relations: the group is free abelian on the
 * classes, so negative coefficients are legitimate elements.
 */

#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "gtpoly/module.hpp"
#include "gtpoly/polynomial.hpp"

namespace gtpoly {

template <SupportedRing R>
class GrothElement {
 public:
  using term_map = std::map<ModuleClass<R>, mpz_class>;

  GrothElement() = default;
  /// k times the class of the zero module (the multiplicative unit).
  GrothElement(long k) : GrothElement(mpz_class(k)) {}  // NOLINT(google-explicit-constructor)
  GrothElement(const mpz_class& k) {  // NOLINT(google-explicit-constructor)
    if (k != 0) terms_.emplace(ModuleClass<R>{}, k);
  }
  /// 1 * [c]
  static GrothElement of(const ModuleClass<R>& c, const mpz_class& coeff = 1) {
    GrothElement e;
    e.add(c, coeff);
    return e;
  }
  static GrothElement one() { return GrothElement(1); }

  bool is_zero() const { return terms_.empty(); }
  const term_map& terms() const { return terms_; }

  /// Whether this is k * 1 for some integer k (reported through k).
  bool is_integer(mpz_class& k) const {
    if (terms_.empty()) {
      k = 0;
      return true;
    }
    if (terms_.size() == 1 && terms_.begin()->first.is_zero()) {
      k = terms_.begin()->second;
      return true;
    }
    return false;
  }

  void add(const ModuleClass<R>& c, const mpz_class& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(c, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  GrothElement& operator+=(const GrothElement& o) {
    for (const auto& [c, k] : o.terms_) add(c, k);
    return *this;
  }
  GrothElement& operator-=(const GrothElement& o) {
    for (const auto& [c, k] : o.terms_) add(c, -k);
    return *this;
  }
  GrothElement operator-() const {
    GrothElement r;
    for (const auto& [c, k] : terms_) r.terms_.emplace(c, -k);
    return r;
  }
  friend GrothElement operator+(GrothElement a, const GrothElement& b) { return a += b; }
  friend GrothElement operator-(GrothElement a, const GrothElement& b) { return a -= b; }
  friend GrothElement operator*(const GrothElement& a, const GrothElement& b) {
    GrothElement r;
    for (const auto& [ca, ka] : a.terms_)
      for (const auto& [cb, kb] : b.terms_) r.add(direct_sum(ca, cb), ka * kb);
    return r;
  }
  GrothElement& operator*=(const GrothElement& o) { return *this = *this * o; }
  friend bool operator==(const GrothElement&, const GrothElement&) = default;

  /// "[0]+[R/(1+i)]", "2[R/2]-[0]"; with unit_as_integer the zero-module
  /// class renders as a bare integer.
  std::string to_string(bool unit_as_integer = false) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [c, k] : terms_) {
      const bool neg = k < 0;
      mpz_class mag = abs(k);
      if (!out.empty()) out += neg ? "-" : "+";
      else if (neg) out += "-";
      if (unit_as_integer && c.is_zero()) {
        out += mag.get_str();
      } else {
        if (mag != 1) out += mag.get_str();
        out += c.to_string();
      }
    }
    return out;
  }

 private:
  term_map terms_;
};

template <SupportedRing R>
bool coeff_is_zero(const GrothElement<R>& e) {
  return e.is_zero();
}
template <SupportedRing R>
GrothElement<R> coeff_from_integer(const GrothElement<R>&, const mpz_class& k) {
  return GrothElement<R>(k);
}
template <SupportedRing R>
bool coeff_as_integer(const GrothElement<R>& e, mpz_class& k) {
  return e.is_integer(k);
}
template <SupportedRing R>
std::string coeff_to_string(const GrothElement<R>& e) {
  return e.to_string(true);
}

template <SupportedRing R>
using GTPoly = Poly2<GrothElement<R>>;

/// phi: L0(R-mod) -> Z, [F ⊕ T] -> |T|, extended linearly.
template <SupportedRing R>
mpz_class phi(const GrothElement<R>& e) {
  mpz_class v = 0;
  for (const auto& [c, k] : e.terms()) v += k * torsion_cardinality(c);
  return v;
}

/// Coefficient-wise phi.
template <SupportedRing R>
IntPoly2 phi_tilde(const GTPoly<R>& p) {
  return map_coefficients<mpz_class>(p, [](const GrothElement<R>& e) { return phi(e); });
}

template <SupportedRing R>
IntPoly phi_tilde(const Poly1<GrothElement<R>>& p) {
  std::vector<mpz_class> c;
  c.reserve(p.coeffs().size());
  for (const auto& e : p.coeffs()) c.push_back(phi(e));
  return IntPoly(std::move(c));
}

}  // namespace gtpoly
