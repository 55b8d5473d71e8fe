#pragma once

/**
 * @file tutte.hpp
 * @brief Grothendieck-Tutte polynomial, its numeric image, the Grothendieck
 * f- and h-vectors, and checks of the deletion-contraction and f-vector
 * identities.
 *
 *   T_M(x, y) = Σ_A [tor(A)^∨] (x-1)^{r - rk A} (y-1)^{|A| - rk A}
 */

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gtpoly/grothendieck.hpp"
#include "gtpoly/matroid.hpp"
#include "gtpoly/parallel.hpp"
#include "gtpoly/report.hpp"

namespace gtpoly {

/// Class of the Pontryagin-style dual tor^∨ = Hom(tor, Q(R)/R). Over a PID
/// every R/(d) is self-dual, so this is the identity; a non-PID ring would
/// have to change it here.
template <SupportedRing R>
ModuleClass<R> dual_torsion_class(const ModuleClass<R>& tor) {
  return tor.torsion_part();
}

namespace detail {

// (x-1)^a (y-1)^b with coefficients scaled by c
template <SupportedRing R>
GTPoly<R> shifted_monomial(const GrothElement<R>& c, unsigned a, unsigned b) {
  GTPoly<R> out;
  for (unsigned i = 0; i <= a; ++i) {
    mpz_class ci = binomial(a, i) * (((a - i) % 2) ? -1 : 1);
    for (unsigned j = 0; j <= b; ++j) {
      mpz_class cj = binomial(b, j) * (((b - j) % 2) ? -1 : 1);
      out.add_term({i, j}, c * GrothElement<R>(ci * cj));
    }
  }
  return out;
}

}  // namespace detail

/// Collected terms of the defining sum, keyed by (r - rk A, |A| - rk A).
template <SupportedRing R>
std::map<std::pair<unsigned, unsigned>, GrothElement<R>> tutte_terms(const RealizedMatroid<R>& m) {
  using Terms = std::map<std::pair<unsigned, unsigned>, GrothElement<R>>;
  const std::size_t total = std::size_t{1} << m.size();
  const std::size_t r = m.rank();
  std::vector<Terms> parts(detail::chunk_count(total, 64));
  detail::parallel_chunks(
      total,
      [&](std::size_t b, std::size_t e, std::size_t chunk) {
        for (std::size_t s = b; s < e; ++s) {
          Subset a = s;
          std::size_t rk = m.generic_rank(a);
          auto key = std::pair<unsigned, unsigned>(static_cast<unsigned>(r - rk), static_cast<unsigned>(subset_size(a) - rk));
          parts[chunk][key] += GrothElement<R>::of(dual_torsion_class(m.class_of(a)));
        }
      },
      64);
  Terms out;
  for (const auto& part : parts)
    for (const auto& [k, v] : part) out[k] += v;
  return out;
}

template <SupportedRing R>
GTPoly<R> grothendieck_tutte(const RealizedMatroid<R>& m) {
  GTPoly<R> t;
  for (const auto& [k, c] : tutte_terms(m)) t += detail::shifted_monomial(c, k.first, k.second);
  return t;
}

/// φ applied coefficient-wise; over Z this is the arithmetic Tutte polynomial.
template <SupportedRing R>
IntPoly2 tutte_numeric(const RealizedMatroid<R>& m) {
  return phi_tilde(grothendieck_tutte(m));
}

/// (f_{-1}, f_0, ..., f_{r-1}) with f_{i-1} = Σ_{A independent, |A| = i} [tor(A)^∨].
template <SupportedRing R>
struct GrothFVector {
  std::vector<GrothElement<R>> entries;

  std::size_t rank() const { return entries.size() - 1; }
  std::vector<mpz_class> numeric() const {
    std::vector<mpz_class> f;
    for (const auto& e : entries) f.push_back(phi(e));
    return f;
  }
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) s += (i ? ", " : "") + entries[i].to_string();
    return s + ")";
  }
  friend bool operator==(const GrothFVector&, const GrothFVector&) = default;
};

template <SupportedRing R>
GrothFVector<R> f_vector(const RealizedMatroid<R>& m) {
  GrothFVector<R> f;
  f.entries.resize(m.rank() + 1);
  for (Subset a : m.independents()) f.entries[subset_size(a)] += GrothElement<R>::of(dual_torsion_class(m.class_of(a)));
  return f;
}

/// h from Σ_i f_{i-1} (t-1)^{r-i} = Σ_i h_i t^{r-i}.
inline std::vector<mpz_class> h_from_f(const std::vector<mpz_class>& f) {
  const std::size_t r = f.size() - 1;
  IntPoly acc;
  for (std::size_t i = 0; i <= r; ++i) acc += IntPoly(f[i]) * shifted_power(-1, static_cast<unsigned>(r - i));
  std::vector<mpz_class> h(r + 1);
  for (std::size_t i = 0; i <= r; ++i) h[i] = acc.coeff_or(r - i, 0);
  return h;
}

/// Inverse of h_from_f: Σ h_i t^{r-i} evaluated at t -> t+1.
inline std::vector<mpz_class> f_from_h(const std::vector<mpz_class>& h) {
  const std::size_t r = h.size() - 1;
  IntPoly acc;
  for (std::size_t i = 0; i <= r; ++i) acc += IntPoly(h[i]) * shifted_power(1, static_cast<unsigned>(r - i));
  std::vector<mpz_class> f(r + 1);
  for (std::size_t i = 0; i <= r; ++i) f[i] = acc.coeff_or(r - i, 0);
  return f;
}

struct NumericFH {
  std::vector<mpz_class> f;
  std::vector<mpz_class> h;
};

template <SupportedRing R>
NumericFH numeric_f_h(const RealizedMatroid<R>& m) {
  NumericFH out;
  out.f = f_vector(m).numeric();
  out.h = h_from_f(out.f);
  return out;
}

/// Σ f_{i-1} (t-1)^{r-i} over L0(R-mod).
template <SupportedRing R>
Poly1<GrothElement<R>> f_polynomial(const GrothFVector<R>& f) {
  using P = Poly1<GrothElement<R>>;
  const std::size_t r = f.rank();
  P acc;
  for (std::size_t i = 0; i <= r; ++i) {
    IntPoly s = shifted_power(-1, static_cast<unsigned>(r - i));
    std::vector<GrothElement<R>> c;
    for (const auto& k : s.coeffs()) c.push_back(f.entries[i] * GrothElement<R>(k));
    acc += P(std::move(c));
  }
  return acc;
}

template <SupportedRing R>
CheckReport check_tutte_f_identity(const RealizedMatroid<R>& m) {
  CheckReport rep;
  rep.name = "tutte-f";
  auto lhs = substitute_y(grothendieck_tutte(m), 1, GrothElement<R>());
  auto rhs = f_polynomial(f_vector(m));
  rep.record(lhs == rhs, "T(t,1) = " + lhs.to_string('t') + " vs f-polynomial " + rhs.to_string('t'));
  return rep;
}

/// Checks, element by element, the identity that applies to its kind:
/// ordinary T = T\i + T/i, loop T = y T\i (needs M(∅) torsion-free),
/// coloop T = x T/i (needs M([n]) = 0).
template <SupportedRing R>
CheckReport check_deletion_contraction(const RealizedMatroid<R>& m) {
  CheckReport rep;
  rep.name = "deletion-contraction";
  if (m.size() == 0) return rep;
  const auto t = grothendieck_tutte(m);
  const bool loop_ok = m.empty_is_torsion_free();
  const bool coloop_ok = m.full_is_zero();
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto kind = m.element_kind(i);
    const std::string tag = "element " + std::to_string(m.labels()[i]) + " (" + std::string(to_string(kind)) + ")";
    switch (kind) {
      case ElementKind::ordinary: {
        auto sum = grothendieck_tutte(m.deleted(i)) + grothendieck_tutte(m.contracted(i));
        rep.record(sum == t, tag + ": T = T\\i + T/i");
        break;
      }
      case ElementKind::loop:
        if (!loop_ok) {
          rep.skip(tag + ": hypothesis unmet, skipped (M(∅) has torsion)");
          break;
        }
        rep.record(grothendieck_tutte(m.deleted(i)).shifted(0, 1) == t, tag + ": T = y T\\i");
        break;
      case ElementKind::coloop:
        if (!coloop_ok) {
          rep.skip(tag + ": hypothesis unmet, skipped (M([n]) is nonzero)");
          break;
        }
        rep.record(grothendieck_tutte(m.contracted(i)).shifted(1, 0) == t, tag + ": T = x T/i");
        break;
    }
  }
  return rep;
}

}  // namespace gtpoly
