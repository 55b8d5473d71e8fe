#pragma once

/**
 * @file face_ring.hpp
 * @brief Face ideal of a simplicial poset, Hilbert series of its face ring
 * from the h-vector, the face module of a matroid, and the check
 *   N_M(t) = t^r T̃_M(1/t, 1) / (1-t)^r.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gtpoly/poset.hpp"
#include "gtpoly/polynomial.hpp"
#include "gtpoly/report.hpp"
#include "gtpoly/tutte.hpp"

namespace gtpoly {

/// numerator / (1-t)^denominator_exponent, kept with no common (1-t) factor.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  HilbertSeries(IntPoly numerator, unsigned r) : num_(std::move(numerator)), r_(r) { reduce(); }

  /// Σ h_i t^i / (1-t)^r, with r = h.size() - 1.
  static HilbertSeries from_h(const std::vector<mpz_class>& h) {
    return HilbertSeries(IntPoly(h), static_cast<unsigned>(h.size() - 1));
  }

  const IntPoly& numerator() const { return num_; }
  unsigned denominator_exponent() const { return r_; }

  HilbertSeries scaled(const mpz_class& k) const { return HilbertSeries(num_ * IntPoly(k), r_); }

  /// Coefficients of the power series expansion up to t^order.
  std::vector<mpz_class> expand(std::size_t order) const {
    // 1/(1-t)^r = Σ C(n+r-1, r-1) t^n
    std::vector<mpz_class> out(order + 1, 0);
    for (std::size_t n = 0; n <= order; ++n) {
      mpz_class c = 0;
      for (std::size_t k = 0; k <= n && k < num_.coeffs().size(); ++k) {
        std::size_t m = n - k;
        mpz_class w = r_ == 0 ? mpz_class(m == 0 ? 1 : 0) : binomial(m + r_ - 1, r_ - 1);
        c += num_.coeffs()[k] * w;
      }
      out[n] = c;
    }
    return out;
  }

  /// "(1 + t + 2t^2)/(1-t)^2", "1/(1-t)"
  std::string to_string() const {
    std::string n = num_.to_string_ascending('t');
    if (r_ == 0) return n;
    bool compound = num_.coeffs().size() > 1 && std::count_if(num_.coeffs().begin(), num_.coeffs().end(),
                                                              [](const mpz_class& c) { return c != 0; }) > 1;
    return (compound ? "(" + n + ")" : n) + "/(1-t)" + (r_ == 1 ? "" : "^" + std::to_string(r_));
  }

  /// Equality of rational functions by cross-multiplication.
  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
    return a.num_ * one_minus_t_power(b.r_) == b.num_ * one_minus_t_power(a.r_);
  }

 private:
  void reduce() {
    // divide out (1-t) while the numerator vanishes at t = 1
    while (r_ > 0 && !num_.is_zero() && evaluate(num_, 1) == 0) {
      const auto& c = num_.coeffs();
      // synthetic division by (t - 1), then negate
      std::vector<mpz_class> q(c.size() - 1);
      mpz_class carry = 0;
      for (std::size_t k = c.size() - 1; k > 0; --k) {
        carry += c[k];
        q[k - 1] = -carry;
      }
      num_ = IntPoly(std::move(q));
      --r_;
    }
    if (num_.is_zero()) r_ = 0;
  }

  IntPoly num_;
  unsigned r_ = 0;
};

/// One generator x_a x_b - x_{a∧b} Σ_{c ∈ M(a,b)} x_c of the face ideal,
/// with x of the minimum replaced by 1.
struct FaceRelation {
  std::size_t a = 0, b = 0;
  std::optional<std::size_t> meet;  ///< absent if a and b have no meet
  std::vector<std::size_t> uppers;  ///< minimal upper bounds M(a, b)
};

struct FaceIdealDescription {
  std::vector<std::size_t> degrees;  ///< variable x<i> has degree = rank of node i
  std::size_t minimum = 0;
  std::vector<FaceRelation> relations;

  /// One relation per line, x_0̂ - 1 first.
  std::string to_string() const {
    auto x = [](std::size_t i) { return "x" + std::to_string(i); };
    std::string s = x(minimum) + " - 1\n";
    for (const auto& r : relations) {
      s += x(r.a) + "*" + x(r.b);
      if (r.meet && !r.uppers.empty()) {
        std::string sum;
        for (std::size_t k = 0; k < r.uppers.size(); ++k) sum += (k ? " + " : "") + x(r.uppers[k]);
        if (r.uppers.size() > 1) sum = "(" + sum + ")";
        s += " - " + (*r.meet == minimum ? sum : x(*r.meet) + "*" + sum);
      }
      s += "\n";
    }
    return s;
  }
};

/// Face ideal of a connected simplicial poset. Comparable pairs give the
/// trivial relation and are omitted.
template <SupportedRing R>
FaceIdealDescription face_ideal(const TorsionPoset<R>& p) {
  auto mins = p.minima();
  if (mins.size() != 1) throw invalid_input("face ideal needs a poset with a unique minimum");
  FaceIdealDescription out;
  out.minimum = mins[0];
  for (std::size_t i = 0; i < p.size(); ++i) out.degrees.push_back(p.rank(i) - p.rank(out.minimum));

  std::vector<std::vector<std::size_t>> down(p.size()), up(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) down[i] = p.down_set(i);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (auto j : down[i]) up[j].push_back(i);
  auto leq = [&](std::size_t x, std::size_t y) { return std::binary_search(down[y].begin(), down[y].end(), x); };

  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      if (leq(a, b) || leq(b, a)) continue;
      FaceRelation rel{a, b, std::nullopt, {}};
      std::vector<std::size_t> lower;
      std::set_intersection(down[a].begin(), down[a].end(), down[b].begin(), down[b].end(), std::back_inserter(lower));
      for (auto c : lower)
        if (std::all_of(lower.begin(), lower.end(), [&](std::size_t d) { return leq(d, c); })) rel.meet = c;
      std::vector<std::size_t> common;
      std::set_intersection(up[a].begin(), up[a].end(), up[b].begin(), up[b].end(), std::back_inserter(common));
      for (auto c : common)
        if (std::none_of(common.begin(), common.end(), [&](std::size_t d) { return d != c && leq(d, c); }))
          rel.uppers.push_back(c);
      out.relations.push_back(std::move(rel));
    }
  return out;
}

/// A_P(t) = Σ h_i t^i / (1-t)^r from the f-vector of P.
template <SupportedRing R>
HilbertSeries hilbert_series_face_ring(const TorsionPoset<R>& p) {
  auto f = poset_f_vector(p);
  if (f.empty()) throw invalid_input("empty poset has no face ring");
  return HilbertSeries::from_h(h_from_f(f));
}

/// Face module N_M = A_L^{|tor(∅)|}, L the component of one minimum of Gr M.
template <SupportedRing R>
HilbertSeries face_module_hilbert(const RealizedMatroid<R>& m, std::size_t node_budget = default_node_budget) {
  auto comps = poset_components(build_poset(m, node_budget));
  return hilbert_series_face_ring(comps.front()).scaled(torsion_cardinality(m.class_of(0)));
}

/// Same series through the quotient matroid M'(A) = M(∅)/(tor(∅) + ψ[A]).
template <SupportedRing R>
HilbertSeries face_module_hilbert_via_quotient(const RealizedMatroid<R>& m, std::size_t node_budget = default_node_budget) {
  auto quotient = m.quotient_by_empty_torsion();
  return hilbert_series_face_ring(build_poset(quotient, node_budget)).scaled(torsion_cardinality(m.class_of(0)));
}

/// t^r T̃(1/t, 1) as a polynomial; negative powers would signal a degree
/// above the rank.
template <SupportedRing R>
IntPoly reversed_tutte_at_y1(const RealizedMatroid<R>& m) {
  IntPoly ty1 = substitute_y(tutte_numeric(m), 1, mpz_class(0));
  LaurentPoly inv;
  for (std::size_t k = 0; k < ty1.coeffs().size(); ++k) inv.add(-static_cast<long>(k), ty1.coeffs()[k]);
  LaurentPoly tr;
  tr.add(static_cast<long>(m.rank()), 1);
  return (inv * tr).to_polynomial();
}

template <SupportedRing R>
CheckReport verify_hilbert_tutte(const RealizedMatroid<R>& m, std::size_t node_budget = default_node_budget) {
  CheckReport rep;
  rep.name = "hilbert-tutte";
  HilbertSeries lhs = face_module_hilbert(m, node_budget);
  HilbertSeries rhs(reversed_tutte_at_y1(m), static_cast<unsigned>(m.rank()));
  rep.record(lhs == rhs, "N_M(t) = " + lhs.to_string() + " vs t^r T(1/t,1)/(1-t)^r = " + rhs.to_string());
  return rep;
}

/// T̃_M(t, 1) = |tor(∅)| T̃_M'(t, 1).
template <SupportedRing R>
CheckReport check_quotient_lemma(const RealizedMatroid<R>& m) {
  CheckReport rep;
  rep.name = "quotient-lemma";
  IntPoly lhs = substitute_y(tutte_numeric(m), 1, mpz_class(0));
  IntPoly rhs = substitute_y(tutte_numeric(m.quotient_by_empty_torsion()), 1, mpz_class(0)) *
                IntPoly(torsion_cardinality(m.class_of(0)));
  rep.record(lhs == rhs, "T(t,1) = " + lhs.to_string('t') + " vs |tor(∅)| T'(t,1) = " + rhs.to_string('t'));
  return rep;
}

}  // namespace gtpoly
