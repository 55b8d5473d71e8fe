#pragma once

/**
 * @file polynomial.hpp
 * @brief Univariate and bivariate polynomials over an exact coefficient ring.
 *
 * Coefficient types provide +, -, *, == and the free functions
 * coeff_is_zero, coeff_from_integer, coeff_as_integer and coeff_to_string
 * (found by ADL, or declared here for mpz_class).
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "gtpoly/error.hpp"

namespace gtpoly {

inline bool coeff_is_zero(const mpz_class& c) { return c == 0; }
inline mpz_class coeff_from_integer(const mpz_class&, const mpz_class& k) { return k; }

/// Rendering hook: integer coefficients render plainly.
inline bool coeff_as_integer(const mpz_class& c, mpz_class& out) {
  out = c;
  return true;
}
inline std::string coeff_to_string(const mpz_class& c) { return c.get_str(); }

template <class C>
concept Coefficient = requires(const C& a, const C& b, mpz_class k, mpz_class& out) {
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { -a } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { a == b } -> std::convertible_to<bool>;
  { coeff_is_zero(a) } -> std::convertible_to<bool>;
  { coeff_from_integer(a, k) } -> std::convertible_to<C>;
  { coeff_as_integer(a, out) } -> std::convertible_to<bool>;
  { coeff_to_string(a) } -> std::convertible_to<std::string>;
};

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

namespace detail {

// appends "c·m" to a sum rendering, where mono is "" for the constant term
template <Coefficient C>
void append_term(std::string& out, const C& c, const std::string& mono) {
  mpz_class k;
  if (coeff_as_integer(c, k)) {
    const bool neg = k < 0;
    mpz_class mag = abs(k);
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (mono.empty()) out += mag.get_str();
    else out += (mag == 1 ? "" : mag.get_str()) + mono;
  } else {
    if (!out.empty()) out += " + ";
    out += "(" + coeff_to_string(c) + ")";
    if (!mono.empty()) out += " " + mono;
  }
}

inline std::string power_string(char var, unsigned e) {
  if (e == 0) return "";
  if (e == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(e);
}

}  // namespace detail

/// Dense univariate polynomial; coefficient k multiplies t^k.
template <Coefficient C>
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly1(C constant) : c_{std::move(constant)} { trim(); }  // NOLINT(google-explicit-constructor)

  /// c * t^k
  static Poly1 monomial(C c, std::size_t k, const C& zero) {
    std::vector<C> v(k + 1, zero);
    v[k] = std::move(c);
    return Poly1(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<C>& coeffs() const { return c_; }
  const C& coeff(std::size_t k) const { return c_.at(k); }
  C coeff_or(std::size_t k, const C& zero) const { return k < c_.size() ? c_[k] : zero; }

  Poly1& operator+=(const Poly1& o) {
    if (o.c_.size() > c_.size()) {
      c_.reserve(o.c_.size());
      for (std::size_t k = c_.size(); k < o.c_.size(); ++k) c_.push_back(coeff_from_integer(o.c_[k], 0));
    }
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
    trim();
    return *this;
  }
  Poly1& operator-=(const Poly1& o) {
    if (o.c_.size() > c_.size()) {
      for (std::size_t k = c_.size(); k < o.c_.size(); ++k) c_.push_back(coeff_from_integer(o.c_[k], 0));
    }
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] - o.c_[k];
    trim();
    return *this;
  }
  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator*(const Poly1& a, const Poly1& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const C zero = coeff_from_integer(a.c_[0], 0);
    std::vector<C> r(a.c_.size() + b.c_.size() - 1, zero);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly1(std::move(r));
  }
  friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }

  std::string to_string(char var = 't') const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (coeff_is_zero(c_[k])) continue;
      detail::append_term(out, c_[k], detail::power_string(var, static_cast<unsigned>(k)));
    }
    return out;
  }

  /// Low-to-high rendering, e.g. "1 + t + 2t^2".
  std::string to_string_ascending(char var = 't') const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (coeff_is_zero(c_[k])) continue;
      detail::append_term(out, c_[k], detail::power_string(var, static_cast<unsigned>(k)));
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<C> c_;
};

using IntPoly = Poly1<mpz_class>;

inline mpz_class evaluate(const IntPoly& p, const mpz_class& t) {
  mpz_class acc = 0;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * t + p.coeffs()[k];
  return acc;
}

/// (t + a)^k over the integers.
inline IntPoly shifted_power(const mpz_class& a, unsigned k) {
  std::vector<mpz_class> c(k + 1);
  mpz_class ap = 1;
  for (unsigned j = 0; j <= k; ++j) {
    c[k - j] = binomial(k, j) * ap;
    ap *= a;
  }
  return IntPoly(std::move(c));
}

/// (1 - t)^k.
inline IntPoly one_minus_t_power(unsigned k) {
  std::vector<mpz_class> c(k + 1);
  for (unsigned j = 0; j <= k; ++j) c[j] = (j % 2 ? -1 : 1) * binomial(k, j);
  return IntPoly(std::move(c));
}

/// Exponent pair of a bivariate monomial x^x y^y.
struct Monomial {
  unsigned x = 0;
  unsigned y = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded-lex descending: higher total degree first, then higher x degree.
struct GradedLexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.x + a.y != b.x + b.y) return a.x + a.y > b.x + b.y;
    return a.x > b.x;
  }
};

/// Sparse bivariate polynomial in x, y; no zero coefficients stored.
template <Coefficient C>
class Poly2 {
 public:
  using term_map = std::map<Monomial, C, GradedLexDesc>;

  Poly2() = default;

  static Poly2 monomial(C c, unsigned ex, unsigned ey) {
    Poly2 p;
    p.add_term({ex, ey}, std::move(c));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const term_map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add_term(Monomial m, const C& c) {
    if (coeff_is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
      return;
    }
    it->second = it->second + c;
    if (coeff_is_zero(it->second)) terms_.erase(it);
  }

  /// Coefficient of x^ex y^ey, or zero_value if absent.
  C coeff(unsigned ex, unsigned ey, const C& zero_value) const {
    auto it = terms_.find({ex, ey});
    return it == terms_.end() ? zero_value : it->second;
  }

  unsigned degree_x() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.x);
    return d;
  }
  unsigned degree_y() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.y);
    return d;
  }

  Poly2& operator+=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly2& operator-=(const Poly2& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term({ma.x + mb.x, ma.y + mb.y}, ca * cb);
    return r;
  }
  /// Multiplies every coefficient by c.
  Poly2 scaled(const C& c) const {
    Poly2 r;
    for (const auto& [m, v] : terms_) r.add_term(m, c * v);
    return r;
  }
  Poly2 shifted(unsigned dx, unsigned dy) const {
    Poly2 r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(Monomial{m.x + dx, m.y + dy}, v);
    return r;
  }
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

  /// Canonical text in graded-lex order, e.g. "x^2 + x + 2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      std::string mono = detail::power_string('x', m.x);
      std::string ys = detail::power_string('y', m.y);
      if (!ys.empty()) mono += (mono.empty() ? "" : " ") + ys;
      detail::append_term(out, c, mono);
    }
    return out;
  }

 private:
  term_map terms_;
};

using IntPoly2 = Poly2<mpz_class>;

/// Applies f to each coefficient.
template <Coefficient To, Coefficient From, class F>
Poly2<To> map_coefficients(const Poly2<From>& p, F&& f) {
  Poly2<To> r;
  for (const auto& [m, c] : p.terms()) r.add_term(m, f(c));
  return r;
}

/// p(x, y0) as a polynomial in x, for an integer y0.
template <Coefficient C>
Poly1<C> substitute_y(const Poly2<C>& p, const mpz_class& y0, const C& zero) {
  std::vector<C> out(p.degree_x() + 1, zero);
  for (const auto& [m, c] : p.terms()) {
    mpz_class yp;
    mpz_pow_ui(yp.get_mpz_t(), y0.get_mpz_t(), m.y);
    if (yp == 0) continue;
    out[m.x] = out[m.x] + coeff_from_integer(c, yp) * c;
  }
  return Poly1<C>(std::move(out));
}

inline mpz_class evaluate(const IntPoly2& p, const mpz_class& x, const mpz_class& y) {
  mpz_class acc = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_class xp, yp;
    mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), m.x);
    mpz_pow_ui(yp.get_mpz_t(), y.get_mpz_t(), m.y);
    acc += c * xp * yp;
  }
  return acc;
}

/// Integer Laurent polynomial sum c_k t^k, k possibly negative.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const IntPoly& p, long shift = 0) {  // NOLINT(google-explicit-constructor)
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) add(static_cast<long>(k) + shift, p.coeffs()[k]);
  }

  void add(long k, const mpz_class& c) {
    if (c == 0) return;
    auto& v = c_[k];
    v += c;
    if (v == 0) c_.erase(k);
  }

  bool is_zero() const { return c_.empty(); }
  long min_exponent() const { return c_.empty() ? 0 : c_.begin()->first; }
  const std::map<long, mpz_class>& terms() const { return c_; }

  /// Whether no negative exponent survives.
  bool is_polynomial() const { return c_.empty() || c_.begin()->first >= 0; }

  IntPoly to_polynomial() const {
    if (!is_polynomial()) throw consistency_error("Laurent polynomial has negative powers");
    if (c_.empty()) return {};
    std::vector<mpz_class> v(static_cast<std::size_t>(c_.rbegin()->first) + 1);
    for (const auto& [k, c] : c_) v[static_cast<std::size_t>(k)] = c;
    return IntPoly(std::move(v));
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.c_) add(k, c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [i, x] : a.c_)
      for (const auto& [j, y] : b.c_) r.add(i + j, x * y);
    return r;
  }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<long, mpz_class> c_;
};

}  // namespace gtpoly
