#pragma once

/**
 * @file ring.hpp
 * @brief Exact arithmetic in Z, Z[i] and Z[w] (Eisenstein) and in their
 * fraction fields.
 *
 * Every supported ring is norm-Euclidean. An element is a + b*w with
 * arbitrary-precision coordinates, where w satisfies w^2 = p + q*w for the
 * ring's constants (p, q). For Z the second coordinate is always zero.
 */

#include <array>
#include <cctype>
#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "gtpoly/error.hpp"

namespace gtpoly {

enum class RingKind { integers, gaussian, eisenstein };

/// Rational integers.
struct Integers {
  static constexpr RingKind kind = RingKind::integers;
  static constexpr std::string_view name = "Z";
  static constexpr char symbol = '\0';
  static constexpr long omega_sq_const = 0;
  static constexpr long omega_sq_lin = 0;
  static constexpr std::array<std::array<long, 2>, 2> units{{{1, 0}, {-1, 0}}};

  static bool in_fundamental_domain(const mpz_class& a, const mpz_class&) { return a > 0; }
};

/// Gaussian integers, w = i, w^2 = -1.
struct Gaussian {
  static constexpr RingKind kind = RingKind::gaussian;
  static constexpr std::string_view name = "Z[i]";
  static constexpr char symbol = 'i';
  static constexpr long omega_sq_const = -1;
  static constexpr long omega_sq_lin = 0;
  static constexpr std::array<std::array<long, 2>, 4> units{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

  // first quadrant, positive real axis included
  static bool in_fundamental_domain(const mpz_class& a, const mpz_class& b) { return a > 0 && b >= 0; }
};

/// Eisenstein integers, w a primitive cube root of unity, w^2 = -1 - w.
struct Eisenstein {
  static constexpr RingKind kind = RingKind::eisenstein;
  static constexpr std::string_view name = "Z[w]";
  static constexpr char symbol = 'w';
  static constexpr long omega_sq_const = -1;
  static constexpr long omega_sq_lin = -1;
  static constexpr std::array<std::array<long, 2>, 6> units{
      {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}};

  // argument in [0, pi/3): a + b*w = (a - b) + b*(1 + w) with a - b > 0, b >= 0
  static bool in_fundamental_domain(const mpz_class& a, const mpz_class& b) { return a > b && b >= 0; }
};

template <class R>
concept SupportedRing = std::same_as<R, Integers> || std::same_as<R, Gaussian> || std::same_as<R, Eisenstein>;

inline std::string_view ring_name(RingKind k) {
  switch (k) {
    case RingKind::integers: return Integers::name;
    case RingKind::gaussian: return Gaussian::name;
    case RingKind::eisenstein: return Eisenstein::name;
  }
  return "?";
}

inline RingKind parse_ring_kind(std::string_view s) {
  if (s == "Z") return RingKind::integers;
  if (s == "Z[i]") return RingKind::gaussian;
  if (s == "Z[w]") return RingKind::eisenstein;
  throw parse_error("unknown ring '" + std::string(s) + "' (expected Z, Z[i] or Z[w])");
}

namespace detail {

// nearest integer to x / n for n > 0, halves rounded up
inline mpz_class round_div(const mpz_class& x, const mpz_class& n) {
  mpz_class num = 2 * x + n;
  mpz_class den = 2 * n;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

inline mpz_class floor_div(const mpz_class& x, const mpz_class& n) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
  return q;
}

}  // namespace detail

template <SupportedRing R>
class QuadInt {
 public:
  using ring_type = R;

  QuadInt() = default;
  QuadInt(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadInt(mpz_class a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadInt(mpz_class a, mpz_class b) : a_(std::move(a)), b_(std::move(b)) {
    if constexpr (R::kind == RingKind::integers) {
      if (b_ != 0) throw invalid_input("element with nonzero w-coordinate in Z");
    }
  }
  QuadInt(long a, long b) : QuadInt(mpz_class(a), mpz_class(b)) {}

  static QuadInt omega() requires(R::kind != RingKind::integers) { return QuadInt(0, 1); }

  const mpz_class& re() const { return a_; }
  const mpz_class& im() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return a_ == 1 && b_ == 0; }
  bool is_unit() const { return norm() == 1; }

  /// Absolute field norm, so that |R/(x)| = N(x): |a| over Z.
  mpz_class norm() const {
    if constexpr (R::kind == RingKind::integers) return abs(a_);
    else return a_ * a_ + R::omega_sq_lin * a_ * b_ - R::omega_sq_const * b_ * b_;
  }

  QuadInt conj() const {
    if constexpr (R::kind == RingKind::integers) return *this;
    else return QuadInt(mpz_class(a_ + R::omega_sq_lin * b_), mpz_class(-b_));
  }

  QuadInt operator-() const { return QuadInt(mpz_class(-a_), mpz_class(-b_)); }

  QuadInt& operator+=(const QuadInt& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadInt& operator-=(const QuadInt& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadInt& operator*=(const QuadInt& o) {
    if constexpr (R::kind == RingKind::integers) {
      a_ *= o.a_;
    } else {
      mpz_class bd = b_ * o.b_;
      mpz_class na = a_ * o.a_ + R::omega_sq_const * bd;
      mpz_class nb = a_ * o.b_ + b_ * o.a_ + R::omega_sq_lin * bd;
      a_ = std::move(na);
      b_ = std::move(nb);
    }
    return *this;
  }

  friend QuadInt operator+(QuadInt x, const QuadInt& y) { return x += y; }
  friend QuadInt operator-(QuadInt x, const QuadInt& y) { return x -= y; }
  friend QuadInt operator*(QuadInt x, const QuadInt& y) { return x *= y; }

  friend bool operator==(const QuadInt& x, const QuadInt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  // Lexicographic order on coordinates; only used to key containers.
  friend std::strong_ordering operator<=>(const QuadInt& x, const QuadInt& y) {
    int c = cmp(x.a_, y.a_);
    if (c == 0) c = cmp(x.b_, y.b_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  std::string to_string() const;

 private:
  mpz_class a_{0};
  mpz_class b_{0};
};

template <SupportedRing R>
std::ostream& operator<<(std::ostream& os, const QuadInt<R>& x) {
  return os << x.to_string();
}

template <SupportedRing R>
std::string QuadInt<R>::to_string() const {
  if constexpr (R::kind == RingKind::integers) {
    return a_.get_str();
  } else {
    if (b_ == 0) return a_.get_str();
    std::string imag;
    mpz_class mag = abs(b_);
    if (mag != 1) imag = mag.get_str();
    imag += R::symbol;
    if (a_ == 0) return (b_ < 0 ? "-" : "") + imag;
    return a_.get_str() + (b_ < 0 ? "-" : "+") + imag;
  }
}

/// Parses "a", "a+bi", "3-2i", "-w", "2i+1" (any signed sum of terms).
template <SupportedRing R>
QuadInt<R> parse_element(std::string_view text) {
  mpz_class a = 0, b = 0;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> QuadInt<R> {
    throw parse_error("cannot parse ring element '" + std::string(text) + "': " + why);
  };
  skip_ws();
  if (pos == text.size()) return fail("empty");
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      return fail("expected '+' or '-'");
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    mpz_class coeff = 1;
    bool has_digits = pos > start;
    if (has_digits) coeff = mpz_class(std::string(text.substr(start, pos - start)));
    skip_ws();
    bool has_symbol = false;
    if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
      if (R::symbol == '\0' || text[pos] != R::symbol) return fail(std::string("unexpected symbol '") + text[pos] + "'");
      has_symbol = true;
      ++pos;
      skip_ws();
    }
    if (!has_digits && !has_symbol) return fail("missing term");
    (has_symbol ? b : a) += sign * coeff;
    first = false;
  }
  return QuadInt<R>(a, b);
}

template <SupportedRing R>
std::span<const std::array<long, 2>> units() {
  return R::units;
}

/// Result of normalize_associate: unit * input == value.
template <SupportedRing R>
struct Associate {
  QuadInt<R> unit;
  QuadInt<R> value;
};

template <SupportedRing R>
Associate<R> normalize_associate(const QuadInt<R>& x) {
  if (x.is_zero()) return {QuadInt<R>(1), x};
  for (const auto& [ua, ub] : R::units) {
    QuadInt<R> u(ua, ub);
    QuadInt<R> y = u * x;
    if (R::in_fundamental_domain(y.re(), y.im())) return {u, y};
  }
  throw consistency_error("no associate in the fundamental domain for " + x.to_string());
}

template <SupportedRing R>
QuadInt<R> normalized(const QuadInt<R>& x) {
  return normalize_associate(x).value;
}

template <SupportedRing R>
QuadInt<R> unit_inverse(const QuadInt<R>& u) {
  if (!u.is_unit()) throw consistency_error(u.to_string() + " is not a unit");
  return u.conj();
}

template <SupportedRing R>
struct DivMod {
  QuadInt<R> quot;
  QuadInt<R> rem;
};

/// a = quot * b + rem with N(rem) < N(b); the quotient is a/b rounded
/// coordinate-wise to the nearest lattice point (halves up).
template <SupportedRing R>
DivMod<R> ring_divmod(const QuadInt<R>& a, const QuadInt<R>& b) {
  if (b.is_zero()) throw division_by_zero("division by zero in " + std::string(R::name));
  if constexpr (R::kind == RingKind::integers) {
    mpz_class q = detail::floor_div(a.re(), b.re());
    mpz_class r = a.re() - q * b.re();
    if (b.re() < 0 && r != 0) {  // keep 0 <= r < |b|
      q += 1;
      r = a.re() - q * b.re();
    }
    return {QuadInt<R>(q), QuadInt<R>(r)};
  } else {
    QuadInt<R> num = a * b.conj();
    mpz_class n = b.norm();
    QuadInt<R> q(detail::round_div(num.re(), n), detail::round_div(num.im(), n));
    return {q, a - q * b};
  }
}

template <SupportedRing R>
bool divides(const QuadInt<R>& d, const QuadInt<R>& a) {
  if (d.is_zero()) return a.is_zero();
  return ring_divmod(a, d).rem.is_zero();
}

template <SupportedRing R>
QuadInt<R> divexact(const QuadInt<R>& a, const QuadInt<R>& b) {
  auto [q, r] = ring_divmod(a, b);
  if (!r.is_zero()) throw consistency_error(b.to_string() + " does not divide " + a.to_string());
  return q;
}

/// Associate-normalized generator of the ideal (a, b).
template <SupportedRing R>
QuadInt<R> ring_gcd(QuadInt<R> a, QuadInt<R> b) {
  if (a.is_zero() && b.is_zero()) throw invalid_input("gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    QuadInt<R> r = ring_divmod(a, b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  return normalized(a);
}

/// Lattice of the principal ideal (d) in the Z-basis (1, w), in Hermite form:
/// spanned by (g1, 0) and (c, g2) with 0 <= c < g1 and g1 * g2 = N(d).
/// The box [0, g1) x [0, g2) is the canonical residue system of R/(d).
template <SupportedRing R>
class ResidueSystem {
 public:
  explicit ResidueSystem(const QuadInt<R>& d) : modulus_(d) {
    if (d.is_zero()) throw invalid_input("residue system of the zero ideal is infinite");
    if constexpr (R::kind == RingKind::integers) {
      g1_ = abs(d.re());
      g2_ = 1;
      c_ = 0;
    } else {
      QuadInt<R> dw = d * QuadInt<R>::omega();
      mpz_class g2, s, t;
      mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), d.im().get_mpz_t(), dw.im().get_mpz_t());
      g2_ = g2;
      g1_ = d.norm() / g2_;
      mpz_class c = s * d.re() + t * dw.re();
      mpz_fdiv_r(c_.get_mpz_t(), c.get_mpz_t(), g1_.get_mpz_t());
    }
  }

  const QuadInt<R>& modulus() const { return modulus_; }
  mpz_class size() const { return g1_ * g2_; }

  /// Canonical representative of x + (d).
  QuadInt<R> reduce(const QuadInt<R>& x) const {
    if constexpr (R::kind == RingKind::integers) {
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), x.re().get_mpz_t(), g1_.get_mpz_t());
      return QuadInt<R>(r);
    } else {
      mpz_class k = detail::floor_div(x.im(), g2_);
      mpz_class b = x.im() - k * g2_;
      mpz_class a = x.re() - k * c_;
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), g1_.get_mpz_t());
      return QuadInt<R>(r, b);
    }
  }

  /// The index-th representative, 0 <= index < size(); first coordinate varies fastest.
  QuadInt<R> representative(const mpz_class& index) const {
    mpz_class a, b;
    mpz_fdiv_qr(b.get_mpz_t(), a.get_mpz_t(), index.get_mpz_t(), g1_.get_mpz_t());
    if constexpr (R::kind == RingKind::integers) return QuadInt<R>(a);
    else return QuadInt<R>(a, b);
  }

 private:
  QuadInt<R> modulus_;
  mpz_class g1_, g2_, c_;
};

/// Element of the fraction field Q(R), kept with gcd(num, den) a unit and
/// den associate-normalized.
template <SupportedRing R>
class RingFraction {
 public:
  RingFraction() : num_(0), den_(1) {}
  RingFraction(QuadInt<R> n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RingFraction(QuadInt<R> n, QuadInt<R> d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw division_by_zero("fraction with zero denominator");
    canonicalize();
  }

  const QuadInt<R>& num() const { return num_; }
  const QuadInt<R>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return den_.is_one(); }

  RingFraction& operator+=(const RingFraction& o) { return *this = RingFraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
  RingFraction& operator-=(const RingFraction& o) { return *this = RingFraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
  RingFraction& operator*=(const RingFraction& o) { return *this = RingFraction(num_ * o.num_, den_ * o.den_); }
  RingFraction& operator/=(const RingFraction& o) {
    if (o.is_zero()) throw division_by_zero("fraction division by zero");
    return *this = RingFraction(num_ * o.den_, den_ * o.num_);
  }
  friend RingFraction operator+(RingFraction x, const RingFraction& y) { return x += y; }
  friend RingFraction operator-(RingFraction x, const RingFraction& y) { return x -= y; }
  friend RingFraction operator*(RingFraction x, const RingFraction& y) { return x *= y; }
  friend RingFraction operator/(RingFraction x, const RingFraction& y) { return x /= y; }
  RingFraction operator-() const { return RingFraction(-num_, den_); }
  friend bool operator==(const RingFraction& x, const RingFraction& y) { return x.num_ == y.num_ && x.den_ == y.den_; }

  std::string to_string() const {
    if (is_integral()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void canonicalize() {
    if (num_.is_zero()) {
      den_ = QuadInt<R>(1);
      return;
    }
    QuadInt<R> g = ring_gcd(num_, den_);
    num_ = divexact(num_, g);
    den_ = divexact(den_, g);
    auto [u, d] = normalize_associate(den_);
    num_ *= u;
    den_ = std::move(d);
  }

  QuadInt<R> num_;
  QuadInt<R> den_;
};

/// Dispatches a generic callable on the ring type named by a RingKind.
template <class F>
decltype(auto) visit_ring(RingKind kind, F&& f) {
  switch (kind) {
    case RingKind::integers: return std::forward<F>(f)(Integers{});
    case RingKind::gaussian: return std::forward<F>(f)(Gaussian{});
    case RingKind::eisenstein: return std::forward<F>(f)(Eisenstein{});
  }
  throw invalid_input("unknown ring kind");
}

}  // namespace gtpoly
