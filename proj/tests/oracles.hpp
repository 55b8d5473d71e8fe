#pragma once

// Brute-force reference computations used to cross-check the library.
// Nothing here calls Smith normal form, the poset builder or the Tutte code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "gtpoly/gtpoly.hpp"

namespace oracle {

using namespace gtpoly;

// Element p + q*w of the fraction field Q(w), w^2 = c0 + c1*w.
template <SupportedRing R>
struct Frac {
  mpq_class p = 0, q = 0;

  static Frac from(const QuadInt<R>& x) { return {mpq_class(x.re()), mpq_class(x.im())}; }
  bool zero() const { return p == 0 && q == 0; }
  friend Frac operator-(const Frac& a, const Frac& b) { return {a.p - b.p, a.q - b.q}; }
  friend Frac operator*(const Frac& a, const Frac& b) {
    const mpq_class c0 = R::omega_sq_const, c1 = R::omega_sq_lin;
    mpq_class qq = a.q * b.q;
    return {a.p * b.p + c0 * qq, a.p * b.q + a.q * b.p + c1 * qq};
  }
  Frac inverse() const {
    // conj(p + q w) = (p + c1 q) - q w ; x * conj(x) is rational
    const mpq_class c1 = R::omega_sq_lin;
    Frac conj{p + c1 * q, -q};
    Frac n = *this * conj;
    return {conj.p / n.p, conj.q / n.p};
  }
};

/// Rank over the fraction field by plain Gaussian elimination.
template <SupportedRing R>
std::size_t rank(const Matrix<R>& m, const std::vector<std::size_t>& cols) {
  const std::size_t d = m.rows();
  std::vector<std::vector<Frac<R>>> a(d, std::vector<Frac<R>>(cols.size()));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) a[i][j] = Frac<R>::from(m(i, cols[j]));
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols.size() && r < d; ++j) {
    std::size_t p = r;
    while (p < d && a[p][j].zero()) ++p;
    if (p == d) continue;
    std::swap(a[p], a[r]);
    Frac<R> inv = a[r][j].inverse();
    for (std::size_t i = r + 1; i < d; ++i) {
      if (a[i][j].zero()) continue;
      Frac<R> f = a[i][j] * inv;
      for (std::size_t k = j; k < cols.size(); ++k) a[i][k] = a[i][k] - f * a[r][k];
    }
    ++r;
  }
  return r;
}

inline std::vector<std::size_t> members(std::uint64_t s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 64; ++i)
    if ((s >> i) & 1U) out.push_back(i);
  return out;
}

/// Σ_A (x-1)^{r - rk A} (y-1)^{|A| - rk A}, expanded term by term.
template <SupportedRing R>
IntPoly2 corank_nullity(const Matrix<R>& m) {
  const std::size_t n = m.cols();
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  const std::size_t r = rank(m, all);
  std::map<std::pair<unsigned, unsigned>, mpz_class> acc;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    auto cols = members(s);
    std::size_t rk = rank(m, cols);
    unsigned a = static_cast<unsigned>(r - rk), b = static_cast<unsigned>(cols.size() - rk);
    // binomial expansion of (x-1)^a (y-1)^b
    for (unsigned i = 0; i <= a; ++i)
      for (unsigned j = 0; j <= b; ++j) {
        mpz_class c;
        mpz_class bi, bj;
        mpz_bin_uiui(bi.get_mpz_t(), a, i);
        mpz_bin_uiui(bj.get_mpz_t(), b, j);
        c = bi * bj * ((((a - i) + (b - j)) % 2) ? -1 : 1);
        acc[{i, j}] += c;
      }
  }
  IntPoly2 out;
  for (const auto& [k, c] : acc) out.add_term({k.first, k.second}, c);
  return out;
}

/// Determinant by the Leibniz formula (for k <= 6).
inline mpz_class leibniz(const std::vector<std::vector<mpz_class>>& a) {
  const std::size_t k = a.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  mpz_class det = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    mpz_class prod = 1;
    for (std::size_t i = 0; i < k; ++i) prod *= a[i][perm[i]];
    det += inversions % 2 ? -prod : prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

inline void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// For an integer matrix and a column set of rank k: gcd of all k x k minors
/// of the submatrix, which is the order of the torsion of Z^d / (columns).
inline mpz_class gcd_of_minors(const Matrix<Integers>& m, const std::vector<std::size_t>& cols, std::size_t k) {
  if (k == 0) return 1;
  std::vector<std::vector<std::size_t>> row_sets, col_sets;
  std::vector<std::size_t> cur;
  choose(m.rows(), k, 0, cur, row_sets);
  choose(cols.size(), k, 0, cur, col_sets);
  mpz_class g = 0;
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) {
      std::vector<std::vector<mpz_class>> a(k, std::vector<mpz_class>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a[i][j] = m(rs[i], cols[cs[j]]).re();
      mpz_class det = leibniz(a);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
    }
  return g;
}

/// Arithmetic Tutte polynomial over Z with multiplicities from minors.
inline IntPoly2 toric_tutte(const Matrix<Integers>& m) {
  const std::size_t n = m.cols();
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  const std::size_t r = rank(m, all);
  IntPoly2 out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    auto cols = members(s);
    std::size_t rk = rank(m, cols);
    mpz_class mult = gcd_of_minors(m, cols, rk);
    unsigned a = static_cast<unsigned>(r - rk), b = static_cast<unsigned>(cols.size() - rk);
    for (unsigned i = 0; i <= a; ++i)
      for (unsigned j = 0; j <= b; ++j) {
        mpz_class bi, bj;
        mpz_bin_uiui(bi.get_mpz_t(), a, i);
        mpz_bin_uiui(bj.get_mpz_t(), b, j);
        out.add_term({i, j}, mult * bi * bj * ((((a - i) + (b - j)) % 2) ? -1 : 1));
      }
  }
  return out;
}

/// t^n T(1 + (1+t)^2/t, 0), expanded with exponents shifted by n so they
/// never go negative during the computation.
inline std::map<long, mpz_class> bibby_expansion(const IntPoly2& t, std::size_t n) {
  std::map<long, mpz_class> out;
  for (const auto& [mono, c] : t.terms()) {
    if (mono.y != 0) continue;  // y = 0
    // x^k = (1 + 3t + t^2)^k t^{-k}
    std::map<long, mpz_class> p{{0, 1}};
    for (unsigned i = 0; i < mono.x; ++i) {
      std::map<long, mpz_class> q;
      for (const auto& [e, v] : p) {
        q[e] += v;
        q[e + 1] += 3 * v;
        q[e + 2] += v;
      }
      p = q;
    }
    for (const auto& [e, v] : p) out[e - static_cast<long>(mono.x) + static_cast<long>(n)] += c * v;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// A small divisor search: every element of norm <= bound that divides x.
template <SupportedRing R>
std::vector<QuadInt<R>> small_divisors(const QuadInt<R>& x, long bound) {
  std::vector<QuadInt<R>> out;
  const long lim = bound + 1;
  for (long a = -lim; a <= lim; ++a)
    for (long b = (R::kind == RingKind::integers ? 0 : -lim); b <= (R::kind == RingKind::integers ? 0 : lim); ++b) {
      QuadInt<R> d(a, b);
      if (d.is_zero() || d.norm() > bound) continue;
      // d | x iff x * conj(d) / N(d) is integral
      QuadInt<R> prod = x * d.conj();
      mpz_class n = d.norm();
      if (R::kind == RingKind::integers) {
        if (x.re() % d.re() == 0) out.push_back(d);
      } else if (prod.re() % n == 0 && prod.im() % n == 0) {
        out.push_back(d);
      }
    }
  return out;
}

/// Dimension of the degree-N part of K[x_v] / I_P over F_p, with x of the
/// minimum set to 1 and variable degrees equal to ranks. The ideal is rebuilt
/// here from the order relation: x_a x_b - x_{a∧b} Σ_{c minimal above a,b} x_c.
template <SupportedRing R>
std::size_t face_ring_dimension(const TorsionPoset<R>& p, std::size_t degree) {
  using u64 = std::uint64_t;
  constexpr u64 prime = 1'000'000'007ULL;
  const std::size_t n = p.size();
  // transitive closure from covers
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = 1;
  for (auto [lo, hi] : p.covers()) le[lo][hi] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = 1;
  std::size_t minimum = n;
  for (std::size_t i = 0; i < n && minimum == n; ++i)
    if (std::all_of(le[i].begin(), le[i].end(), [](char c) { return c != 0; })) minimum = i;
  std::vector<std::size_t> deg(n);
  for (std::size_t i = 0; i < n; ++i) deg[i] = p.rank(i) - p.rank(minimum);

  using Mono = std::vector<std::size_t>;  // sorted variable list, minimum excluded
  auto canon = [&](Mono m) {
    m.erase(std::remove(m.begin(), m.end(), minimum), m.end());
    std::sort(m.begin(), m.end());
    return m;
  };
  // all monomials of each degree
  std::vector<std::vector<Mono>> by_degree(degree + 1);
  std::function<void(std::size_t, std::size_t, Mono&)> gen = [&](std::size_t start, std::size_t d, Mono& cur) {
    by_degree[d].push_back(cur);
    for (std::size_t v = start; v < n; ++v) {
      if (v == minimum || deg[v] == 0 || d + deg[v] > degree) continue;
      cur.push_back(v);
      gen(v, d + deg[v], cur);
      cur.pop_back();
    }
  };
  Mono empty;
  gen(0, 0, empty);
  std::map<Mono, std::size_t> column;
  for (const auto& m : by_degree[degree]) column.emplace(m, column.size());

  // generators as sparse polynomials
  using Poly = std::map<Mono, long>;
  std::vector<std::pair<Poly, std::size_t>> gens;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (le[a][b] || le[b][a]) continue;
      Poly g;
      g[canon({a, b})] += 1;
      std::vector<std::size_t> lower, upper;
      for (std::size_t c = 0; c < n; ++c) {
        if (le[c][a] && le[c][b]) lower.push_back(c);
        if (le[a][c] && le[b][c]) upper.push_back(c);
      }
      std::optional<std::size_t> meet;
      for (auto c : lower)
        if (std::all_of(lower.begin(), lower.end(), [&](std::size_t d) { return le[d][c]; })) meet = c;
      if (meet)
        for (auto c : upper)
          if (std::none_of(upper.begin(), upper.end(), [&](std::size_t d) { return d != c && le[d][c]; }))
            g[canon({*meet, c})] -= 1;
      for (auto it = g.begin(); it != g.end();) it = it->second == 0 ? g.erase(it) : std::next(it);
      if (!g.empty()) gens.emplace_back(std::move(g), deg[a] + deg[b]);
    }

  // rows: multiples m * g landing in the requested degree
  std::vector<std::vector<u64>> rows;
  for (const auto& [g, gd] : gens) {
    if (gd > degree) continue;
    for (const auto& m : by_degree[degree - gd]) {
      std::vector<u64> row(column.size(), 0);
      for (const auto& [mono, c] : g) {
        Mono prod = mono;
        prod.insert(prod.end(), m.begin(), m.end());
        prod = canon(prod);
        row[column.at(prod)] = (row[column.at(prod)] + (c < 0 ? prime - 1 : 1)) % prime;
      }
      rows.push_back(std::move(row));
    }
  }
  auto inv = [&](u64 a) {
    u64 r = 1, e = prime - 2;
    while (e) {
      if (e & 1) r = static_cast<u64>((__uint128_t)r * a % prime);
      a = static_cast<u64>((__uint128_t)a * a % prime);
      e >>= 1;
    }
    return r;
  };
  std::size_t rk = 0;
  for (std::size_t j = 0; j < column.size() && rk < rows.size(); ++j) {
    std::size_t piv = rk;
    while (piv < rows.size() && rows[piv][j] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rk]);
    u64 iv = inv(rows[rk][j]);
    for (std::size_t i = rk + 1; i < rows.size(); ++i) {
      if (rows[i][j] == 0) continue;
      u64 f = static_cast<u64>((__uint128_t)rows[i][j] * iv % prime);
      for (std::size_t k = j; k < column.size(); ++k)
        rows[i][k] = (rows[i][k] + prime - static_cast<u64>((__uint128_t)f * rows[rk][k] % prime)) % prime;
    }
    ++rk;
  }
  return column.size() - rk;
}

}  // namespace oracle
