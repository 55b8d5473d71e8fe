#pragma once

/**
 * @file module.hpp
 * @brief Smith normal form and the structure of finitely generated modules
 * over the supported principal ideal domains.
 *
 * A cokernel R^d / (columns) is classified by its free rank and its
 * invariant-factor chain d_1 | d_2 | ... | d_m (non-units, associate
 * normalized), so two modules are isomorphic iff their ModuleClass values
 * compare equal. No prime factorization is ever needed.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gtpoly/error.hpp"
#include "gtpoly/matrix.hpp"
#include "gtpoly/ring.hpp"

namespace gtpoly {

template <SupportedRing R>
struct SnfDecomposition {
  Matrix<R> left;          ///< d x d, unit determinant
  Matrix<R> left_inverse;  ///< inverse of left
  Matrix<R> right;         ///< n x n, unit determinant
  /// min(d, n) entries; nonzero ones normalized and forming a divisibility
  /// chain, zeros last.
  std::vector<QuadInt<R>> diag;

  std::size_t rank() const {
    return static_cast<std::size_t>(std::count_if(diag.begin(), diag.end(), [](const auto& x) { return !x.is_zero(); }));
  }
};

/// Smith normal form with a fixed pivot rule: the smallest-norm nonzero entry
/// of the remaining block, ties broken by row-major position. With
/// track_transforms = false only diag is filled.
template <SupportedRing R>
SnfDecomposition<R> smith_normal_form(const Matrix<R>& m, bool track_transforms = true) {
  using E = QuadInt<R>;
  const std::size_t d = m.rows(), n = m.cols();
  Matrix<R> a = m;
  SnfDecomposition<R> out;
  if (track_transforms) {
    out.left = Matrix<R>::identity(d);
    out.left_inverse = Matrix<R>::identity(d);
    out.right = Matrix<R>::identity(n);
  }
  auto row_swap = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    if (track_transforms) {
      out.left.swap_rows(i, j);
      out.left_inverse.swap_cols(i, j);
    }
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    if (track_transforms) out.right.swap_cols(i, j);
  };
  // row[dst] += f * row[src]
  auto row_add = [&](std::size_t dst, std::size_t src, const E& f) {
    a.add_row_multiple(dst, src, f);
    if (track_transforms) {
      out.left.add_row_multiple(dst, src, f);
      out.left_inverse.add_col_multiple(src, dst, -f);
    }
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const E& f) {
    a.add_col_multiple(dst, src, f);
    if (track_transforms) out.right.add_col_multiple(dst, src, f);
  };

  const std::size_t steps = std::min(d, n);
  std::size_t t = 0;
  for (; t < steps; ++t) {
    for (;;) {
      // pivot: smallest norm in the block [t.., t..]
      bool found = false;
      std::size_t pi = 0, pj = 0;
      mpz_class best;
      for (std::size_t i = t; i < d; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (a(i, j).is_zero()) continue;
          mpz_class nm = a(i, j).norm();
          if (!found || nm < best) {
            found = true;
            best = nm;
            pi = i;
            pj = j;
          }
        }
      if (!found) break;
      row_swap(t, pi);
      col_swap(t, pj);

      bool residue = false;
      for (std::size_t i = t + 1; i < d; ++i) {
        if (a(i, t).is_zero()) continue;
        auto [q, r] = ring_divmod(a(i, t), a(t, t));
        if (!q.is_zero()) row_add(i, t, -q);
        if (!r.is_zero()) residue = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j).is_zero()) continue;
        auto [q, r] = ring_divmod(a(t, j), a(t, t));
        if (!q.is_zero()) col_add(j, t, -q);
        if (!r.is_zero()) residue = true;
      }
      if (residue) continue;  // a remainder of smaller norm becomes the next pivot

      bool fixed = false;
      for (std::size_t i = t + 1; i < d && !fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!divides(a(t, t), a(i, j))) {
            row_add(t, i, E(1));
            fixed = true;
            break;
          }
        }
      if (!fixed) break;
    }
    if (a(t, t).is_zero()) break;
    auto [u, v] = normalize_associate(a(t, t));
    if (!u.is_one()) {
      a.scale_row(t, u);
      if (track_transforms) {
        out.left.scale_row(t, u);
        out.left_inverse.scale_col(t, unit_inverse(u));
      }
    }
  }
  out.diag.resize(steps);
  for (std::size_t k = 0; k < steps; ++k) out.diag[k] = a(k, k);
  return out;
}

/// Isomorphism class of a finitely generated module: R^free_rank plus the
/// torsion chain (normalized non-units, each dividing the next).
template <SupportedRing R>
struct ModuleClass {
  std::size_t free_rank = 0;
  std::vector<QuadInt<R>> torsion_chain;

  bool is_zero() const { return free_rank == 0 && torsion_chain.empty(); }
  bool is_torsion_free() const { return torsion_chain.empty(); }
  ModuleClass torsion_part() const { return {0, torsion_chain}; }

  friend bool operator==(const ModuleClass&, const ModuleClass&) = default;
  friend std::strong_ordering operator<=>(const ModuleClass& x, const ModuleClass& y) {
    if (auto c = x.free_rank <=> y.free_rank; c != 0) return c;
    if (auto c = x.torsion_chain.size() <=> y.torsion_chain.size(); c != 0) return c;
    for (std::size_t i = 0; i < x.torsion_chain.size(); ++i)
      if (auto c = x.torsion_chain[i] <=> y.torsion_chain[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  /// "[0]", "[R]", "[R^2]", "[R/(1+i)]", "[R/2]", "[R ⊕ R/2 ⊕ R/4]".
  std::string to_string() const {
    if (is_zero()) return "[0]";
    std::vector<std::string> parts;
    if (free_rank == 1) parts.emplace_back("R");
    else if (free_rank > 1) parts.push_back("R^" + std::to_string(free_rank));
    for (const auto& d : torsion_chain) {
      std::string s = d.to_string();
      bool compound = s.find_first_of("+-", 1) != std::string::npos || s.front() == '-';
      parts.push_back(compound ? "R/(" + s + ")" : "R/" + s);
    }
    std::string out = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " ⊕ " : "") + parts[i];
    return out + "]";
  }
};

/// Builds a class from any list of diagonal entries (units dropped, zeros
/// counted as free summands), recomputing the invariant-factor chain.
template <SupportedRing R>
ModuleClass<R> class_of_diagonal(std::span<const QuadInt<R>> entries, std::size_t extra_free = 0) {
  ModuleClass<R> c;
  c.free_rank = extra_free;
  std::vector<QuadInt<R>> nonzero;
  for (const auto& e : entries) {
    if (e.is_zero()) ++c.free_rank;
    else if (!e.is_unit()) nonzero.push_back(e);
  }
  if (nonzero.empty()) return c;
  Matrix<R> m(nonzero.size(), nonzero.size());
  for (std::size_t i = 0; i < nonzero.size(); ++i) m(i, i) = nonzero[i];
  auto snf = smith_normal_form(m, false);
  for (const auto& d : snf.diag)
    if (!d.is_unit()) c.torsion_chain.push_back(d);
  return c;
}

/// Class of M ⊕ N.
template <SupportedRing R>
ModuleClass<R> direct_sum(const ModuleClass<R>& x, const ModuleClass<R>& y) {
  if (x.torsion_chain.empty()) return {x.free_rank + y.free_rank, y.torsion_chain};
  if (y.torsion_chain.empty()) return {x.free_rank + y.free_rank, x.torsion_chain};
  std::vector<QuadInt<R>> all = x.torsion_chain;
  all.insert(all.end(), y.torsion_chain.begin(), y.torsion_chain.end());
  return class_of_diagonal<R>(all, x.free_rank + y.free_rank);
}

/// |tor| = product of N(d_j) = |R/(d_j)|. Always finite: chain entries are nonzero and
/// every residue ring R/(d) of a supported ring is finite.
template <SupportedRing R>
mpz_class torsion_cardinality(std::span<const QuadInt<R>> chain) {
  mpz_class c = 1;
  for (const auto& d : chain) c *= d.norm();
  return c;
}

template <SupportedRing R>
mpz_class torsion_cardinality(const ModuleClass<R>& c) {
  return torsion_cardinality<R>(c.torsion_chain);
}

/// Explicit coordinates for tor(R^d / (columns)).
///
/// With L * N * Q = D the Smith form of the column matrix N, the map
/// x -> L x identifies the cokernel with ⊕ R/(D_kk). Generator g_j of the j-th
/// cyclic torsion summand is the matching column of L^{-1} (an integral lift
/// in R^d), and its order is chain[j].
template <SupportedRing R>
struct TorsionPresentation {
  std::size_t ambient_rank = 0;
  std::vector<QuadInt<R>> chain;
  Matrix<R> generators;   ///< ambient_rank x m
  Matrix<R> coordinates;  ///< m x ambient_rank: torsion coordinates of a vector
  Matrix<R> free_coordinates;  ///< f x ambient_rank: free coordinates of a vector
  std::vector<ResidueSystem<R>> residues;

  std::size_t size() const { return chain.size(); }

  /// Torsion coordinates (reduced) of the class of v. Throws if v is not a
  /// torsion element of the cokernel.
  std::vector<QuadInt<R>> torsion_coordinates(std::span<const QuadInt<R>> v) const {
    for (std::size_t k = 0; k < free_coordinates.rows(); ++k) {
      QuadInt<R> s;
      for (std::size_t i = 0; i < ambient_rank; ++i) s += free_coordinates(k, i) * v[i];
      if (!s.is_zero()) throw consistency_error("vector is not torsion in the cokernel");
    }
    std::vector<QuadInt<R>> out(chain.size());
    for (std::size_t k = 0; k < chain.size(); ++k) {
      QuadInt<R> s;
      for (std::size_t i = 0; i < ambient_rank; ++i) s += coordinates(k, i) * v[i];
      out[k] = residues[k].reduce(s);
    }
    return out;
  }

  std::vector<QuadInt<R>> generator(std::size_t j) const { return generators.column(j); }
};

template <SupportedRing R>
struct Cokernel {
  ModuleClass<R> module_class;
  TorsionPresentation<R> presentation;
};

/// Class and coordinate presentation of R^ambient_rank / (columns of gens).
template <SupportedRing R>
Cokernel<R> cokernel_class(std::size_t ambient_rank, const Matrix<R>& gens) {
  if (gens.cols() != 0 && gens.rows() != ambient_rank) throw invalid_input("generator length does not match ambient rank");
  Matrix<R> n = gens.cols() == 0 ? Matrix<R>(ambient_rank, 0) : gens;
  auto snf = smith_normal_form(n);
  Cokernel<R> out;
  auto& p = out.presentation;
  p.ambient_rank = ambient_rank;
  std::vector<std::size_t> torsion_rows, free_rows;
  for (std::size_t k = 0; k < ambient_rank; ++k) {
    const bool zero = k >= snf.diag.size() || snf.diag[k].is_zero();
    if (zero) free_rows.push_back(k);
    else if (!snf.diag[k].is_unit()) torsion_rows.push_back(k);
  }
  out.module_class.free_rank = free_rows.size();
  for (auto k : torsion_rows) {
    out.module_class.torsion_chain.push_back(snf.diag[k]);
    p.residues.emplace_back(snf.diag[k]);
  }
  p.chain = out.module_class.torsion_chain;
  p.generators = Matrix<R>(ambient_rank, torsion_rows.size());
  p.coordinates = Matrix<R>(torsion_rows.size(), ambient_rank);
  p.free_coordinates = Matrix<R>(free_rows.size(), ambient_rank);
  for (std::size_t j = 0; j < torsion_rows.size(); ++j)
    for (std::size_t i = 0; i < ambient_rank; ++i) {
      p.generators(i, j) = snf.left_inverse(i, torsion_rows[j]);
      p.coordinates(j, i) = snf.left(torsion_rows[j], i);
    }
  for (std::size_t j = 0; j < free_rows.size(); ++j)
    for (std::size_t i = 0; i < ambient_rank; ++i) p.free_coordinates(j, i) = snf.left(free_rows[j], i);
  return out;
}

template <SupportedRing R>
Cokernel<R> cokernel_class(std::size_t ambient_rank, std::span<const std::vector<QuadInt<R>>> columns) {
  return cokernel_class(ambient_rank, Matrix<R>::from_columns(ambient_rank, columns));
}

/// Whether v lies in the R-span of the columns of m (exact, via Smith form).
template <SupportedRing R>
bool in_column_span(const Matrix<R>& m, std::span<const QuadInt<R>> v) {
  if (v.size() != m.rows()) throw invalid_input("vector length mismatch");
  if (m.cols() == 0) return std::all_of(v.begin(), v.end(), [](const auto& x) { return x.is_zero(); });
  auto snf = smith_normal_form(m);
  auto lv = snf.left.apply(v);
  for (std::size_t k = 0; k < lv.size(); ++k) {
    const bool zero = k >= snf.diag.size() || snf.diag[k].is_zero();
    if (zero ? !lv[k].is_zero() : !divides(snf.diag[k], lv[k])) return false;
  }
  return true;
}

inline constexpr unsigned long default_torsion_bound = 1'000'000;

/// All residue tuples (r_1 mod d_1, ..., r_m mod d_m) over the canonical
/// residue systems, first component varying fastest.
template <SupportedRing R>
std::vector<std::vector<QuadInt<R>>> enumerate_torsion(std::span<const QuadInt<R>> chain,
                                                       unsigned long bound = default_torsion_bound) {
  mpz_class card = torsion_cardinality(chain);
  if (card > bound) throw torsion_too_large(card);
  std::vector<ResidueSystem<R>> systems;
  for (const auto& d : chain) systems.emplace_back(d);
  const unsigned long total = card.get_ui();
  std::vector<std::vector<QuadInt<R>>> out;
  out.reserve(total);
  for (unsigned long idx = 0; idx < total; ++idx) {
    std::vector<QuadInt<R>> tuple(chain.size());
    unsigned long rest = idx;
    for (std::size_t j = 0; j < chain.size(); ++j) {
      unsigned long sz = systems[j].size().get_ui();
      tuple[j] = systems[j].representative(mpz_class(rest % sz));
      rest /= sz;
    }
    out.push_back(std::move(tuple));
  }
  return out;
}

template <SupportedRing R>
std::vector<std::vector<QuadInt<R>>> enumerate_torsion(const TorsionPresentation<R>& p,
                                                       unsigned long bound = default_torsion_bound) {
  return enumerate_torsion<R>(p.chain, bound);
}

}  // namespace gtpoly
