#pragma once

/**
 * @file elliptic.hpp
 * @brief Central elliptic arrangements with endomorphism ring R: the elliptic
 * Tutte polynomial T^e and Bibby's series t^n T^e(1 + (1+t)^2/t, 0).
 *
 * Column i of the matrix is the isogeny l_i : E^d -> E; the multiplicity of a
 * set S is m(S) = |tor(R^d / (l_i : i ∈ S))|.
 */

#include <cstddef>
#include <utility>

#include "gtpoly/error.hpp"
#include "gtpoly/matroid.hpp"
#include "gtpoly/tutte.hpp"

namespace gtpoly {

template <SupportedRing R>
struct EllipticArrangement {
  Matrix<R> matrix;  ///< d x n

  std::size_t ambient_power() const { return matrix.rows(); }
  std::size_t size() const { return matrix.cols(); }
  RealizedMatroid<R> matroid() const { return realize(matrix); }
};

/// Σ_S m(S) (x-1)^{r' - rk S} (y-1)^{|S| - rk S}, summed directly over
/// multiplicities.
template <SupportedRing R>
IntPoly2 multiplicity_sum(const RealizedMatroid<R>& m) {
  IntPoly2 out;
  const std::size_t r = m.rank();
  for (Subset s = 0; s <= m.ground(); ++s) {
    std::size_t rk = m.generic_rank(s);
    IntPoly2 term = IntPoly2::monomial(torsion_cardinality(m.class_of(s)), 0, 0);
    IntPoly2 xm1, ym1;
    xm1.add_term({1, 0}, 1);
    xm1.add_term({0, 0}, -1);
    ym1.add_term({0, 1}, 1);
    ym1.add_term({0, 0}, -1);
    for (std::size_t k = rk; k < r; ++k) term = term * xm1;
    for (std::size_t k = rk; k < subset_size(s); ++k) term = term * ym1;
    out += term;
    if (s == m.ground()) break;
  }
  return out;
}

/// T^e, which coincides with φ̃ of the Grothendieck-Tutte polynomial.
template <SupportedRing R>
IntPoly2 elliptic_tutte(const EllipticArrangement<R>& e) {
  auto m = e.matroid();
  IntPoly2 via_groth = tutte_numeric(m);
  if (via_groth != multiplicity_sum(m))
    throw consistency_error("elliptic Tutte polynomial differs from the Grothendieck-Tutte evaluation");
  return via_groth;
}

/// t^n T^e(x, 0) at x = (1 + 3t + t^2)/t. Throws if negative powers survive.
inline IntPoly bibby_from_tutte(const IntPoly2& te, std::size_t n) {
  IntPoly tx0 = substitute_y(te, 0, mpz_class(0));
  const LaurentPoly x(IntPoly(std::vector<mpz_class>{1, 3, 1}), -1);
  LaurentPoly power(IntPoly(mpz_class(1)), static_cast<long>(n));
  LaurentPoly acc;
  for (std::size_t k = 0; k < tx0.coeffs().size(); ++k) {
    acc += power * LaurentPoly(IntPoly(tx0.coeffs()[k]));
    power = power * x;
  }
  if (!acc.is_polynomial()) throw consistency_error("Bibby series kept negative powers of t");
  return acc.to_polynomial();
}

template <SupportedRing R>
IntPoly bibby_series(const EllipticArrangement<R>& e) {
  return bibby_from_tutte(elliptic_tutte(e), e.size());
}

template <SupportedRing R>
mpz_class euler_characteristic(const EllipticArrangement<R>& e) {
  return evaluate(bibby_series(e), -1);
}

}  // namespace gtpoly
