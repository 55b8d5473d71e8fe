#pragma once

#include "gtpoly/gtpoly.hpp"

namespace fixture {

using namespace gtpoly;

using G = QuadInt<Gaussian>;

// [[1, 1+i], [1+i, 0]] over Z[i]
inline Matrix<Gaussian> golden_matrix() { return {{G(1), G(1, 1)}, {G(1, 1), G(0)}}; }
inline RealizedMatroid<Gaussian> golden() { return realize(golden_matrix()); }

// Z + Z/2 at the empty set, columns (1,1), (2,0), (0,1)
inline RealizedMatroid<Integers> torsion_example() {
  std::vector<QuadInt<Integers>> t{QuadInt<Integers>(2)};
  return realize_with_torsion<Integers>(Matrix<Integers>{{1, 2, 0}, {1, 0, 1}}, t);
}

template <SupportedRing R>
ModuleClass<R> cls(std::size_t free, std::vector<QuadInt<R>> chain = {}) {
  return {free, std::move(chain)};
}

}  // namespace fixture
