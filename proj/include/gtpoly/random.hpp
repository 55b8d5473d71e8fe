#pragma once

/**
 * @file random.hpp
 * @brief Seeded random instances: small matrices over each ring, optionally
 * with torsion at the empty set, and totally unimodular integer matrices.
 */

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "gtpoly/matroid.hpp"

namespace gtpoly {

struct RandomBounds {
  std::size_t max_rows = 4;
  std::size_t max_cols = 6;
  long entry_bound = 3;
  double zero_probability = 0.4;
};

template <SupportedRing R>
struct RandomInstance {
  Matrix<R> matrix;
  std::vector<QuadInt<R>> torsion_at_empty;

  RealizedMatroid<R> matroid() const {
    if (torsion_at_empty.empty()) return realize(matrix);
    return realize_with_torsion(matrix, std::span<const QuadInt<R>>(torsion_at_empty));
  }
};

template <SupportedRing R>
QuadInt<R> random_element(std::mt19937_64& rng, long bound, double zero_probability = 0.0) {
  if (std::bernoulli_distribution(zero_probability)(rng)) return {};
  std::uniform_int_distribution<long> coord(-bound, bound);
  long a = coord(rng);
  long b = R::kind == RingKind::integers ? 0 : coord(rng);
  return QuadInt<R>(a, b);
}

template <SupportedRing R>
Matrix<R> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, const RandomBounds& b = {}) {
  Matrix<R> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_element<R>(rng, b.entry_bound, b.zero_probability);
  return m;
}

/// d in [1, max_rows], n in [1, max_cols]. With torsion_rows > 0 the last
/// rows carry coordinates in torsion summands R/(t) for random non-units t.
template <SupportedRing R>
RandomInstance<R> random_instance(std::mt19937_64& rng, const RandomBounds& b = {}, std::size_t torsion_rows = 0) {
  std::size_t d = std::uniform_int_distribution<std::size_t>(1, b.max_rows)(rng);
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, b.max_cols)(rng);
  RandomInstance<R> out;
  out.matrix = random_matrix<R>(rng, d + torsion_rows, n, b);
  while (out.torsion_at_empty.size() < torsion_rows) {
    auto t = random_element<R>(rng, 2);
    if (!t.is_zero() && !t.is_unit()) out.torsion_at_empty.push_back(normalized(t));
  }
  return out;
}

/// Incidence matrix of a random directed multigraph on v vertices with its
/// last row dropped. Totally unimodular, so every M(A) is torsion-free.
inline Matrix<Integers> random_unimodular_matrix(std::mt19937_64& rng, std::size_t max_vertices = 5, std::size_t max_edges = 6) {
  std::size_t v = std::uniform_int_distribution<std::size_t>(2, max_vertices)(rng);
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_edges)(rng);
  std::uniform_int_distribution<std::size_t> vert(0, v - 1);
  Matrix<Integers> m(v - 1, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t tail = vert(rng), head = vert(rng);
    if (tail == head) continue;  // a graph loop: zero column
    if (tail < v - 1) m(tail, j) = QuadInt<Integers>(-1);
    if (head < v - 1) m(head, j) = QuadInt<Integers>(1);
  }
  return m;
}

}  // namespace gtpoly
