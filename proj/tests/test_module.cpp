#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gtpoly;
using fixture::cls;

namespace {

using Z = QuadInt<Integers>;
using G = QuadInt<Gaussian>;

template <SupportedRing R>
void expect_valid_snf(const Matrix<R>& m) {
  auto s = smith_normal_form(m);
  Matrix<R> d = s.left * m * s.right;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i == j) {
        ASSERT_EQ(d(i, j), s.diag[i]);
      } else {
        ASSERT_TRUE(d(i, j).is_zero()) << m.to_string();
      }
    }
  ASSERT_TRUE(determinant(s.left).is_unit());
  ASSERT_TRUE(determinant(s.right).is_unit());
  auto id = s.left * s.left_inverse;
  ASSERT_EQ(id.to_string(), Matrix<R>::identity(m.rows()).to_string());
  bool seen_zero = false;
  for (std::size_t k = 0; k < s.diag.size(); ++k) {
    if (s.diag[k].is_zero()) {
      seen_zero = true;
      continue;
    }
    ASSERT_FALSE(seen_zero);
    ASSERT_EQ(normalized(s.diag[k]), s.diag[k]);
    if (k + 1 < s.diag.size() && !s.diag[k + 1].is_zero()) {
      ASSERT_TRUE(divides(s.diag[k], s.diag[k + 1]));
    }
  }
  ASSERT_EQ(s.rank(), oracle::rank(m, [&] {
              std::vector<std::size_t> c(m.cols());
              std::iota(c.begin(), c.end(), 0);
              return c;
            }()));
}

}  // namespace

TEST(Snf, SmallExamples) {
  auto s = smith_normal_form(Matrix<Integers>{{2, 4}, {6, 8}});
  EXPECT_EQ(s.diag, (std::vector<Z>{Z(2), Z(4)}));
  auto id = smith_normal_form(Matrix<Gaussian>::identity(3));
  EXPECT_EQ(id.diag, (std::vector<G>{G(1), G(1), G(1)}));
  auto g = smith_normal_form(fixture::golden_matrix());
  EXPECT_EQ(g.diag, (std::vector<G>{G(1), G(2)}));
}

template <class R>
class SnfRandom : public ::testing::Test {};
using Rings = ::testing::Types<Integers, Gaussian, Eisenstein>;
TYPED_TEST_SUITE(SnfRandom, Rings);

TYPED_TEST(SnfRandom, ReconstructsDiagonal) {
  using R = TypeParam;
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int t = 0; t < 500; ++t) {
    auto m = random_matrix<R>(rng, dim(rng), dim(rng));
    expect_valid_snf(m);
  }
}

TYPED_TEST(SnfRandom, InvariantFactorsMatchDeterminantalDivisors) {
  using R = TypeParam;
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    auto m = random_matrix<R>(rng, 2, 3);
    auto s = smith_normal_form(m, false);
    // d_1 = gcd of entries, d_1 d_2 = gcd of 2x2 minors
    auto gcd0 = [](const QuadInt<R>& x, const QuadInt<R>& y) { return x.is_zero() && y.is_zero() ? x : ring_gcd(x, y); };
    QuadInt<R> g1, g2;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j) g1 = gcd0(g1, m(i, j));
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b) g2 = gcd0(g2, m(0, a) * m(1, b) - m(0, b) * m(1, a));
    if (g1.is_zero()) continue;
    EXPECT_EQ(normalized(g1), s.diag[0]);
    if (g2.is_zero()) EXPECT_TRUE(s.diag[1].is_zero());
    else EXPECT_EQ(normalized(g2), normalized(s.diag[0] * s.diag[1]));
  }
}

TEST(Module, CokernelClasses) {
  EXPECT_EQ(cokernel_class<Gaussian>(2, Matrix<Gaussian>(2, 0)).module_class, cls<Gaussian>(2));
  EXPECT_EQ(cokernel_class(2, fixture::golden_matrix()).module_class, cls<Gaussian>(0, {G(2)}));
  EXPECT_EQ(cokernel_class(1, Matrix<Integers>{{2, 3}}).module_class, cls<Integers>(0));
  auto c = cokernel_class(2, Matrix<Integers>{{2}, {4}});
  EXPECT_EQ(c.module_class, cls<Integers>(1, {Z(2)}));
  EXPECT_EQ(c.module_class.to_string(), "[R ⊕ R/2]");
  EXPECT_EQ(cls<Gaussian>(0).to_string(), "[0]");
}

TEST(Module, DirectSumMergesChains) {
  EXPECT_EQ(direct_sum(cls<Integers>(0, {Z(2)}), cls<Integers>(0, {Z(3)})), cls<Integers>(0, {Z(6)}));
  EXPECT_EQ(direct_sum(cls<Integers>(0, {Z(2)}), cls<Integers>(1, {Z(2)})), cls<Integers>(1, {Z(2), Z(2)}));
  EXPECT_EQ(direct_sum(cls<Gaussian>(0, {G(1, 1)}), cls<Gaussian>(0, {G(1, 1)})),
            cls<Gaussian>(0, {G(1, 1), G(1, 1)}));
}

TEST(Module, TorsionCardinality) {
  EXPECT_EQ(torsion_cardinality(cls<Gaussian>(1, {G(1, 1)})), 2);
  EXPECT_EQ(torsion_cardinality(cls<Gaussian>(0, {G(2)})), 4);
  EXPECT_EQ(torsion_cardinality(cls<Gaussian>(3)), 1);
  EXPECT_EQ(torsion_cardinality(cls<Integers>(0, {Z(2), Z(6)})), 12);
}

TEST(Module, EnumerateTorsion) {
  std::vector<G> chain{G(1, 1), G(2)};
  auto all = enumerate_torsion<Gaussian>(chain);
  EXPECT_EQ(all.size(), 8u);
  std::set<std::vector<G>> distinct(all.begin(), all.end());
  EXPECT_EQ(distinct.size(), 8u);
  std::vector<Z> big{Z(1000), Z(2000)};
  EXPECT_THROW(enumerate_torsion<Integers>(big, 1000), torsion_too_large);
}

TEST(Module, PresentationCoordinates) {
  auto c = cokernel_class(2, fixture::golden_matrix());
  const auto& p = c.presentation;
  ASSERT_EQ(p.size(), 1u);
  // each generator has the right order, and coordinates invert generators
  auto g = p.generator(0);
  EXPECT_FALSE(p.torsion_coordinates(g)[0].is_zero());
  std::vector<G> twice{g[0] * G(2), g[1] * G(2)};
  EXPECT_TRUE(p.torsion_coordinates(twice)[0].is_zero());
  EXPECT_TRUE(in_column_span(fixture::golden_matrix(), std::span<const G>(twice)));
}

TEST(Module, NonTorsionVectorRejected) {
  auto c = cokernel_class(2, Matrix<Integers>{{2}, {0}});
  std::vector<Z> v{Z(0), Z(1)};
  EXPECT_THROW(c.presentation.torsion_coordinates(v), consistency_error);
}
