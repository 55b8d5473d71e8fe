#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gtpoly;
using fixture::cls;

namespace {
using G = QuadInt<Gaussian>;
using Z = QuadInt<Integers>;
}  // namespace

TEST(Matroid, GoldenModules) {
  auto m = fixture::golden();
  EXPECT_EQ(m.class_of(0b00), cls<Gaussian>(2));
  EXPECT_EQ(m.class_of(0b01), cls<Gaussian>(1));
  EXPECT_EQ(m.class_of(0b10), cls<Gaussian>(1, {G(1, 1)}));
  EXPECT_EQ(m.class_of(0b11), cls<Gaussian>(0, {G(2)}));
  EXPECT_EQ(m.rank(), 2u);
  EXPECT_EQ(m.independents().size(), 4u);
  EXPECT_EQ(m.element_kind(0), ElementKind::coloop);
  EXPECT_FALSE(m.full_is_zero());
  EXPECT_TRUE(m.empty_is_torsion_free());
}

TEST(Matroid, LoopsAndColoops) {
  auto m = realize(Matrix<Integers>{{1, 0, 1, 0}, {0, 1, 1, 0}});
  EXPECT_EQ(m.element_kind(3), ElementKind::loop);
  EXPECT_EQ(m.element_kind(0), ElementKind::ordinary);
  auto c = realize(Matrix<Integers>{{1, 0}, {0, 1}});
  EXPECT_EQ(c.element_kind(1), ElementKind::coloop);
}

TEST(Matroid, DeleteAndContract) {
  auto m = fixture::golden();
  auto d = m.deleted(0), c = m.contracted(0);
  EXPECT_EQ(d.size(), 1u);
  EXPECT_EQ(d.labels(), std::vector<std::size_t>{2});
  for (Subset a = 0; a < 2; ++a) {
    EXPECT_EQ(d.class_of(a), m.class_of(a == 0 ? 0 : 0b10));
    EXPECT_EQ(c.class_of(a), m.class_of(a == 0 ? 0b01 : 0b11));
  }
  EXPECT_EQ(c.rank(), 1u);
}

TEST(Matroid, RankMatchesFieldOracle) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 40; ++t) {
    auto inst = random_instance<Eisenstein>(rng);
    auto m = inst.matroid();
    for (Subset a = 0; a <= m.ground(); ++a)
      ASSERT_EQ(m.generic_rank(a), oracle::rank(inst.matrix, oracle::members(a)));
  }
}

TEST(Matroid, TorsionAtEmpty) {
  auto m = fixture::torsion_example();
  EXPECT_EQ(m.class_of(0), cls<Integers>(1, {Z(2)}));
  EXPECT_FALSE(m.empty_is_torsion_free());
  EXPECT_EQ(m.rank(), 1u);
  auto q = m.quotient_by_empty_torsion();
  EXPECT_EQ(q.class_of(0), cls<Integers>(1));
  EXPECT_THROW(realize_with_torsion<Integers>(Matrix<Integers>{{1}}, std::vector<Z>{Z(2)}), invalid_input);
}

TEST(Matroid, InputValidation) {
  EXPECT_THROW(realize(Matrix<Integers>(0, 2)), invalid_input);
  EXPECT_NO_THROW(realize(Matrix<Integers>(2, 0)));
  EXPECT_THROW(realize(Matrix<Integers>(1, 30)), invalid_input);
  EXPECT_THROW(fixture::golden().deleted(5), std::out_of_range);
}

template <class R>
class MatroidAxioms : public ::testing::Test {};
using Rings = ::testing::Types<Integers, Gaussian, Eisenstein>;
TYPED_TEST_SUITE(MatroidAxioms, Rings);

TYPED_TEST(MatroidAxioms, QuotientAxiomOnRandomInstances) {
  using R = TypeParam;
  std::mt19937_64 rng(8);
  for (int t = 0; t < 15; ++t) {
    auto m = random_instance<R>(rng, {3, 4, 3, 0.4}, t % 3 == 0 ? 1 : 0).matroid();
    for (Subset a = 0; a <= m.ground(); ++a)
      for (std::size_t b = 0; b < m.size(); ++b)
        for (std::size_t c = b + 1; c < m.size(); ++c) {
          if (contains(a, b) || contains(a, c)) continue;
          auto rep = m.axiom_consistency_check(a, b, c);
          ASSERT_TRUE(rep.pass) << rep.detail;
        }
  }
}
