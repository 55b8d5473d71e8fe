#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gtpoly;

TEST(FaceRing, HilbertSeriesRendering) {
  auto h = HilbertSeries::from_h({1, 1, 2});
  EXPECT_EQ(h.to_string(), "(1 + t + 2t^2)/(1-t)^2");
  EXPECT_EQ(HilbertSeries::from_h({1, 0}).to_string(), "1/(1-t)");
  EXPECT_EQ(HilbertSeries::from_h({1}).to_string(), "1");
  // (1 - t)/(1-t)^2 reduces to 1/(1-t)
  HilbertSeries r(IntPoly(std::vector<mpz_class>{1, -1}), 2);
  EXPECT_EQ(r.denominator_exponent(), 1u);
  EXPECT_EQ(r, HilbertSeries::from_h({1, 0}));
}

TEST(FaceRing, ExpansionOfBooleanLattice) {
  // 2^[2]: h = (1, 0, 0), series 1/(1-t)^2
  auto m = realize(Matrix<Integers>::identity(2));
  auto h = hilbert_series_face_ring(build_poset(m));
  EXPECT_EQ(h.expand(4), (std::vector<mpz_class>{1, 2, 3, 4, 5}));
  auto point = hilbert_series_face_ring(build_poset(realize(Matrix<Integers>{{0}})));
  EXPECT_EQ(point.to_string(), "1");
}

TEST(FaceRing, GoldenFaceModule) {
  auto m = fixture::golden();
  EXPECT_EQ(face_module_hilbert(m).to_string(), "(1 + t + 2t^2)/(1-t)^2");
  EXPECT_TRUE(verify_hilbert_tutte(m).pass);
  auto ideal = face_ideal(build_poset(m));
  EXPECT_EQ(ideal.relations.size(), 13u);
}

TEST(FaceRing, DimensionsAgreeWithIdealOracle) {
  std::vector<TorsionPoset<Gaussian>> gposets{build_poset(fixture::golden())};
  for (const auto& p : gposets) {
    auto series = hilbert_series_face_ring(p).expand(5);
    for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(series[n], oracle::face_ring_dimension(p, n)) << n;
  }
  std::vector<Matrix<Integers>> small{Matrix<Integers>{{2}}, Matrix<Integers>{{1, 1}}, Matrix<Integers>{{1, 0, 1}, {0, 1, 1}},
                                      Matrix<Integers>{{1, 1}, {0, 2}}, Matrix<Integers>{{3}}};
  for (const auto& a : small) {
    auto p = build_poset(realize(a));
    auto series = hilbert_series_face_ring(p).expand(5);
    for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(series[n], oracle::face_ring_dimension(p, n)) << a.to_string() << n;
  }
}

TEST(FaceRing, TorsionAtEmptyScalesTheComponentSeries) {
  std::vector<QuadInt<Integers>> t{QuadInt<Integers>(3)};
  auto m = realize_with_torsion<Integers>(Matrix<Integers>{{1, 2}, {0, 1}}, t);
  auto comps = poset_components(build_poset(m));
  ASSERT_EQ(comps.size(), 3u);
  auto n = face_module_hilbert(m);
  EXPECT_EQ(n, hilbert_series_face_ring(comps[0]).scaled(3));
  EXPECT_EQ(n, face_module_hilbert_via_quotient(m));
  EXPECT_TRUE(verify_hilbert_tutte(m).pass);
  EXPECT_TRUE(check_quotient_lemma(m).pass);
}

TEST(FaceRing, RandomHilbertTutte) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 25; ++t) {
    auto m = random_instance<Gaussian>(rng, {3, 4, 2, 0.4}, t % 4 == 0 ? 1 : 0).matroid();
    if (poset_node_count(m) > 5000) continue;
    EXPECT_TRUE(verify_hilbert_tutte(m).pass);
    EXPECT_EQ(face_module_hilbert(m), face_module_hilbert_via_quotient(m));
  }
}
