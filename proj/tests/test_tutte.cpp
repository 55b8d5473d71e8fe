#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gtpoly;
using fixture::cls;

namespace {

using G = QuadInt<Gaussian>;
using Z = QuadInt<Integers>;

template <SupportedRing R>
mpz_class phi_sum_over_subsets(const RealizedMatroid<R>& m, long base) {
  // Σ_A |tor A| base^{|A| - rk A} at x = 2 for y = base + 1, restricted to full rank
  mpz_class s = 0;
  for (Subset a = 0;; ++a) {
    if (m.generic_rank(a) == m.rank()) {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), subset_size(a) - m.generic_rank(a));
      s += torsion_cardinality(m.class_of(a)) * p;
    }
    if (a == m.ground()) break;
  }
  return s;
}

}  // namespace

TEST(Tutte, GoldenInstance) {
  auto m = fixture::golden();
  auto t = grothendieck_tutte(m);
  using E = GrothElement<Gaussian>;
  E a = E::of(cls<Gaussian>(0, {G(1, 1)})), b = E::of(cls<Gaussian>(0, {G(2)}));
  EXPECT_EQ(t.coeff(2, 0, E()), E::one());
  EXPECT_EQ(t.coeff(1, 0, E()), a - E::one());
  EXPECT_EQ(t.coeff(0, 0, E()), b - a);
  EXPECT_EQ(tutte_numeric(m).to_string(), "x^2 + x + 2");
}

TEST(Tutte, SmallCases) {
  EXPECT_EQ(tutte_numeric(realize(Matrix<Integers>{{0}})).to_string(), "y");
  EXPECT_EQ(tutte_numeric(realize(Matrix<Integers>{{2}})).to_string(), "x + 1");
  EXPECT_EQ(tutte_numeric(realize(Matrix<Integers>::identity(2))).to_string(), "x^2");
  EXPECT_EQ(tutte_numeric(realize(Matrix<Integers>(3, 0))).to_string(), "1");
  // two parallel unit vectors
  EXPECT_EQ(tutte_numeric(realize(Matrix<Integers>{{1, 1}})).to_string(), "x + y");
}

TEST(Tutte, FVectorGolden) {
  auto m = fixture::golden();
  auto f = f_vector(m);
  EXPECT_EQ(f.to_string(), "([0], [0]+[R/(1+i)], [R/2])");
  auto fh = numeric_f_h(m);
  EXPECT_EQ(fh.f, (std::vector<mpz_class>{1, 3, 4}));
  EXPECT_EQ(fh.h, (std::vector<mpz_class>{1, 1, 2}));
  EXPECT_TRUE(check_tutte_f_identity(m).pass);
}

TEST(Tutte, DualTorsionClassOfCyclicIsItself) {
  auto c = cls<Gaussian>(3, {G(1, 1), G(2)});
  EXPECT_EQ(dual_torsion_class(c), cls<Gaussian>(0, {G(1, 1), G(2)}));
}

TEST(Tutte, FHRoundTrip) {
  std::vector<mpz_class> f{1, 5, 7, 3};
  EXPECT_EQ(f_from_h(h_from_f(f)), f);
  EXPECT_EQ(h_from_f({1, 3, 4}), (std::vector<mpz_class>{1, 1, 2}));
}

TEST(Tutte, InvariantUnderColumnPermutationAndUnits) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 30; ++t) {
    auto inst = random_instance<Gaussian>(rng, {3, 5, 3, 0.3});
    auto base = grothendieck_tutte(inst.matroid());
    std::vector<std::size_t> perm(inst.matrix.cols());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto p = inst.matrix.select_columns(perm);
    for (std::size_t j = 0; j < p.cols(); ++j) p.scale_col(j, G(0, 1));
    p.scale_row(0, G(-1));
    EXPECT_EQ(grothendieck_tutte(realize(p)), base);
  }
}

TEST(Tutte, EvaluationsCountSpanningSets) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    auto m = random_instance<Integers>(rng, {3, 5, 3, 0.3}).matroid();
    auto tn = tutte_numeric(m);
    EXPECT_EQ(evaluate(tn, 1, 1), phi_sum_over_subsets(m, 0));
    EXPECT_EQ(evaluate(tn, 1, 2), phi_sum_over_subsets(m, 1));
  }
}

TEST(Tutte, IntegerCaseMatchesArithmeticTutteOracle) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 40; ++t) {
    auto inst = random_instance<Integers>(rng);
    EXPECT_EQ(tutte_numeric(inst.matroid()), oracle::toric_tutte(inst.matrix)) << inst.matrix.to_string();
  }
}

TEST(Tutte, DeletionContractionReport) {
  auto rep = check_deletion_contraction(fixture::golden());
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.skipped, 2u);
  auto u = check_deletion_contraction(realize(Matrix<Integers>{{1, 0, 1, 0}, {0, 1, 1, 0}}));
  EXPECT_TRUE(u.pass);
  EXPECT_EQ(u.checked, 4u);
  EXPECT_EQ(u.skipped, 0u);
}

TEST(Tutte, TorsionAtEmptyQuotientLemma) {
  auto m = fixture::torsion_example();
  EXPECT_TRUE(check_quotient_lemma(m).pass);
  EXPECT_TRUE(check_tutte_f_identity(m).pass);
}
