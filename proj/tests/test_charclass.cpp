#include "oracles.hpp"

#include "pnum/charclass.hpp"
#include "pnum/error.hpp"
#include "pnum/symmetric.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pnum;

namespace {

const std::vector<RingParams> kOddGrid{{3, 3}, {3, 5}, {5, 3}, {3, 7}, {5, 5}, {7, 3}, {3, 9}, {9, 3}, {5, 7}};

PNumberVector random_vector(std::mt19937& rng, long m) {
  PNumberVector v;
  v.m = m;
  for (const Partition& p : partitions(m)) v.numbers[p] = PolyC(oracle::random_rat(rng, 50, 1));
  return v;
}

}  // namespace

TEST(Partitions, CountsAndOrder) {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (long m = 0; m <= 10; ++m) EXPECT_EQ(partitions(m).size(), counts[static_cast<std::size_t>(m)]);
  const auto p4 = partitions(4);
  EXPECT_EQ(p4.front(), Partition({4}));
  EXPECT_EQ(p4.back(), Partition({1, 1, 1, 1}));
  EXPECT_EQ(Partition({1, 3}).to_string(), "[3,1]");
  EXPECT_THROW(Partition({0, 2}), Error);
}

TEST(TotalChern, FirstChernClass) {
  for (RingParams p : {RingParams{3, 3}, RingParams{5, 3}, RingParams{2, 4}}) {
    const auto c = total_chern(p);
    const CohClass expected = CohClass::y(p) * PolyC(p.k + 1) + CohClass::x(p) * (PolyC(p.n + 1) + PolyC::c());
    EXPECT_EQ(c[1], expected);
  }
}

TEST(TotalChern, TopClassIsEulerCharacteristic) {
  for (RingParams p : {RingParams{3, 3}, RingParams{3, 5}, RingParams{1, 2}}) {
    const auto c = total_chern(p);
    EXPECT_EQ(evaluate_top(c[static_cast<std::size_t>(p.n + p.k)]), PolyC((p.n + 1) * (p.k + 1)));
  }
}

TEST(TotalPontryagin, FirstClass) {
  for (RingParams p : {RingParams{3, 3}, RingParams{3, 5}}) {
    const auto pc = total_pontryagin(p);
    const CohClass x = CohClass::x(p), y = CohClass::y(p);
    const CohClass expected = x * x * (PolyC(p.n + 1) + PolyC::monomial(1, 2)) + y * y * PolyC(p.k + 1) +
                              x * y * PolyC::monomial(2, 1);
    EXPECT_EQ(pc[1], expected);
  }
}

TEST(TotalPontryagin, TrivialBundleIsProductOfProjectiveSpaces) {
  const RingParams p{2, 2};
  const auto pc = total_pontryagin(p);
  // p(CP2 x CP2) = (1 + x^2)^3 (1 + y^2)^3
  const CohClass x2 = CohClass::x(p) * CohClass::x(p), y2 = CohClass::y(p) * CohClass::y(p);
  const CohClass p1 = x2 * PolyC(3) + y2 * PolyC(3);
  CohClass p1_at_zero(p);
  for (const auto& [e, v] : pc[1].terms()) p1_at_zero += reduce(p, {{e, PolyC(eval_at(v, 0))}});
  EXPECT_EQ(p1_at_zero, p1);
}

TEST(PontryaginNumber, MatchesStepwiseOracle) {
  for (RingParams p : {RingParams{3, 3}, RingParams{3, 5}, RingParams{5, 3}, RingParams{1, 3}, RingParams{2, 2}}) {
    const long m = (p.n + p.k) / 2;
    for (const Partition& lambda : partitions(m)) {
      const PolyC value = pontryagin_number(p, lambda);
      for (long c : {-2, 1, 2, 3}) EXPECT_EQ(eval_at(value, c), oracle::pontryagin_number(p.n, p.k, c, lambda));
    }
  }
}

TEST(PontryaginNumber, OddOfDegreeAtMostN) {
  for (RingParams p : kOddGrid) {
    for (const auto& [lambda, value] : pontryagin_numbers(p)) {
      EXPECT_TRUE(is_odd_poly(value)) << lambda.to_string();
      EXPECT_LE(value.degree(), p.n);
    }
  }
}

TEST(PontryaginNumber, X33RegressionFixture) {
  // p_3[X(3,3;c)], recorded from the stepwise oracle at four c values.
  const PolyC p3 = pontryagin_number({3, 3}, Partition({3}));
  std::vector<std::pair<Rat, Rat>> pts;
  for (long c : {1, 2, 3, 4}) pts.emplace_back(Rat(c), oracle::pontryagin_number(3, 3, c, Partition({3})));
  EXPECT_EQ(p3, interpolate(pts, 3));
  EXPECT_EQ(p3.degree(), 3);
}

TEST(PontryaginNumber, WeightMismatch) {
  try {
    pontryagin_number({3, 3}, Partition({2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WeightMismatch);
  }
}

TEST(SNumber, PaperValues) {
  EXPECT_EQ(s_number({3, 5}), PolyC::monomial(30, 3));
  EXPECT_EQ(s_number({5, 3}), PolyC::monomial(18, 5));
  EXPECT_EQ(s_closed_formula({3, 5}), PolyC::monomial(30, 3));
  EXPECT_EQ(s_closed_formula({5, 3}), PolyC::monomial(18, 5));
  EXPECT_EQ(s_number({3, 3}), PolyC::monomial(7, 3));
}

TEST(SNumber, RootsOracleAndClosedFormAgree) {
  for (RingParams p : kOddGrid) {
    const PolyC s = s_number(p);
    EXPECT_EQ(s, s_closed_formula(p));
    EXPECT_EQ(s.degree(), p.n);
    for (long c : {2, -4}) EXPECT_EQ(eval_at(s, c), oracle::s_number(p.n, p.k, c));
  }
}

TEST(QNumber, PaperValues) {
  EXPECT_EQ(q_number({5, 3}), PolyC::monomial(-3, 5) + PolyC::monomial(42, 3));
  EXPECT_EQ(q_number({3, 5}), PolyC::monomial(30, 3));
  for (long k : {3, 5, 7, 9}) EXPECT_EQ(q_number({3, k}).coeff(1), 0) << k;
}

TEST(QNumber, RootsOracleAndClosedFormAgree) {
  for (RingParams p : kOddGrid) {
    const PolyC q = q_number(p);
    EXPECT_EQ(q, q_closed_formula(p));
    for (long c : {2, 6}) EXPECT_EQ(eval_at(q, c), oracle::q_number(p.n, p.k, c));
  }
}

TEST(ClosedForms, Preconditions) {
  EXPECT_THROW(s_closed_formula({2, 4}), Error);
  EXPECT_THROW(q_closed_formula({1, 5}), Error);
}

TEST(Functionals, NewtonIdentities) {
  const auto s1 = functional_from_symmetric(SymmetricKind::S, 1);
  EXPECT_EQ(s1.coefficients.at(Partition({1})), 1);
  const auto s2 = functional_from_symmetric(SymmetricKind::S, 2);
  EXPECT_EQ(s2.coefficients.at(Partition({1, 1})), 1);
  EXPECT_EQ(s2.coefficients.at(Partition({2})), -2);
  // N_3 = e1^3 - 3 e1 e2 + 3 e3
  const auto s3 = functional_from_symmetric(SymmetricKind::S, 3);
  EXPECT_EQ(s3.coefficients.at(Partition({1, 1, 1})), 1);
  EXPECT_EQ(s3.coefficients.at(Partition({2, 1})), -3);
  EXPECT_EQ(s3.coefficients.at(Partition({3})), 3);
  EXPECT_THROW(functional_from_symmetric(SymmetricKind::Q, 1), Error);
}

TEST(Functionals, MatchRootComputations) {
  for (RingParams p : kOddGrid) {
    const long m = (p.n + p.k) / 2;
    const PNumberVector v = class_X(p);
    EXPECT_EQ(apply_functional(functional_from_symmetric(SymmetricKind::S, m), v), s_number(p));
    EXPECT_EQ(apply_functional(functional_from_symmetric(SymmetricKind::Q, m), v), q_number(p));
  }
}

TEST(Spin, TruthTable) {
  EXPECT_TRUE(spin_check({3, 3}, 2));
  EXPECT_FALSE(spin_check({3, 3}, 1));
  EXPECT_TRUE(spin_check({3, 5}, 0));
  EXPECT_FALSE(spin_check({2, 2}, 2));
  try {
    spin_check({3, 4}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParityMismatch);
  }
}

TEST(Spin, SecondStiefelWhitneyOracle) {
  // w2 = c1 mod 2 = (k+1) y + (n+1+c) x mod 2 must vanish.
  for (long n = 1; n <= 7; ++n) {
    for (long k = 1; k <= 7; ++k) {
      if ((n + k) % 2) continue;
      for (long c = -3; c <= 4; ++c) {
        const bool w2_zero = (k + 1) % 2 == 0 && ((n + 1 + c) % 2 + 2) % 2 == 0;
        EXPECT_EQ(spin_check({n, k}, c), w2_zero) << n << "," << k << "," << c;
      }
    }
  }
}

TEST(Classes, K3AndHP2) {
  const PNumberVector k3 = class_K3();
  EXPECT_EQ(k3.m, 1);
  EXPECT_EQ(k3.at(Partition({1})), PolyC(-48));
  EXPECT_EQ(oracle::L1(-48), -16);
  EXPECT_EQ(oracle::Ahat1(-48), 2);

  const PNumberVector hp2 = class_HP2();
  EXPECT_EQ(hp2.at(Partition({1, 1})), PolyC(4));
  EXPECT_EQ(hp2.at(Partition({2})), PolyC(7));
  EXPECT_EQ(oracle::L2(4, 7), 1);
  EXPECT_EQ(oracle::Ahat2(4, 7), 0);
  EXPECT_TRUE(hp2.is_spin && hp2.nonneg_curved);
  EXPECT_TRUE(k3.is_spin);
}

TEST(Classes, XFlagsAndPreconditions) {
  const PNumberVector x = class_X({3, 3}, 2);
  EXPECT_TRUE(x.is_spin);
  EXPECT_TRUE(x.nonneg_curved);
  EXPECT_EQ(apply_functional(functional_from_symmetric(SymmetricKind::S, 3), class_X({3, 3})), PolyC::monomial(7, 3));
  EXPECT_THROW(class_X({2, 4}), Error);
  EXPECT_THROW(class_X({1, 5}), Error);
}

TEST(Product, K3TimesK3ByWhitney) {
  // p(K3 x K3) = (1 + a)(1 + b): p1 = a + b, p2 = ab.
  // <p1^2> = 2<a><b> = 4608, <p2> = <a><b> = 2304.
  const PNumberVector kk = product(class_K3(), class_K3());
  EXPECT_EQ(kk.at(Partition({1, 1})), PolyC(4608));
  EXPECT_EQ(kk.at(Partition({2})), PolyC(2304));
}

TEST(Product, UnitAndDecomposableVanishing) {
  const PNumberVector x = class_X({3, 5}, 4);
  EXPECT_EQ(product(unit_class(), x).numbers, x.numbers);
  EXPECT_EQ(product(x, unit_class()).numbers, x.numbers);
  const auto s = [](const PNumberVector& v) { return apply_functional(functional_from_symmetric(SymmetricKind::S, v.m), v); };
  EXPECT_TRUE(s(product(class_K3(), class_HP2())).is_zero());
  EXPECT_TRUE(s(product(class_X({3, 3}), class_K3())).is_zero());
  const PNumberVector k3 = class_K3();
  const PNumberVector kkk = product(product(k3, k3), k3);
  EXPECT_TRUE(apply_functional(functional_from_symmetric(SymmetricKind::Q, 3), kkk).is_zero());
}

TEST(Product, ProductOfProjectiveSpacesMatchesRingOracle) {
  // CP2 x CP2 = X(2,2;0). CP2 enters as a weight-1 vector with <p1> = 3.
  PNumberVector cp2;
  cp2.m = 1;
  cp2.numbers[Partition({1})] = PolyC(3);
  const PNumberVector prod = product(cp2, cp2);
  EXPECT_EQ(prod.at(Partition({1, 1})), PolyC(oracle::pontryagin_number(2, 2, 0, Partition({1, 1}))));
  EXPECT_EQ(prod.at(Partition({2})), PolyC(oracle::pontryagin_number(2, 2, 0, Partition({2}))));
}

TEST(Product, CommutativeAndAssociativeRandomized) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const PNumberVector a = random_vector(rng, 1 + trial % 3);
    const PNumberVector b = random_vector(rng, 1 + trial % 2);
    const PNumberVector c = random_vector(rng, 1 + trial % 4);
    EXPECT_EQ(product(a, b).numbers, product(b, a).numbers);
    EXPECT_EQ(product(product(a, b), c).numbers, product(a, product(b, c)).numbers);
  }
}

TEST(ApplyFunctional, ZeroAndMismatch) {
  PontryaginFunctional zero;
  zero.m = 4;
  for (const Partition& p : partitions(4)) zero.coefficients[p] = 0;
  EXPECT_TRUE(apply_functional(zero, class_X({3, 5})).is_zero());
  try {
    apply_functional(zero, class_X({3, 3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WeightMismatch);
  }
}
