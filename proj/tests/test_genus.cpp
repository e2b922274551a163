#include "oracles.hpp"

#include "pnum/charclass.hpp"
#include "pnum/error.hpp"
#include "pnum/genus.hpp"

#include <gtest/gtest.h>

using namespace pnum;

namespace {

const GenusValue d = GenusValue::delta();
const GenusValue e = GenusValue::epsilon();

}  // namespace

TEST(GenusValue, ArithmeticAndPrinting) {
  EXPECT_EQ((d * Rat(-16)).to_string(), "-16*d");
  EXPECT_EQ(d * e, GenusValue::term(1, 1, 1));
  EXPECT_TRUE((d - d).is_zero());
  EXPECT_EQ((d * d + e).homogeneous_degree(), 8);
  EXPECT_FALSE((d + e).homogeneous_degree());
}

TEST(EllipticLog, LowCoefficients) {
  const SeriesQ g = elliptic_log_series(7);
  EXPECT_EQ(g.coeff(1), GenusValue(1));
  EXPECT_TRUE(g.coeff(2).is_zero());
  EXPECT_EQ(g.coeff(3), d * (Rat(1) / 3));
  // 1/sqrt(1 - 2dt^2 + et^4) = 1 + d t^2 + (3d^2 - e)/2 t^4 + ...
  EXPECT_EQ(g.coeff(5), d * d * (Rat(3) / 10) - e * (Rat(1) / 10));
  // t^6 term of the integrand: (5d^3 - 3de)/2, so u^7 carries (5d^3 - 3de)/14.
  EXPECT_EQ(g.coeff(7), d * d * d * (Rat(5) / 14) - d * e * (Rat(3) / 14));
}

TEST(EllipticLog, ReversionComposesToIdentity) {
  const SeriesQ g = elliptic_log_series(9);
  const SeriesQ inv = series_reversion(g);
  // g(inv(u)) = u up to order 9, checked coefficientwise at (d, e) = (2, -3).
  std::vector<Rat> gi(10), ii(10);
  for (long j = 0; j <= 9; ++j) {
    gi[static_cast<std::size_t>(j)] = specialize(g.coeff(j), 2, -3);
    ii[static_cast<std::size_t>(j)] = specialize(inv.coeff(j), 2, -3);
  }
  std::vector<Rat> result(10, Rat(0)), power(10, Rat(0));
  power[0] = 1;
  for (long j = 1; j <= 9; ++j) {
    std::vector<Rat> next(10, Rat(0));
    for (std::size_t a = 0; a < 10; ++a) {
      for (std::size_t b = 0; a + b < 10; ++b) next[a + b] += power[a] * ii[b];
    }
    power = next;
    for (std::size_t t = 0; t < 10; ++t) result[t] += gi[static_cast<std::size_t>(j)] * power[t];
  }
  for (std::size_t t = 0; t < 10; ++t) EXPECT_EQ(result[t], t == 1 ? Rat(1) : Rat(0)) << t;
}

TEST(MultiplicativeSequence, FirstOrder) {
  const auto& k1 = elliptic_sequence(1);
  EXPECT_EQ(k1.at(Partition({1})), d * (Rat(1) / 3));
  EXPECT_EQ(specialize(k1.at(Partition({1})), 1, 1), Rat(1) / 3);
  EXPECT_EQ(specialize(k1.at(Partition({1})), Rat(-1) / 8, 0), Rat(-1) / 24);
}

TEST(MultiplicativeSequence, InsufficientOrder) {
  try {
    multiplicative_sequence(elliptic_log_series(4), 2);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::InsufficientOrder);
  }
}

TEST(MultiplicativeSequence, SpecializationsMatchHirzebruchPolynomials) {
  const auto l2 = l_genus_functional(2);
  EXPECT_EQ(l2.coefficients.at(Partition({2})), Rat(7) / 45);
  EXPECT_EQ(l2.coefficients.at(Partition({1, 1})), Rat(-1) / 45);
  const auto l3 = l_genus_functional(3);
  EXPECT_EQ(l3.coefficients.at(Partition({3})), Rat(62) / 945);
  EXPECT_EQ(l3.coefficients.at(Partition({2, 1})), Rat(-13) / 945);
  EXPECT_EQ(l3.coefficients.at(Partition({1, 1, 1})), Rat(2) / 945);
  const auto a2 = a_hat_functional(2);
  EXPECT_EQ(a2.coefficients.at(Partition({1, 1})), Rat(7) / 5760);
  EXPECT_EQ(a2.coefficients.at(Partition({2})), Rat(-4) / 5760);
}

TEST(GenusOf, StandardManifolds) {
  EXPECT_EQ(genus_of(class_K3()), d * Rat(-16));
  EXPECT_EQ(genus_of(class_HP2()), e);
  EXPECT_EQ(specialize(genus_of(class_K3()), 1, 1), -16);
  EXPECT_EQ(specialize(genus_of(class_K3()), Rat(-1) / 8, 0), 2);
  EXPECT_EQ(specialize(genus_of(class_HP2()), 1, 1), 1);
  EXPECT_EQ(specialize(GenusValue(), 5, 7), 0);
}

TEST(GenusOf, SymbolicCNeedsAValue) {
  try {
    genus_of(class_X({3, 3}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::SymbolicC);
  }
  EXPECT_TRUE(genus_of(class_X({3, 3}), Rat(2)).is_zero());
}

TEST(GenusOf, VanishesOnBundles) {
  for (RingParams p : {RingParams{3, 3}, RingParams{3, 5}, RingParams{5, 3}, RingParams{5, 5}, RingParams{3, 9}}) {
    for (long c : {-4, -2, 2, 4, 6}) EXPECT_TRUE(genus_of(class_X(p, c)).is_zero()) << p.n << "," << p.k << "," << c;
  }
}

TEST(GenusOf, LSpecializationMatchesSignatureOracle) {
  for (RingParams p : {RingParams{3, 3}, RingParams{3, 5}, RingParams{2, 2}, RingParams{2, 4}, RingParams{4, 2}}) {
    for (long c : {0, 1, 2, 3}) {
      const PNumberVector v = bundle_vector(p).evaluated(c);
      EXPECT_EQ(specialize(genus_of(v), 1, 1), intersection_signature(p, c)) << p.n << "," << p.k << "," << c;
    }
  }
}

TEST(GenusOf, L3OracleOnBundles) {
  for (long c : {0, 1, 2, 5}) {
    const PNumberVector v = bundle_vector({2, 4}).evaluated(c);
    const Rat l = oracle::L3(v.at(Partition({1, 1, 1})).coeff(0), v.at(Partition({2, 1})).coeff(0), v.at(Partition({3})).coeff(0));
    EXPECT_EQ(specialize(genus_of(v), 1, 1), l);
  }
}

TEST(GenusOf, MultiplicativeAndHomogeneous) {
  const std::vector<PNumberVector> vs{class_K3(), class_HP2(), bundle_vector({2, 2}).evaluated(3),
                                      bundle_vector({1, 1}).evaluated(1), class_X({3, 3}, 2)};
  for (const auto& a : vs) {
    const auto deg = genus_of(a).homogeneous_degree();
    if (deg) EXPECT_EQ(*deg, 4 * a.m);
    for (const auto& b : vs) EXPECT_EQ(genus_of(product(a, b)), genus_of(a) * genus_of(b));
  }
}

TEST(EllipticKernel, Membership) {
  const std::vector<long> samples{2, 4, 6};
  EXPECT_TRUE(is_in_elliptic_kernel(class_X({3, 3}), samples));
  EXPECT_FALSE(is_in_elliptic_kernel(class_HP2(), samples));
  const std::vector<long> two{2};
  EXPECT_TRUE(is_in_elliptic_kernel(product(class_K3(), class_X({3, 3}, 2)), two));
}
