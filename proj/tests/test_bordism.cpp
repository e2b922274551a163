#include "oracles.hpp"

#include "pnum/bordism.hpp"
#include "pnum/error.hpp"
#include "pnum/genus.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pnum;

namespace {

PNumberVector combination_vector(const std::map<Monomial, Rat>& combo, long m, long c) {
  PNumberVector out;
  out.m = m;
  for (const Partition& p : partitions(m)) out.numbers[p] = PolyC();
  for (const auto& [mono, coeff] : combo) {
    const PNumberVector v = monomial_vector(mono, c);
    for (auto& [p, value] : out.numbers) value = value + v.at(p) * PolyC(coeff);
  }
  return out;
}

PNumberVector y_vector(long c) {
  const PNumberVector a = class_X({3, 5}, c), b = class_X({5, 3}, c);
  PNumberVector out = a;
  for (auto& [p, value] : out.numbers) value = a.at(p) * PolyC(3 * c * c) - b.at(p) * PolyC(5);
  return out;
}

}  // namespace

TEST(Basis, DefaultGenerators) {
  const auto min_n = default_basis(5);
  EXPECT_EQ(min_n[0].representative, Factor::k3());
  EXPECT_EQ(min_n[1].representative, Factor::hp2());
  EXPECT_EQ(min_n[2].representative, Factor::x(3, 3));
  EXPECT_EQ(min_n[3].representative, Factor::x(3, 5));
  EXPECT_EQ(default_basis(5, SplitPolicy::MaxN)[3].representative, Factor::x(5, 3));
  const BasisSequence b = BasisSequence().with_generator(Factor::x(5, 5));
  EXPECT_EQ(b.generator(5), Factor::x(5, 5));
  EXPECT_EQ(b.generator(4), Factor::x(3, 5));
  EXPECT_THROW(BasisSequence().with_generator(Factor::x(1, 9)), Error);
}

TEST(MonomialVector, Examples) {
  EXPECT_EQ(monomial_vector(Monomial({Factor::k3()}), 2).numbers, class_K3().numbers);
  const PNumberVector kk = monomial_vector(Monomial({Factor::k3(), Factor::k3()}), 2);
  EXPECT_EQ(kk.at(Partition({1, 1})), PolyC(4608));
  EXPECT_EQ(kk.at(Partition({2})), PolyC(2304));
  EXPECT_EQ(monomial_vector(Monomial({Factor::x(3, 3)}), 2).numbers, class_X({3, 3}, 2).numbers);
  EXPECT_EQ(monomial_vector_symbolic(Monomial({Factor::x(3, 5)})).numbers, class_X({3, 5}).numbers);
}

TEST(ThomMatrix, SmallCases) {
  const BasisSequence basis;
  const RatMatrix t1 = thom_matrix(1, basis, 2);
  EXPECT_EQ(t1, (RatMatrix{{-48}}));
  const RatMatrix t2 = thom_matrix(2, basis, 2);
  EXPECT_EQ(t2.rows(), 2u);
  EXPECT_NE(determinant(t2), 0);
  const RatMatrix t4 = thom_matrix(4, basis, 2);
  EXPECT_EQ(t4.rows(), 5u);
  EXPECT_EQ(rank(t4), 5u);
}

TEST(ThomMatrix, NonsingularGrid) {
  for (SplitPolicy policy : {SplitPolicy::MinN, SplitPolicy::MaxN}) {
    for (long m = 1; m <= 6; ++m) {
      for (long c : {2, 4, 6}) EXPECT_NO_THROW(thom_matrix(m, BasisSequence(policy), c)) << m << "," << c;
    }
  }
}

TEST(ThomMatrix, RejectsOddOrZeroC) {
  EXPECT_THROW(thom_matrix(3, BasisSequence(), 3), Error);
  EXPECT_THROW(thom_matrix(3, BasisSequence(), 0), Error);
}

TEST(Decompose, Examples) {
  const BasisSequence basis;
  const BordismElement x = decompose(class_X({3, 5}, 2), basis, 2);
  ASSERT_EQ(x.combination.size(), 1u);
  EXPECT_EQ(x.combination.begin()->first, Monomial({Factor::x(3, 5)}));
  EXPECT_EQ(x.combination.begin()->second, 1);

  const BordismElement kk = decompose(product(class_K3(), class_K3()), basis, 2);
  ASSERT_EQ(kk.combination.size(), 1u);
  EXPECT_EQ(kk.combination.begin()->first, Monomial({Factor::k3(), Factor::k3()}));
  EXPECT_EQ(kk.combination.begin()->second, 1);
}

TEST(Decompose, YIsAMultipleOfK3TimesX33) {
  for (long c : {2, 4, 6, -2}) {
    const BordismElement y = decompose(y_vector(c), BasisSequence(), c);
    ASSERT_EQ(y.combination.size(), 1u) << y.to_string();
    EXPECT_EQ(y.combination.begin()->first, Monomial({Factor::k3(), Factor::x(3, 3)}));
    EXPECT_NE(y.combination.begin()->second, 0);
  }
}

TEST(Decompose, RoundTripRandomized) {
  std::mt19937 rng(31);
  for (SplitPolicy policy : {SplitPolicy::MinN, SplitPolicy::MaxN}) {
    const BasisSequence basis(policy);
    for (long m = 1; m <= 5; ++m) {
      for (int trial = 0; trial < 8; ++trial) {
        std::map<Monomial, Rat> combo;
        for (const Partition& idx : partitions(m)) {
          const Rat v = oracle::random_rat(rng);
          if (v != 0) combo[basis.monomial(idx)] = v;
        }
        const long c = 2 * (1 + trial % 3);
        const BordismElement d = decompose(combination_vector(combo, m, c), basis, c);
        EXPECT_EQ(d.combination, combo);
        EXPECT_EQ(element_vector(d).numbers, combination_vector(combo, m, c).numbers);
      }
    }
  }
}

TEST(KernelMonomials, Enumeration) {
  EXPECT_TRUE(kernel_monomials(1).empty());
  EXPECT_TRUE(kernel_monomials(2).empty());
  EXPECT_EQ(kernel_monomials(3), (std::vector<Partition>{Partition({3})}));
  EXPECT_EQ(kernel_monomials(4), (std::vector<Partition>{Partition({4}), Partition({3, 1})}));
  // partitions of m minus partitions into parts <= 2
  for (long m = 3; m <= 9; ++m) EXPECT_EQ(kernel_monomials(m).size(), partitions(m).size() - static_cast<std::size_t>(m / 2 + 1));
}

TEST(KernelMonomials, LieInTheKernel) {
  const std::vector<long> two{2};
  for (long m = 3; m <= 6; ++m) {
    for (const Monomial& mono : kernel_monomials(m, BasisSequence())) {
      EXPECT_TRUE(is_in_elliptic_kernel(monomial_vector(mono, 2), two)) << mono.label(2);
    }
  }
}

TEST(K3Free, ProductsSpanTheKernel) {
  for (long m = 3; m <= 6; ++m) {
    const auto frees = k3_free_kernel_products(m);
    EXPECT_EQ(frees.size(), kernel_monomials(m).size()) << m;
    for (const Monomial& mono : frees) EXPECT_FALSE(mono.contains_k3());
  }
}

TEST(EliminateK3, BaseCase) {
  const BasisSequence basis;
  const Monomial k3x = Monomial({Factor::k3(), Factor::x(3, 3)});
  const BordismElement e = eliminate_K3(k3x, basis, 2);
  EXPECT_EQ(e.method, "relations");
  ASSERT_EQ(e.combination.size(), 2u);
  // K3 x X(3,3;2) = (12 X(3,5;2) - 5 X(5,3;2)) / r with Y(2) = r K3 x X(3,3;2)
  const Rat r = decompose(y_vector(2), basis, 2).combination.begin()->second;
  EXPECT_EQ(e.coefficient(Monomial({Factor::x(3, 5)})), Rat(12) / r);
  EXPECT_EQ(e.coefficient(Monomial({Factor::x(5, 3)})), Rat(-5) / r);
  const PontryaginFunctional q4 = functional_from_symmetric(SymmetricKind::Q, 4);
  EXPECT_EQ(apply_functional(q4, y_vector(2)), PolyC(1680));
}

TEST(EliminateK3, GridProperties) {
  for (SplitPolicy policy : {SplitPolicy::MinN, SplitPolicy::MaxN}) {
    const BasisSequence basis(policy);
    for (long m = 3; m <= 6; ++m) {
      for (long c : {2, 4}) {
        const Monomial mono = basis.monomial(Partition({m, 1}));
        const BordismElement e = eliminate_K3(mono, basis, c);
        EXPECT_EQ(element_vector(e).numbers, monomial_vector(mono, c).numbers) << mono.label(c);
        for (const auto& [term, coeff] : e.combination) {
          EXPECT_FALSE(term.contains_k3());
          EXPECT_NE(coeff, 0);
        }
        EXPECT_TRUE(genus_of(element_vector(e)).is_zero());
      }
    }
  }
}

TEST(EliminateK3, HigherPowersOfK3) {
  const BasisSequence basis;
  const Monomial mono = Monomial({Factor::k3(), Factor::k3(), Factor::x(3, 3)});
  for (long c : {2, 4}) {
    const BordismElement e = eliminate_K3(mono, basis, c);
    EXPECT_EQ(element_vector(e).numbers, monomial_vector(mono, c).numbers);
  }
}

TEST(EliminateK3, Preconditions) {
  const BasisSequence basis;
  EXPECT_THROW(eliminate_K3(Monomial({Factor::k3(), Factor::hp2()}), basis, 2), Error);
  EXPECT_THROW(eliminate_K3(Monomial({Factor::x(3, 3)}), basis, 2), Error);
  EXPECT_THROW(eliminate_K3(Monomial({Factor::k3(), Factor::x(3, 3)}), basis, 3), Error);
}

TEST(K3Relation, CarriesThePivot) {
  const BasisSequence basis;
  for (Factor x : {Factor::x(3, 3), Factor::x(3, 5), Factor::x(5, 3)}) {
    const BordismElement rel = k3_relation(x, basis, 2);
    const Monomial lhs({Factor::k3(), x});
    EXPECT_EQ(element_vector(rel).numbers, monomial_vector(lhs, 2).numbers);
  }
}
