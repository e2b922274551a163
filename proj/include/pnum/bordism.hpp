#pragma once

// Rational spin bordism Q[alpha_1, alpha_2, alpha_3(c), ...] with
// alpha_1 = K3, alpha_2 = HP^2 and alpha_i = X_n^k(c), n + k = 2i, for i >= 3.
// All linear algebra here runs at a fixed even c != 0.

#include "pnum/charclass.hpp"
#include "pnum/exact.hpp"
#include "pnum/partition.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pnum {

enum class FactorKind { K3 = 0, HP2 = 1, X = 2 };

/// One manifold factor of a Cartesian product: K3, HP^2 or X_n^k(c).
struct Factor {
  FactorKind kind = FactorKind::K3;
  long n = 0;
  long k = 0;
  /// Own value of c for an X factor; 0 follows the surrounding c.
  long c = 0;

  static Factor k3() { return {FactorKind::K3, 0, 0, 0}; }
  static Factor hp2() { return {FactorKind::HP2, 0, 0, 0}; }
  static Factor x(long n, long k) { return {FactorKind::X, n, k, 0}; }
  static Factor x_at(long n, long k, long c) { return {FactorKind::X, n, k, c}; }

  /// Index i of the dimension 4i this factor lives in.
  long weight() const;
  /// "K3", "HP2", "X(3,5;c)" or, with a value, "X(3,5;2)".
  std::string label(std::optional<long> c_val = std::nullopt) const;

  friend bool operator==(const Factor&, const Factor&) = default;
  /// Heavier factors first; among X factors of equal weight, smaller n first.
  friend std::strong_ordering operator<=>(const Factor& a, const Factor& b);
};

/// Product of factors (the empty product is the point).
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  long weight() const;
  long count(FactorKind kind) const;
  bool contains_k3() const { return count(FactorKind::K3) > 0; }
  bool contains_x() const { return count(FactorKind::X) > 0; }
  /// Largest-weight X factor (first in order), if any.
  std::optional<Factor> heaviest_x() const;
  /// Index multiset of the factors.
  Partition indices() const;

  Monomial times(const Monomial& other) const;
  /// Removes one copy of each listed factor. Throws Precondition if absent.
  Monomial without(const std::vector<Factor>& factors) const;

  std::string label(std::optional<long> c_val = std::nullopt) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.factors_ <=> b.factors_;
  }

private:
  std::vector<Factor> factors_;
};

enum class SplitPolicy { MinN, MaxN };

struct GeneratorSpec {
  long index = 1;
  Factor representative;
};

/// alpha_1 = K3, alpha_2 = HP2; alpha_i = X(3, 2i-3) (MinN) or X(2i-3, 3) (MaxN).
std::vector<GeneratorSpec> default_basis(long max_m, SplitPolicy policy = SplitPolicy::MinN);

/// A basis sequence: the split policy plus optional per-index overrides.
class BasisSequence {
public:
  explicit BasisSequence(SplitPolicy policy = SplitPolicy::MinN) : policy_(policy) {}

  SplitPolicy policy() const { return policy_; }
  /// Representative of alpha_i. Throws Precondition for i < 1.
  Factor generator(long index) const;
  /// Uses `rep` for alpha_{rep.weight()}. Throws BadParams unless rep is
  /// X(n,k) with n, k odd and >= 3.
  BasisSequence with_generator(const Factor& rep) const;
  /// alpha_{i1} alpha_{i2} ... for an index partition.
  Monomial monomial(const Partition& indices) const;
  std::string describe() const;

private:
  SplitPolicy policy_;
  std::map<long, Factor> overrides_;
};

/// Rational combination of weight-m products at a fixed c.
struct BordismElement {
  long m = 0;
  long c_val = 0;
  std::map<Monomial, Rat> combination;  // no zero coefficients
  std::string basis;
  // eliminate_K3 only: "relations" or "k3-free-span"
  std::string method;

  Rat coefficient(const Monomial& mono) const;
  std::string to_string() const;
};

/// Pontryagin numbers of one factor; X factors are cached symbolically and
/// evaluated at c_val.
PNumberVector factor_vector(const Factor& factor, long c_val);
PNumberVector monomial_vector(const Monomial& mono, long c_val);
/// Same product with c left symbolic in every X factor.
PNumberVector monomial_vector_symbolic(const Monomial& mono);
PNumberVector element_vector(const BordismElement& element);

/// Index partitions of m containing a part >= 3: the kernel of the elliptic
/// genus in dimension 4m.
std::vector<Partition> kernel_monomials(long m);
std::vector<Monomial> kernel_monomials(long m, const BasisSequence& basis);

/// Rows: partitions of m. Columns: basis monomials of weight m (both in
/// LargestFirst order). Throws SingularThomMatrix if not invertible.
RatMatrix thom_matrix(long m, const BasisSequence& basis, long c_val);

/// Unique expression of v in the basis monomials at c = c_val.
BordismElement decompose(const PNumberVector& v, const BasisSequence& basis, long c_val);

/// Rewrites a product containing K3 and an X factor into a combination of
/// products of HP^2 and X factors only, with the same Pontryagin numbers.
/// Each K3 * X(p,q) with p + q = 2j is traded through
///   Z(c) = mu c^{2j-4} X(3, 2j-1) - lambda X(2j-1, 3),
///   lambda = binom(2j+1, 3) - (2j-1), mu = binom(2j+1, 2j-1) - 3,
/// whose decomposition carries K3 * X(p,q) with a nonzero coefficient.
/// Throws Precondition for bad input and PivotZero if a pivot vanishes.
BordismElement eliminate_K3(const Monomial& mono, const BasisSequence& basis, long c_val);

/// Every product of weight m built from HP2 and X(n,k) (n, k odd >= 3) with
/// at least one X factor.
std::vector<Monomial> k3_free_kernel_products(long m);

/// The single relation K3 * X(p,q) = sum (coefficients) (products) obtained
/// from Z(c); the right-hand side may still contain K3 in lighter products.
BordismElement k3_relation(const Factor& x_factor, const BasisSequence& basis, long c_val);

}  // namespace pnum
