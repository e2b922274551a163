#pragma once

#include "pnum/cohomring.hpp"
#include "pnum/exact.hpp"
#include "pnum/partition.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pnum {

/// Pontryagin roots of X_n^k(c): x^2 (n+1 times), y^2 (k times), (y+cx)^2 once.
struct RootSystem {
  RingParams params;
  std::vector<std::pair<CohClass, long>> roots;  // (root, multiplicity)

  long total_multiplicity() const;
};

RootSystem root_system(RingParams params);

/// c_0 .. c_{n+k} of (1+x)^{n+1} (1+y)^k (1+y+cx).
std::vector<CohClass> total_chern(RingParams params);

/// p_0 .. p_{n+k} of (1+x^2)^{n+1} (1+y^2)^k (1+(y+cx)^2); entries above
/// the top degree vanish.
std::vector<CohClass> total_pontryagin(RingParams params);

/// <p_{l1} ... p_{lr}, [X]>. Throws WeightMismatch unless |l| = (n+k)/2.
PolyC pontryagin_number(RingParams params, const Partition& lambda);

/// Every Pontryagin number of X_n^k(c) at once, sharing partial products.
PartitionMap<PolyC> pontryagin_numbers(RingParams params);

/// Milnor-Thom number from the root power sum.
PolyC s_number(RingParams params);
/// c^n [binom(n+k-1, n) - k]; n and k odd.
PolyC s_closed_formula(RingParams params);

/// sum_i sum_{j != i} r_i r_j^{m-1} over the roots, m = (n+k)/2 > 1.
PolyC q_number(RingParams params);
/// k [binom(n+k-3, n) - (k-1)] c^n + (n+1) [binom(n+k-3, n-2) - k] c^{n-2};
/// n and k odd and at least 3.
PolyC q_closed_formula(RingParams params);

/// Rational linear combination of the Pontryagin numbers in dimension 4m.
struct PontryaginFunctional {
  long m = 0;
  PartitionMap<Rat> coefficients;

  bool is_zero() const;
};

enum class SymmetricKind { S, Q };

/// The s- or q-number as a functional, obtained from Newton's identities.
PontryaginFunctional functional_from_symmetric(SymmetricKind kind, long m);

/// Throws ParityMismatch when n and k differ in parity.
bool spin_check(RingParams params, long c_val);

/// Pontryagin-number vector of a closed 4m-manifold, entries polynomial in c
/// (constants once c is fixed).
struct PNumberVector {
  long m = 0;
  PartitionMap<PolyC> numbers;
  bool is_spin = false;
  bool nonneg_curved = false;
  std::string label;

  const PolyC& at(const Partition& lambda) const;
  /// True when no entry depends on c.
  bool is_numeric() const;
  PNumberVector evaluated(const Rat& c) const;

  friend bool operator==(const PNumberVector&, const PNumberVector&) = default;
};

/// Same as pontryagin_numbers() wrapped as a vector; no restriction on the
/// parameters beyond n + k even. Flags are left false.
PNumberVector bundle_vector(RingParams params);

/// X_n^k(c) with n, k odd and >= 3. With a value for c the entries are
/// evaluated and is_spin follows spin_check; symbolically is_spin records that
/// the family is spin on its even-c members. Throws BadParams.
PNumberVector class_X(RingParams params, std::optional<long> c_val = std::nullopt);
PNumberVector class_K3();
PNumberVector class_HP2();
/// The point: dimension 0, p_() = 1.
PNumberVector unit_class();

/// Cartesian product via the Whitney sum formula.
PNumberVector product(const PNumberVector& a, const PNumberVector& b);

/// sum_lambda f(lambda) * v(lambda). Throws WeightMismatch.
PolyC apply_functional(const PontryaginFunctional& f, const PNumberVector& v);

}  // namespace pnum
