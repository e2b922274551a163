#pragma once

// Decides whether a Pontryagin functional factors through the elliptic genus
// and, when it does not, exhibits a family of nonnegatively curved spin
// products on which it is unbounded.

#include "pnum/bordism.hpp"
#include "pnum/charclass.hpp"
#include "pnum/exact.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pnum {

enum class WitnessStatus { FactorsThroughEllipticGenus, Unbounded };

/// An even c with |f(c)| > bound, as produced by certify().
struct Certificate {
  Rat bound;
  long c = 0;
};

struct WitnessReport {
  WitnessStatus status = WitnessStatus::FactorsThroughEllipticGenus;
  long m = 0;
  std::string basis;
  /// K3-free product of HP2 and X factors.
  std::optional<Monomial> witness;
  /// Position (in witness->factors()) of the X factor whose c varies; the
  /// other X factors stay at fixed_c.
  std::size_t varying_factor = 0;
  long fixed_c = 0;
  std::optional<PolyC> f_poly;
  std::vector<std::pair<long, Rat>> samples;
  std::optional<Certificate> certificate;
  bool witness_spin = false;
  bool witness_nonneg_curved = false;
  /// Kernel monomial first found with f != 0.
  std::optional<Monomial> kernel_monomial;

  /// "X(3,3;c) * X(3,3;2)" style description of the family.
  std::string witness_label() const;
};

/// Degree bound of f on any weight-m kernel monomial: max over monomials of
/// the summed n-parameters of their X factors.
long kernel_degree_bound(long m, const BasisSequence& basis);

/// Even samples 2, 4, ... enough for kernel_degree_bound plus two spare.
std::vector<long> default_samples(long m, const BasisSequence& basis);

/// True iff f vanishes on every kernel monomial at every sample.
/// Throws InsufficientSamples / Precondition on bad samples.
bool factors_through_elliptic(const PontryaginFunctional& f, const BasisSequence& basis,
                              std::span<const long> c_samples);

WitnessReport find_witness(const PontryaginFunctional& f, const BasisSequence& basis,
                           std::span<const long> c_samples);

/// Value of f on the witness family member with varying parameter c.
PNumberVector witness_vector(const WitnessReport& report, long c);

/// Smallest even c > 0 beyond the Cauchy bounds of f and f' with |f(c)| > bound.
/// Throws Precondition if f is constant.
long certify(const PolyC& f, const Rat& bound);

}  // namespace pnum
