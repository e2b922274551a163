#pragma once

// Multiplicative genera from a characteristic power series, in particular the
// universal elliptic genus with values in Q[delta, epsilon]
// (delta in degree 4, epsilon in degree 8).

#include "pnum/charclass.hpp"
#include "pnum/exact.hpp"
#include "pnum/partition.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pnum {

/// Element of Q[delta, epsilon]: (i, j) -> coefficient of delta^i epsilon^j.
class GenusValue {
public:
  GenusValue() = default;
  GenusValue(const Rat& constant);  // NOLINT: scalars lift implicitly
  GenusValue(long constant) : GenusValue(Rat(constant)) {}

  static GenusValue delta();
  static GenusValue epsilon();
  static GenusValue term(const Rat& coeff, long delta_power, long epsilon_power);

  const std::map<std::pair<long, long>, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(long delta_power, long epsilon_power) const;
  /// Weighted degree 4i + 8j of every term, or nullopt if inhomogeneous;
  /// the zero element reports nullopt too.
  std::optional<long> homogeneous_degree() const;

  GenusValue& operator+=(const GenusValue& other);
  GenusValue& operator-=(const GenusValue& other);
  GenusValue& operator*=(const Rat& scalar);
  friend GenusValue operator+(GenusValue a, const GenusValue& b) { return a += b; }
  friend GenusValue operator-(GenusValue a, const GenusValue& b) { return a -= b; }
  friend GenusValue operator*(const GenusValue& a, const GenusValue& b);
  friend GenusValue operator*(GenusValue a, const Rat& s) { return a *= s; }
  friend GenusValue operator*(const Rat& s, GenusValue a) { return a *= s; }
  GenusValue operator-() const { return *this * Rat(-1); }

  friend bool operator==(const GenusValue&, const GenusValue&) = default;

  /// e.g. "-16*d", "3/10*d^2 - 1/10*e"
  std::string to_string() const;

private:
  void add(std::pair<long, long> key, const Rat& value);
  std::map<std::pair<long, long>, Rat> terms_;
};

inline bool is_zero_value(const GenusValue& g) { return g.is_zero(); }

/// Power series in one variable over Q[delta, epsilon], kept up to and
/// including u^order.
struct SeriesQ {
  std::vector<GenusValue> coeffs;

  long order() const { return static_cast<long>(coeffs.size()) - 1; }
  GenusValue coeff(long power) const;
};

/// g(u) = integral_0^u dt / sqrt(1 - 2 delta t^2 + epsilon t^4).
SeriesQ elliptic_log_series(long order);

/// Compositional inverse of a series u + O(u^2).
SeriesQ series_reversion(const SeriesQ& log);

/// K_lambda with genus(M) = sum_lambda K_lambda p_lambda[M] in dimension 4m,
/// for the genus whose logarithm is `log`. Throws InsufficientOrder unless
/// log.order() >= 2m + 1.
PartitionMap<GenusValue> multiplicative_sequence(const SeriesQ& log, long m);

/// Cached multiplicative sequence of the universal elliptic genus. Safe to
/// call concurrently.
const PartitionMap<GenusValue>& elliptic_sequence(long m);

Rat specialize(const GenusValue& g, const Rat& delta_val, const Rat& epsilon_val);

/// Elliptic genus of a 4m-class. A vector still depending on c needs c_val;
/// otherwise throws SymbolicC.
GenusValue genus_of(const PNumberVector& v, std::optional<Rat> c_val = std::nullopt);

/// Genus at (delta, epsilon) as a Pontryagin functional: (1,1) is the
/// L-genus, (-1/8, 0) the A-hat genus.
PontryaginFunctional genus_functional(long m, const Rat& delta_val, const Rat& epsilon_val);

inline PontryaginFunctional l_genus_functional(long m) { return genus_functional(m, 1, 1); }
inline PontryaginFunctional a_hat_functional(long m) { return genus_functional(m, Rat(Rat(-1) / 8), 0); }

/// True iff the elliptic genus vanishes at every sample (once if v is numeric).
bool is_in_elliptic_kernel(const PNumberVector& v, std::span<const long> c_samples);

}  // namespace pnum
