#pragma once

// Cohomology of the projective bundle X_n^k(c): the quotient ring
// Q[c][x, y] / (x^{n+1}, y^{k+1} + c x y^k), with x and y in degree 2.

#include "pnum/exact.hpp"

#include <map>
#include <utility>

namespace pnum {

struct RingParams {
  long n = 1;  // base CP^n
  long k = 1;  // fiber CP^k

  friend bool operator==(const RingParams&, const RingParams&) = default;
  friend auto operator<=>(const RingParams&, const RingParams&) = default;
};

/// Exponent pair (power of x, power of y).
using XYExp = std::pair<long, long>;
using RawTerms = std::map<XYExp, PolyC>;

class CohClass {
public:
  explicit CohClass(RingParams params) : params_(params) {}

  static CohClass one(RingParams params);
  static CohClass x(RingParams params);
  static CohClass y(RingParams params);
  /// Scalar in Q[c] times the unit.
  static CohClass scalar(RingParams params, const PolyC& value);

  const RingParams& params() const { return params_; }
  /// Normal-form terms: a <= n, b <= k, no zero values.
  const RawTerms& terms() const { return terms_; }
  PolyC coeff(long a, long b) const;
  bool is_zero() const { return terms_.empty(); }

  /// Homogeneous part of cohomological degree 2 * complex_degree.
  CohClass graded_part(long complex_degree) const;

  CohClass& operator+=(const CohClass& other);
  CohClass& operator-=(const CohClass& other);
  CohClass& operator*=(const PolyC& scalar);

  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator*(const CohClass& a, const CohClass& b);
  friend CohClass operator*(CohClass a, const PolyC& s) { return a *= s; }
  friend CohClass operator*(const PolyC& s, CohClass a) { return a *= s; }

  friend bool operator==(const CohClass&, const CohClass&) = default;

private:
  friend CohClass reduce(RingParams params, const RawTerms& raw);
  void add_reduced_term(long a, long b, const PolyC& value);

  RingParams params_;
  RawTerms terms_;
};

/// Rewrites arbitrary exponent pairs into normal form: x^{n+1} = 0 and
/// y^{k+j} = (-c)^j x^j y^k.
CohClass reduce(RingParams params, const RawTerms& raw);

CohClass pow(const CohClass& base, long exponent);

/// Coefficient of x^n y^k, the pairing with the fundamental class.
PolyC evaluate_top(const CohClass& z);

/// Pairing <a * b, [X]> without forming the full product.
PolyC top_pairing(const CohClass& a, const CohClass& b);

/// Signature of the middle-dimensional cup-product pairing at c = c_val.
/// Throws DimensionOdd unless n + k is even.
long intersection_signature(RingParams params, long c_val);

}  // namespace pnum
