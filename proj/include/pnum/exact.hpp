#pragma once

// Exact arithmetic substrate: GMP rationals, dense polynomials in the bundle
// parameter c, and fraction-exact linear algebra.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pnum {

using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws Error(Parse).
Rat parse_rat(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);

Int binomial(long n, long k);

/// Polynomial in c with rational coefficients, lowest power first.
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
class PolyC {
public:
  PolyC() = default;
  PolyC(const Rat& constant);  // NOLINT: implicit lift of scalars is intended
  PolyC(long constant) : PolyC(Rat(constant)) {}
  explicit PolyC(std::vector<Rat> coeffs);
  PolyC(std::initializer_list<Rat> coeffs) : PolyC(std::vector<Rat>(coeffs)) {}

  /// coeff * c^power
  static PolyC monomial(const Rat& coeff, std::size_t power);
  static PolyC c() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rat coeff(std::size_t power) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_constant() const { return coeffs_.size() <= 1; }

  Rat eval(const Rat& c) const;

  PolyC& operator+=(const PolyC& other);
  PolyC& operator-=(const PolyC& other);
  PolyC& operator*=(const PolyC& other);
  PolyC& operator*=(const Rat& scalar);

  friend PolyC operator+(PolyC a, const PolyC& b) { return a += b; }
  friend PolyC operator-(PolyC a, const PolyC& b) { return a -= b; }
  friend PolyC operator*(const PolyC& a, const PolyC& b);
  friend PolyC operator*(PolyC a, const Rat& s) { return a *= s; }
  friend PolyC operator*(const Rat& s, PolyC a) { return a *= s; }
  PolyC operator-() const;

  friend bool operator==(const PolyC& a, const PolyC& b) = default;

  PolyC derivative() const;

  /// Human-readable form such as "-3*c^5 + 42*c^3".
  std::string to_string() const;

private:
  void normalize();
  std::vector<Rat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const PolyC& p);

Rat eval_at(const PolyC& p, const Rat& v);

/// True iff every nonzero coefficient sits at an odd power. Zero counts as odd.
bool is_odd_poly(const PolyC& p);

/// Unique polynomial of degree <= degree_bound through the given points.
/// Throws InsufficientSamples when fewer than degree_bound+1 distinct
/// abscissae are supplied and InconsistentSamples when the points do not lie
/// on such a polynomial.
PolyC interpolate(std::span<const std::pair<Rat, Rat>> points, std::size_t degree_bound);

class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatMatrix transpose() const;
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

std::size_t rank(RatMatrix m);
Rat determinant(RatMatrix m);

/// Exact solution of m * x = rhs. Throws SingularMatrix / DimensionMismatch.
std::vector<Rat> solve(RatMatrix m, std::vector<Rat> rhs);
/// Same with one right-hand side per column of rhs.
RatMatrix solve(RatMatrix m, RatMatrix rhs);
/// Some solution of a possibly rectangular or singular system (free
/// variables set to 0), or nullopt when it is inconsistent.
std::optional<std::vector<Rat>> solve_any(RatMatrix m, std::vector<Rat> rhs);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  long signature() const { return static_cast<long>(positive) - static_cast<long>(negative); }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia of a symmetric form by exact congruence reduction.
Inertia inertia(RatMatrix m);

}  // namespace pnum
