#include "pnum/exact.hpp"

#include "pnum/error.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace pnum {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InconsistentSamples: return "InconsistentSamples";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParamMismatch: return "ParamMismatch";
    case ErrorCode::DimensionOdd: return "DimensionOdd";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::InsufficientOrder: return "InsufficientOrder";
    case ErrorCode::SymbolicC: return "SymbolicC";
    case ErrorCode::SingularThomMatrix: return "SingularThomMatrix";
    case ErrorCode::PivotZero: return "PivotZero";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Validation: return "Validation";
  }
  return "Unknown";
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
  auto valid_int = [](std::string_view t, bool allow_sign) {
    if (!t.empty() && allow_sign && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char ch) { return std::isdigit(ch); });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, true)) {
    throw Error(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.erase(0, 1);
  if (den.front() == '+') den.erase(0, 1);
  Int d(den);
  if (d == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  Rat r(Int(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// ---------------------------------------------------------------- PolyC

PolyC::PolyC(const Rat& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

PolyC::PolyC(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

PolyC PolyC::monomial(const Rat& coeff, std::size_t power) {
  std::vector<Rat> v(power + 1);
  v[power] = coeff;
  return PolyC(std::move(v));
}

void PolyC::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat PolyC::coeff(std::size_t power) const { return power < coeffs_.size() ? coeffs_[power] : Rat(0); }

Rat PolyC::eval(const Rat& c) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * c + *it;
  return acc;
}

PolyC& PolyC::operator+=(const PolyC& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

PolyC& PolyC::operator-=(const PolyC& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

PolyC operator*(const PolyC& a, const PolyC& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PolyC(std::move(out));
}

PolyC& PolyC::operator*=(const PolyC& other) { return *this = *this * other; }

PolyC& PolyC::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= scalar;
  return *this;
}

PolyC PolyC::operator-() const {
  PolyC out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

PolyC PolyC::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return PolyC(std::move(out));
}

std::string PolyC::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rat& a = coeffs_[i];
    if (a == 0) continue;
    Rat mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << pnum::to_string(mag);
      continue;
    }
    if (mag != 1) os << pnum::to_string(mag) << "*";
    os << "c";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PolyC& p) { return os << p.to_string(); }

Rat eval_at(const PolyC& p, const Rat& v) { return p.eval(v); }

bool is_odd_poly(const PolyC& p) {
  const auto& cs = p.coeffs();
  for (std::size_t i = 0; i < cs.size(); i += 2) {
    if (cs[i] != 0) return false;
  }
  return true;
}

PolyC interpolate(std::span<const std::pair<Rat, Rat>> points, std::size_t degree_bound) {
  // Pick degree_bound+1 distinct abscissae for the Newton form; every other
  // point then has to agree with the fitted polynomial.
  std::vector<std::pair<Rat, Rat>> nodes;
  for (const auto& pt : points) {
    bool seen = std::any_of(nodes.begin(), nodes.end(), [&](const auto& q) { return q.first == pt.first; });
    if (!seen && nodes.size() < degree_bound + 1) nodes.push_back(pt);
  }
  if (nodes.size() < degree_bound + 1) {
    throw Error(ErrorCode::InsufficientSamples,
                "need " + std::to_string(degree_bound + 1) + " distinct abscissae, got " +
                    std::to_string(nodes.size()));
  }

  const std::size_t n = nodes.size();
  std::vector<Rat> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = nodes[i].second;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i].first - nodes[i - level].first);
    }
  }
  PolyC result;
  PolyC basis(1);
  for (std::size_t i = 0; i < n; ++i) {
    result += basis * dd[i];
    basis *= PolyC{-nodes[i].first, Rat(1)};
  }

  for (const auto& [x, y] : points) {
    if (result.eval(x) != y) {
      throw Error(ErrorCode::InconsistentSamples, "point (" + to_string(x) + ", " + to_string(y) +
                                                      ") is off the degree-" +
                                                      std::to_string(degree_bound) + " interpolant");
    }
  }
  return result;
}

// ---------------------------------------------------------------- RatMatrix

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  RatMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

namespace {

// Row-reduces in place; returns the pivot columns and the determinant sign
// flips accumulated by row swaps.
struct Echelon {
  std::size_t rank = 0;
  int swap_sign = 1;
};

Echelon row_reduce(RatMatrix& m) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
      e.swap_sign = -e.swap_sign;
    }
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      Rat f = m(r, col) / m(row, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
    }
    ++row;
  }
  e.rank = row;
  return e;
}

}  // namespace

std::size_t rank(RatMatrix m) { return row_reduce(m).rank; }

Rat determinant(RatMatrix m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  Echelon e = row_reduce(m);
  if (e.rank < m.rows()) return 0;
  Rat det = e.swap_sign;
  for (std::size_t i = 0; i < m.rows(); ++i) det *= m(i, i);
  return det;
}

RatMatrix solve(RatMatrix m, RatMatrix rhs) {
  const std::size_t n = m.rows();
  if (!m.is_square() || rhs.rows() != n) {
    throw Error(ErrorCode::DimensionMismatch, "solve needs a square matrix and a matching right-hand side");
  }
  const std::size_t k = rhs.cols();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::SingularMatrix, "no pivot in column " + std::to_string(col));
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      for (std::size_t j = 0; j < k; ++j) std::swap(rhs(pivot, j), rhs(col, j));
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      Rat f = m(r, col) / m(col, col);
      for (std::size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
      for (std::size_t j = 0; j < k; ++j) rhs(r, j) -= f * rhs(col, j);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) rhs(i, j) /= m(i, i);
  }
  return rhs;
}

std::vector<Rat> solve(RatMatrix m, std::vector<Rat> rhs) {
  RatMatrix b(rhs.size(), 1);
  for (std::size_t i = 0; i < rhs.size(); ++i) b(i, 0) = rhs[i];
  RatMatrix x = solve(std::move(m), std::move(b));
  for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = x(i, 0);
  return rhs;
}

std::optional<std::vector<Rat>> solve_any(RatMatrix m, std::vector<Rat> rhs) {
  if (rhs.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length differs from row count");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
      std::swap(rhs[pivot], rhs[r]);
    }
    const Rat inv = 1 / m(r, col);
    for (std::size_t j = col; j < cols; ++j) m(r, j) *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, col) == 0) continue;
      const Rat f = m(i, col);
      for (std::size_t j = col; j < cols; ++j) m(i, j) -= f * m(r, j);
      rhs[i] -= f * rhs[r];
    }
    pivot_cols.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (rhs[i] != 0) return std::nullopt;
  }
  std::vector<Rat> x(cols, Rat(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = rhs[i];
  return x;
}

Inertia inertia(RatMatrix m) {
  if (!m.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "inertia needs a symmetric matrix");
  Inertia out;
  std::size_t n = m.rows();
  std::vector<std::size_t> live(n);
  for (std::size_t i = 0; i < n; ++i) live[i] = i;

  // Congruence transforms: add row/col j to row/col i, and symmetric
  // elimination below a nonzero diagonal pivot.
  while (!live.empty()) {
    auto diag = std::find_if(live.begin(), live.end(), [&](std::size_t i) { return m(i, i) != 0; });
    if (diag == live.end()) {
      std::size_t pi = n, pj = n;
      for (std::size_t a = 0; a < live.size() && pi == n; ++a) {
        for (std::size_t b = a + 1; b < live.size(); ++b) {
          if (m(live[a], live[b]) != 0) {
            pi = live[a];
            pj = live[b];
            break;
          }
        }
      }
      if (pi == n) {
        out.zero += live.size();
        break;
      }
      // a_ii = a_jj = 0, a_ij != 0: the new diagonal entry is 2 a_ij.
      for (std::size_t t = 0; t < n; ++t) m(pi, t) += m(pj, t);
      for (std::size_t t = 0; t < n; ++t) m(t, pi) += m(t, pj);
      diag = std::find(live.begin(), live.end(), pi);
    }
    const std::size_t p = *diag;
    const Rat piv = m(p, p);
    std::vector<Rat> pivot_row(n);
    for (std::size_t t : live) pivot_row[t] = m(p, t);
    // Schur complement; stays symmetric.
    for (std::size_t r : live) {
      if (r == p || pivot_row[r] == 0) continue;
      Rat f = pivot_row[r] / piv;
      for (std::size_t t : live) {
        if (t != p) m(r, t) -= f * pivot_row[t];
      }
    }
    (piv > 0 ? out.positive : out.negative) += 1;
    live.erase(diag);
  }
  return out;
}

}  // namespace pnum
