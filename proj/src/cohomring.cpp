#include "pnum/cohomring.hpp"

#include "pnum/error.hpp"

#include <vector>

namespace pnum {

namespace {

void check_same(const RingParams& a, const RingParams& b) {
  if (a != b) {
    throw Error(ErrorCode::ParamMismatch, "classes from X_" + std::to_string(a.n) + "^" + std::to_string(a.k) +
                                              " and X_" + std::to_string(b.n) + "^" + std::to_string(b.k));
  }
}

// (-c)^j
PolyC neg_c_power(long j) { return PolyC::monomial(j % 2 == 0 ? 1 : -1, static_cast<std::size_t>(j)); }

}  // namespace

void CohClass::add_reduced_term(long a, long b, const PolyC& value) {
  if (value.is_zero()) return;
  PolyC v = value;
  if (b > params_.k) {
    const long j = b - params_.k;
    a += j;
    b = params_.k;
    v *= neg_c_power(j);
  }
  if (a > params_.n) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CohClass reduce(RingParams params, const RawTerms& raw) {
  CohClass out(params);
  for (const auto& [exp, value] : raw) out.add_reduced_term(exp.first, exp.second, value);
  return out;
}

CohClass CohClass::one(RingParams params) { return scalar(params, PolyC(1)); }

CohClass CohClass::x(RingParams params) { return reduce(params, {{{1, 0}, PolyC(1)}}); }

CohClass CohClass::y(RingParams params) { return reduce(params, {{{0, 1}, PolyC(1)}}); }

CohClass CohClass::scalar(RingParams params, const PolyC& value) {
  return reduce(params, {{{0, 0}, value}});
}

PolyC CohClass::coeff(long a, long b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? PolyC() : it->second;
}

CohClass CohClass::graded_part(long complex_degree) const {
  CohClass out(params_);
  for (const auto& [exp, value] : terms_) {
    if (exp.first + exp.second == complex_degree) out.terms_.emplace(exp, value);
  }
  return out;
}

CohClass& CohClass::operator+=(const CohClass& other) {
  check_same(params_, other.params_);
  for (const auto& [exp, value] : other.terms_) add_reduced_term(exp.first, exp.second, value);
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& other) {
  check_same(params_, other.params_);
  for (const auto& [exp, value] : other.terms_) add_reduced_term(exp.first, exp.second, -value);
  return *this;
}

CohClass& CohClass::operator*=(const PolyC& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scalar;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

CohClass operator*(const CohClass& a, const CohClass& b) {
  check_same(a.params_, b.params_);
  CohClass out(a.params_);
  for (const auto& [ea, va] : a.terms_) {
    for (const auto& [eb, vb] : b.terms_) {
      if (ea.first + eb.first > a.params_.n) continue;
      out.add_reduced_term(ea.first + eb.first, ea.second + eb.second, va * vb);
    }
  }
  return out;
}

CohClass pow(const CohClass& base, long exponent) {
  if (exponent < 0) throw Error(ErrorCode::Precondition, "negative exponent");
  CohClass result = CohClass::one(base.params());
  CohClass sq = base;
  while (exponent > 0) {
    if (exponent & 1) result = result * sq;
    exponent >>= 1;
    if (exponent > 0) sq = sq * sq;
  }
  return result;
}

PolyC evaluate_top(const CohClass& z) { return z.coeff(z.params().n, z.params().k); }

PolyC top_pairing(const CohClass& a, const CohClass& b) {
  check_same(a.params(), b.params());
  const long n = a.params().n;
  const long k = a.params().k;
  // Only products landing in total degree n + k survive; y^{k+j} contributes
  // (-c)^j x^{j}, so the x exponent must come out exactly n.
  PolyC acc;
  for (const auto& [ea, va] : a.terms()) {
    for (const auto& [eb, vb] : b.terms()) {
      const long xa = ea.first + eb.first;
      const long yb = ea.second + eb.second;
      if (xa + yb != n + k || yb < k) continue;
      acc += va * vb * neg_c_power(yb - k);
    }
  }
  return acc;
}

long intersection_signature(RingParams params, long c_val) {
  if ((params.n + params.k) % 2 != 0) {
    throw Error(ErrorCode::DimensionOdd, "complex dimension " + std::to_string(params.n + params.k) + " is odd");
  }
  const long half = (params.n + params.k) / 2;
  std::vector<XYExp> basis;
  for (long a = 0; a <= params.n; ++a) {
    const long b = half - a;
    if (b >= 0 && b <= params.k) basis.emplace_back(a, b);
  }
  RatMatrix form(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      RawTerms monomial{{{basis[i].first + basis[j].first, basis[i].second + basis[j].second}, PolyC(1)}};
      form(i, j) = evaluate_top(reduce(params, monomial)).eval(c_val);
    }
  }
  return inertia(form).signature();
}

}  // namespace pnum
