#include "pnum/charclass.hpp"

#include "pnum/error.hpp"
#include "pnum/symmetric.hpp"

#include <functional>

namespace pnum {

namespace {

std::string params_name(RingParams p) { return "(" + std::to_string(p.n) + "," + std::to_string(p.k) + ")"; }

long half_dimension(RingParams params) {
  if ((params.n + params.k) % 2 != 0) {
    throw Error(ErrorCode::WeightMismatch, "X_n^k with n+k odd has no Pontryagin numbers " + params_name(params));
  }
  return (params.n + params.k) / 2;
}

CohClass y_plus_cx(RingParams params) { return CohClass::y(params) + CohClass::x(params) * PolyC::c(); }

// Splits a class into its homogeneous pieces of complex degree step*i.
std::vector<CohClass> graded_parts(const CohClass& total, long top, long step) {
  std::vector<CohClass> out;
  for (long i = 0; i * step <= top; ++i) out.push_back(total.graded_part(i * step));
  return out;
}

// sum_i mult_i * r_i^power
CohClass power_sum(const RootSystem& rs, long power) {
  CohClass acc(rs.params);
  for (const auto& [root, mult] : rs.roots) acc += pow(root, power) * PolyC(mult);
  return acc;
}

}  // namespace

long RootSystem::total_multiplicity() const {
  long total = 0;
  for (const auto& r : roots) total += r.second;
  return total;
}

RootSystem root_system(RingParams params) {
  const CohClass x = CohClass::x(params);
  const CohClass y = CohClass::y(params);
  const CohClass w = y_plus_cx(params);
  return RootSystem{params, {{x * x, params.n + 1}, {y * y, params.k}, {w * w, 1}}};
}

std::vector<CohClass> total_chern(RingParams params) {
  const CohClass one = CohClass::one(params);
  const CohClass total = pow(one + CohClass::x(params), params.n + 1) * pow(one + CohClass::y(params), params.k) *
                         (one + y_plus_cx(params));
  return graded_parts(total, params.n + params.k, 1);
}

std::vector<CohClass> total_pontryagin(RingParams params) {
  const CohClass one = CohClass::one(params);
  const CohClass x = CohClass::x(params);
  const CohClass y = CohClass::y(params);
  const CohClass w = y_plus_cx(params);
  const CohClass total = pow(one + x * x, params.n + 1) * pow(one + y * y, params.k) * (one + w * w);
  return graded_parts(total, params.n + params.k, 2);
}

PolyC pontryagin_number(RingParams params, const Partition& lambda) {
  const long m = half_dimension(params);
  if (lambda.weight() != m) {
    throw Error(ErrorCode::WeightMismatch,
                "partition " + lambda.to_string() + " has weight " + std::to_string(lambda.weight()) +
                    ", X_n^k" + params_name(params) + " needs " + std::to_string(m));
  }
  const auto p = total_pontryagin(params);
  CohClass acc = CohClass::one(params);
  for (long part : lambda.parts()) acc = acc * p[static_cast<std::size_t>(part)];
  return evaluate_top(acc);
}

PartitionMap<PolyC> pontryagin_numbers(RingParams params) {
  const long m = half_dimension(params);
  const auto p = total_pontryagin(params);
  PartitionMap<PolyC> out;
  std::vector<long> parts;
  std::function<void(long, long, const CohClass&)> rec = [&](long remaining, long max_part, const CohClass& acc) {
    for (long part = std::min(remaining, max_part); part >= 1; --part) {
      parts.push_back(part);
      const CohClass& pi = p[static_cast<std::size_t>(part)];
      if (part == remaining) {
        out.emplace(Partition(parts), top_pairing(acc, pi));
      } else {
        rec(remaining - part, part, acc * pi);
      }
      parts.pop_back();
    }
  };
  if (m == 0) {
    out.emplace(Partition{}, evaluate_top(CohClass::one(params)));
  } else {
    rec(m, m, CohClass::one(params));
  }
  return out;
}

PolyC s_number(RingParams params) {
  const long m = half_dimension(params);
  return evaluate_top(power_sum(root_system(params), m));
}

PolyC s_closed_formula(RingParams params) {
  if (params.n % 2 == 0 || params.k % 2 == 0 || params.n < 1 || params.k < 1) {
    throw Error(ErrorCode::BadParams, "closed s-formula needs n, k odd " + params_name(params));
  }
  const Int bracket = binomial(params.k + params.n - 1, params.n) - params.k;
  return PolyC::monomial(Rat(bracket), static_cast<std::size_t>(params.n));
}

PolyC q_number(RingParams params) {
  const long m = half_dimension(params);
  if (m < 2) throw Error(ErrorCode::Precondition, "q-number needs m > 1");
  const RootSystem rs = root_system(params);
  return evaluate_top(power_sum(rs, 1) * power_sum(rs, m - 1) - power_sum(rs, m));
}

PolyC q_closed_formula(RingParams params) {
  const long n = params.n;
  const long k = params.k;
  if (n % 2 == 0 || k % 2 == 0 || n < 3 || k < 3) {
    throw Error(ErrorCode::BadParams, "closed q-formula needs n, k odd and >= 3 " + params_name(params));
  }
  const Int top = Int(k) * (binomial(n + k - 3, n) - (k - 1));
  const Int low = Int(n + 1) * (binomial(n + k - 3, n - 2) - k);
  return PolyC::monomial(Rat(top), static_cast<std::size_t>(n)) +
         PolyC::monomial(Rat(low), static_cast<std::size_t>(n - 2));
}

bool PontryaginFunctional::is_zero() const {
  for (const auto& [p, v] : coefficients) {
    if (v != 0) return false;
  }
  return true;
}

PontryaginFunctional functional_from_symmetric(SymmetricKind kind, long m) {
  if (m < 1 || (kind == SymmetricKind::Q && m < 2)) {
    throw Error(ErrorCode::Precondition, "symmetric functional needs m >= 1 (s) or m >= 2 (q)");
  }
  const auto N = power_sums(m);
  PontryaginFunctional f{m, {}};
  if (kind == SymmetricKind::S) {
    f.coefficients = N[static_cast<std::size_t>(m)];
  } else {
    // sum_{i != j} r_i r_j^{m-1} = e_1 N_{m-1} - N_m
    for (const auto& [p, coeff] : N[static_cast<std::size_t>(m - 1)]) add_term(f.coefficients, p.with_part(1), coeff);
    for (const auto& [p, coeff] : N[static_cast<std::size_t>(m)]) add_term(f.coefficients, p, Rat(-coeff));
  }
  return f;
}

bool spin_check(RingParams params, long c_val) {
  if ((params.n - params.k) % 2 != 0) {
    throw Error(ErrorCode::ParityMismatch, "n and k differ in parity " + params_name(params));
  }
  // c_1 = (k+1) y + (n+1+c) x must be even.
  return params.k % 2 != 0 && (params.n + 1 + c_val) % 2 == 0;
}

const PolyC& PNumberVector::at(const Partition& lambda) const {
  auto it = numbers.find(lambda);
  if (it == numbers.end()) {
    throw Error(ErrorCode::WeightMismatch, "no partition " + lambda.to_string() + " in a weight-" +
                                               std::to_string(m) + " vector");
  }
  return it->second;
}

bool PNumberVector::is_numeric() const {
  for (const auto& [p, v] : numbers) {
    if (!v.is_constant()) return false;
  }
  return true;
}

PNumberVector PNumberVector::evaluated(const Rat& c) const {
  PNumberVector out = *this;
  for (auto& [p, v] : out.numbers) v = PolyC(v.eval(c));
  return out;
}

PNumberVector bundle_vector(RingParams params) {
  PNumberVector v;
  v.m = half_dimension(params);
  v.numbers = pontryagin_numbers(params);
  v.label = "X" + params_name(params);
  return v;
}

PNumberVector class_X(RingParams params, std::optional<long> c_val) {
  if (params.n % 2 == 0 || params.k % 2 == 0 || params.n < 3 || params.k < 3) {
    throw Error(ErrorCode::BadParams, "X_n^k(c) generators need n, k odd and >= 3 " + params_name(params));
  }
  PNumberVector v = bundle_vector(params);
  v.nonneg_curved = true;
  const std::string nk = std::to_string(params.n) + "," + std::to_string(params.k);
  if (c_val) {
    v = v.evaluated(*c_val);
    v.is_spin = spin_check(params, *c_val);
    v.label = "X(" + nk + ";" + std::to_string(*c_val) + ")";
  } else {
    v.is_spin = true;
    v.label = "X(" + nk + ";c)";
  }
  return v;
}

PNumberVector class_K3() {
  // sigma(K3) = 3 - 19 = -16 and L_1 = p_1 / 3, so p_1[K3] = -48.
  PNumberVector v;
  v.m = 1;
  v.numbers.emplace(Partition{1}, PolyC(-48));
  v.is_spin = true;
  v.nonneg_curved = false;
  v.label = "K3";
  return v;
}

PNumberVector class_HP2() {
  // Solving sigma = (7 p_2 - p_1^2) / 45 = 1 together with
  // A-hat = (7 p_1^2 - 4 p_2) / 5760 = 0 gives p_1^2 = 4, p_2 = 7.
  PNumberVector v;
  v.m = 2;
  v.numbers.emplace(Partition{2}, PolyC(7));
  v.numbers.emplace(Partition{1, 1}, PolyC(4));
  v.is_spin = true;
  v.nonneg_curved = true;
  v.label = "HP2";
  return v;
}

PNumberVector unit_class() {
  PNumberVector v;
  v.m = 0;
  v.numbers.emplace(Partition{}, PolyC(1));
  v.is_spin = true;
  v.nonneg_curved = true;
  v.label = "pt";
  return v;
}

PNumberVector product(const PNumberVector& a, const PNumberVector& b) {
  PNumberVector out;
  out.m = a.m + b.m;
  out.is_spin = a.is_spin && b.is_spin;
  out.nonneg_curved = a.nonneg_curved && b.nonneg_curved;
  if (a.m == 0 && b.m == 0) {
    out.label = a.label;
  } else if (a.m == 0) {
    out.label = b.label;
  } else if (b.m == 0) {
    out.label = a.label;
  } else {
    out.label = a.label + " * " + b.label;
  }

  // p_l(M x N) = sum over splits l_i = a_i + b_i of p_{(a_i)}[M] p_{(b_i)}[N],
  // keeping only splits whose M-part has weight a.m.
  std::vector<long> left, right;
  for (const Partition& lambda : partitions(out.m)) {
    const auto& parts = lambda.parts();
    PolyC total;
    std::function<void(std::size_t, long)> rec = [&](std::size_t idx, long left_weight) {
      if (idx == parts.size()) {
        if (left_weight != a.m) return;
        total += a.at(Partition(left)) * b.at(Partition(right));
        return;
      }
      long remaining = 0;
      for (std::size_t t = idx; t < parts.size(); ++t) remaining += parts[t];
      for (long share = 0; share <= parts[idx]; ++share) {
        if (left_weight + share > a.m) break;
        if (left_weight + share + (remaining - parts[idx]) < a.m) continue;
        if (share > 0) left.push_back(share);
        if (share < parts[idx]) right.push_back(parts[idx] - share);
        rec(idx + 1, left_weight + share);
        if (share < parts[idx]) right.pop_back();
        if (share > 0) left.pop_back();
      }
    };
    rec(0, 0);
    out.numbers.emplace(lambda, std::move(total));
  }
  return out;
}

PolyC apply_functional(const PontryaginFunctional& f, const PNumberVector& v) {
  if (f.m != v.m) {
    throw Error(ErrorCode::WeightMismatch, "functional of weight " + std::to_string(f.m) + " applied to a weight-" +
                                               std::to_string(v.m) + " class");
  }
  PolyC acc;
  for (const auto& [lambda, coeff] : f.coefficients) {
    if (coeff != 0) acc += v.at(lambda) * coeff;
  }
  return acc;
}

}  // namespace pnum
