#include "pnum/bordism.hpp"

#include "pnum/error.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

namespace pnum {

// ---------------------------------------------------------------- Factor

long Factor::weight() const {
  switch (kind) {
    case FactorKind::K3: return 1;
    case FactorKind::HP2: return 2;
    case FactorKind::X: return (n + k) / 2;
  }
  return 0;
}

std::string Factor::label(std::optional<long> c_val) const {
  switch (kind) {
    case FactorKind::K3: return "K3";
    case FactorKind::HP2: return "HP2";
    case FactorKind::X: {
      if (c != 0) c_val = c;
      return "X(" + std::to_string(n) + "," + std::to_string(k) + ";" + (c_val ? std::to_string(*c_val) : "c") + ")";
    }
  }
  return "?";
}

std::strong_ordering operator<=>(const Factor& a, const Factor& b) {
  if (auto w = b.weight() <=> a.weight(); w != 0) return w;
  if (auto kd = static_cast<int>(b.kind) <=> static_cast<int>(a.kind); kd != 0) return kd;
  if (auto nn = a.n <=> b.n; nn != 0) return nn;
  if (auto kk = a.k <=> b.k; kk != 0) return kk;
  return a.c <=> b.c;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
}

long Monomial::weight() const {
  long w = 0;
  for (const auto& f : factors_) w += f.weight();
  return w;
}

long Monomial::count(FactorKind kind) const {
  return std::count_if(factors_.begin(), factors_.end(), [&](const Factor& f) { return f.kind == kind; });
}

std::optional<Factor> Monomial::heaviest_x() const {
  for (const auto& f : factors_) {
    if (f.kind == FactorKind::X) return f;
  }
  return std::nullopt;
}

Partition Monomial::indices() const {
  std::vector<long> parts;
  for (const auto& f : factors_) parts.push_back(f.weight());
  return Partition(std::move(parts));
}

Monomial Monomial::times(const Monomial& other) const {
  auto fs = factors_;
  fs.insert(fs.end(), other.factors_.begin(), other.factors_.end());
  return Monomial(std::move(fs));
}

Monomial Monomial::without(const std::vector<Factor>& factors) const {
  auto fs = factors_;
  for (const auto& f : factors) {
    auto it = std::find(fs.begin(), fs.end(), f);
    if (it == fs.end()) throw Error(ErrorCode::Precondition, label() + " has no factor " + f.label());
    fs.erase(it);
  }
  return Monomial(std::move(fs));
}

std::string Monomial::label(std::optional<long> c_val) const {
  if (factors_.empty()) return "pt";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += " * ";
    out += factors_[i].label(c_val);
  }
  return out;
}

// ---------------------------------------------------------------- bases

namespace {

Factor policy_generator(long index, SplitPolicy policy) {
  if (index == 1) return Factor::k3();
  if (index == 2) return Factor::hp2();
  return policy == SplitPolicy::MinN ? Factor::x(3, 2 * index - 3) : Factor::x(2 * index - 3, 3);
}

void require_even_nonzero(long c_val) {
  if (c_val == 0 || c_val % 2 != 0) {
    throw Error(ErrorCode::Precondition, "bordism computations need an even nonzero c, got " + std::to_string(c_val));
  }
}

}  // namespace

std::vector<GeneratorSpec> default_basis(long max_m, SplitPolicy policy) {
  std::vector<GeneratorSpec> out;
  for (long i = 1; i <= max_m; ++i) out.push_back({i, policy_generator(i, policy)});
  return out;
}

Factor BasisSequence::generator(long index) const {
  if (index < 1) throw Error(ErrorCode::Precondition, "generator index must be >= 1");
  auto it = overrides_.find(index);
  return it != overrides_.end() ? it->second : policy_generator(index, policy_);
}

BasisSequence BasisSequence::with_generator(const Factor& rep) const {
  if (rep.kind != FactorKind::X || rep.n % 2 == 0 || rep.k % 2 == 0 || rep.n < 3 || rep.k < 3) {
    throw Error(ErrorCode::BadParams, "generator override must be X(n,k) with n, k odd and >= 3");
  }
  BasisSequence out = *this;
  out.overrides_[rep.weight()] = rep;
  return out;
}

Monomial BasisSequence::monomial(const Partition& indices) const {
  std::vector<Factor> fs;
  for (long i : indices.parts()) fs.push_back(generator(i));
  return Monomial(std::move(fs));
}

std::string BasisSequence::describe() const {
  std::string out = policy_ == SplitPolicy::MinN ? "min-n" : "max-n";
  for (const auto& [i, f] : overrides_) out += "; alpha_" + std::to_string(i) + "=" + f.label();
  return out;
}

// ---------------------------------------------------------------- elements

Rat BordismElement::coefficient(const Monomial& mono) const {
  auto it = combination.find(mono);
  return it == combination.end() ? Rat(0) : it->second;
}

std::string BordismElement::to_string() const {
  if (combination.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, coeff] : combination) {
    if (!first) os << " + ";
    first = false;
    os << "(" << pnum::to_string(coeff) << ")*[" << mono.label(c_val) << "]";
  }
  return os.str();
}

// ---------------------------------------------------------------- vectors

namespace {

const PNumberVector& symbolic_x(long n, long k) {
  static std::mutex mu;
  static std::map<std::pair<long, long>, std::unique_ptr<const PNumberVector>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, k});
  if (it == cache.end()) {
    it = cache.emplace(std::make_pair(n, k), std::make_unique<const PNumberVector>(class_X({n, k}))).first;
  }
  return *it->second;
}

PNumberVector symbolic_factor(const Factor& f) {
  switch (f.kind) {
    case FactorKind::K3: return class_K3();
    case FactorKind::HP2: return class_HP2();
    case FactorKind::X:
      if (f.c != 0) return symbolic_x(f.n, f.k).evaluated(f.c);
      return symbolic_x(f.n, f.k);
  }
  return unit_class();
}

}  // namespace

PNumberVector factor_vector(const Factor& factor, long c_val) {
  if (factor.kind != FactorKind::X) return symbolic_factor(factor);
  if (factor.c != 0) c_val = factor.c;
  PNumberVector v = symbolic_x(factor.n, factor.k).evaluated(c_val);
  v.is_spin = spin_check({factor.n, factor.k}, c_val);
  v.label = factor.label(c_val);
  return v;
}

PNumberVector monomial_vector(const Monomial& mono, long c_val) {
  PNumberVector acc = unit_class();
  for (const auto& f : mono.factors()) acc = product(acc, factor_vector(f, c_val));
  return acc;
}

PNumberVector monomial_vector_symbolic(const Monomial& mono) {
  PNumberVector acc = unit_class();
  for (const auto& f : mono.factors()) acc = product(acc, symbolic_factor(f));
  return acc;
}

PNumberVector element_vector(const BordismElement& element) {
  PNumberVector out;
  out.m = element.m;
  for (const Partition& lambda : partitions(element.m)) out.numbers.emplace(lambda, PolyC());
  for (const auto& [mono, coeff] : element.combination) {
    const PNumberVector v = monomial_vector(mono, element.c_val);
    for (auto& [lambda, value] : out.numbers) value += v.at(lambda) * coeff;
  }
  out.label = element.to_string();
  return out;
}

std::vector<Partition> kernel_monomials(long m) {
  std::vector<Partition> out;
  for (const Partition& p : partitions(m)) {
    if (p.largest() >= 3) out.push_back(p);
  }
  return out;
}

std::vector<Monomial> kernel_monomials(long m, const BasisSequence& basis) {
  std::vector<Monomial> out;
  for (const Partition& p : kernel_monomials(m)) out.push_back(basis.monomial(p));
  return out;
}

// ---------------------------------------------------------------- Thom matrices

RatMatrix thom_matrix(long m, const BasisSequence& basis, long c_val) {
  require_even_nonzero(c_val);
  const auto parts = partitions(m);
  RatMatrix t(parts.size(), parts.size());
  for (std::size_t col = 0; col < parts.size(); ++col) {
    const PNumberVector v = monomial_vector(basis.monomial(parts[col]), c_val);
    for (std::size_t row = 0; row < parts.size(); ++row) t(row, col) = v.at(parts[row]).coeff(0);
  }
  if (rank(t) != parts.size()) {
    throw Error(ErrorCode::SingularThomMatrix, "weight " + std::to_string(m) + ", c = " + std::to_string(c_val) +
                                                   ", basis " + basis.describe());
  }
  return t;
}

BordismElement decompose(const PNumberVector& v, const BasisSequence& basis, long c_val) {
  const RatMatrix t = thom_matrix(v.m, basis, c_val);
  const auto parts = partitions(v.m);
  std::vector<Rat> rhs;
  for (const Partition& lambda : parts) rhs.push_back(v.at(lambda).eval(c_val));
  const auto x = solve(t, rhs);
  BordismElement out{v.m, c_val, {}, basis.describe(), {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (x[i] != 0) out.combination.emplace(basis.monomial(parts[i]), x[i]);
  }
  return out;
}

// ---------------------------------------------------------------- K3 elimination

BordismElement k3_relation(const Factor& x_factor, const BasisSequence& basis, long c_val) {
  require_even_nonzero(c_val);
  if (x_factor.kind != FactorKind::X) throw Error(ErrorCode::Precondition, "K3 pairs with an X factor only");
  const long j = x_factor.weight();
  const BasisSequence local = basis.with_generator(x_factor);

  const Int lambda = binomial(2 * j + 1, 3) - (2 * j - 1);
  const Int mu = binomial(2 * j + 1, 2 * j - 1) - 3;
  const Factor low_n = Factor::x(3, 2 * j - 1);
  const Factor high_n = Factor::x(2 * j - 1, 3);

  Rat c_power = 1;
  for (long i = 0; i < 2 * j - 4; ++i) c_power *= c_val;
  const Rat mu_term = Rat(mu) * c_power;
  const Rat lambda_term = -Rat(lambda);

  BordismElement z{j + 1, c_val, {}, local.describe(), {}};
  z.combination[Monomial({low_n})] += mu_term;
  z.combination[Monomial({high_n})] += lambda_term;
  std::erase_if(z.combination, [](const auto& kv) { return kv.second == 0; });

  const BordismElement zd = decompose(element_vector(z), local, c_val);
  const Monomial pivot({Factor::k3(), x_factor});
  const Rat r = zd.coefficient(pivot);
  if (r == 0) {
    throw Error(ErrorCode::PivotZero, "coefficient of " + pivot.label(c_val) + " in Z(" + std::to_string(c_val) +
                                          ") vanishes");
  }
  for (const auto& [mono, coeff] : zd.combination) {
    if (!mono.contains_x()) {
      throw Error(ErrorCode::PivotZero, "Z(c) has a component outside the elliptic kernel: " + mono.label(c_val));
    }
    if (mono == local.monomial(Partition{j + 1})) {
      throw Error(ErrorCode::PivotZero, "Z(c) has a nonzero indecomposable component");
    }
  }

  // K3 * X = (Z - sum_{other} coeff * mono) / r
  BordismElement rel{j + 1, c_val, {}, local.describe(), {}};
  for (const auto& [mono, coeff] : z.combination) rel.combination[mono] += coeff / r;
  for (const auto& [mono, coeff] : zd.combination) {
    if (mono == pivot) continue;
    rel.combination[mono] -= coeff / r;
  }
  std::erase_if(rel.combination, [](const auto& kv) { return kv.second == 0; });
  return rel;
}

BordismElement eliminate_K3(const Monomial& mono, const BasisSequence& basis, long c_val) {
  require_even_nonzero(c_val);
  if (!mono.contains_k3() || !mono.contains_x()) {
    throw Error(ErrorCode::Precondition, mono.label() + " needs both a K3 factor and an X factor");
  }

  // One substitution step per K3-containing product: the K3 next to the
  // heaviest X is traded via k3_relation. Products reachable this way form a
  // finite set; their equations u_i = sum_j a_ij u_j + b_i are then solved
  // exactly, which also resolves substitution cycles.
  std::map<Factor, BordismElement> relations;
  auto relation_for = [&](const Factor& x) -> const BordismElement& {
    auto it = relations.find(x);
    if (it == relations.end()) it = relations.emplace(x, k3_relation(x, basis, c_val)).first;
    return it->second;
  };

  std::vector<Monomial> unknowns;
  std::map<Monomial, std::size_t> unknown_index;
  std::vector<std::map<Monomial, Rat>> step_terms;
  std::deque<Monomial> queue{mono};
  unknown_index.emplace(mono, 0);
  unknowns.push_back(mono);

  while (!queue.empty()) {
    const Monomial u = queue.front();
    queue.pop_front();
    const auto x = u.heaviest_x();
    if (!x) throw Error(ErrorCode::PivotZero, "substitution produced " + u.label(c_val) + " outside the kernel");
    const Monomial rest = u.without({Factor::k3(), *x});
    std::map<Monomial, Rat> terms;
    for (const auto& [m2, coeff] : relation_for(*x).combination) {
      const Monomial term = m2.times(rest);
      terms[term] += coeff;
      if (term.contains_k3() && !unknown_index.contains(term)) {
        unknown_index.emplace(term, unknowns.size());
        unknowns.push_back(term);
        queue.push_back(term);
      }
    }
    step_terms.push_back(std::move(terms));
  }

  std::vector<Monomial> free_terms;
  std::map<Monomial, std::size_t> free_index;
  for (const auto& terms : step_terms) {
    for (const auto& [term, coeff] : terms) {
      if (!term.contains_k3() && !free_index.contains(term)) {
        free_index.emplace(term, free_terms.size());
        free_terms.push_back(term);
      }
    }
  }

  const std::size_t nu = unknowns.size();
  RatMatrix lhs = RatMatrix::identity(nu);
  RatMatrix rhs(nu, free_terms.size());
  for (std::size_t i = 0; i < nu; ++i) {
    for (const auto& [term, coeff] : step_terms[i]) {
      if (term.contains_k3()) {
        lhs(i, unknown_index.at(term)) -= coeff;
      } else {
        rhs(i, free_index.at(term)) += coeff;
      }
    }
  }
  // u_0 = y^T rhs for any y with y^T lhs = e_0; a singular lhs is fine as
  // long as e_0 lies in its row space.
  std::vector<Rat> e0(nu, Rat(0));
  e0[0] = 1;
  BordismElement out{mono.weight(), c_val, {}, basis.describe(), {}};
  if (const auto y = solve_any(lhs.transpose(), e0)) {
    for (std::size_t f = 0; f < free_terms.size(); ++f) {
      Rat coeff = 0;
      for (std::size_t i = 0; i < nu; ++i) coeff += (*y)[i] * rhs(i, f);
      if (coeff != 0) out.combination.emplace(free_terms[f], coeff);
    }
    out.method = "relations";
    return out;
  }

  // The relations alone do not reach a K3-free form: solve directly in the
  // span of all K3-free kernel products at this c.
  // At small |c| the products at c alone can be dependent; their copies with
  // every X factor moved to the next even c fill the gap.
  auto candidates = k3_free_kernel_products(mono.weight());
  const long c_next = c_val > 0 ? c_val + 2 : c_val - 2;
  for (std::size_t j = 0, n = candidates.size(); j < n; ++j) {
    std::vector<Factor> fs = candidates[j].factors();
    for (Factor& f : fs) {
      if (f.kind == FactorKind::X) f.c = c_next;
    }
    candidates.emplace_back(std::move(fs));
  }
  const auto parts = partitions(mono.weight());
  RatMatrix a(parts.size(), candidates.size());
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    const PNumberVector v = monomial_vector(candidates[j], c_val);
    for (std::size_t i = 0; i < parts.size(); ++i) a(i, j) = v.at(parts[i]).coeff(0);
  }
  const PNumberVector target = monomial_vector(mono, c_val);
  std::vector<Rat> b(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) b[i] = target.at(parts[i]).coeff(0);
  const auto x = solve_any(a, b);
  if (!x) throw Error(ErrorCode::PivotZero, mono.label(c_val) + " is not in the span of K3-free products");
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    if ((*x)[j] != 0) out.combination.emplace(candidates[j], (*x)[j]);
  }
  out.method = "k3-free-span";
  return out;
}

std::vector<Monomial> k3_free_kernel_products(long m) {
  // Factor alphabet of weight w: HP2 (w = 2) and X(n,k), n + k = 2w, n, k odd >= 3.
  std::vector<Monomial> out;
  std::vector<Factor> current;
  auto rec = [&](auto&& self, long remaining, const std::optional<Factor>& cap) -> void {
    if (remaining == 0) {
      if (std::any_of(current.begin(), current.end(), [](const Factor& f) { return f.kind == FactorKind::X; })) {
        out.emplace_back(current);
      }
      return;
    }
    std::vector<Factor> options;
    for (long w = remaining; w >= 2; --w) {
      for (long n = 3; n <= 2 * w - 3; n += 2) options.push_back(Factor::x(n, 2 * w - n));
      if (w == 2) options.push_back(Factor::hp2());
    }
    std::sort(options.begin(), options.end());
    for (const Factor& f : options) {
      if (cap && f < *cap) continue;
      current.push_back(f);
      self(self, remaining - f.weight(), f);
      current.pop_back();
    }
  };
  rec(rec, m, std::nullopt);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace pnum
