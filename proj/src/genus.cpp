#include "pnum/genus.hpp"

#include "pnum/error.hpp"
#include "pnum/symmetric.hpp"

#include <memory>
#include <mutex>
#include <sstream>

namespace pnum {

// ---------------------------------------------------------------- GenusValue

GenusValue::GenusValue(const Rat& constant) { add({0, 0}, constant); }

GenusValue GenusValue::delta() { return term(1, 1, 0); }
GenusValue GenusValue::epsilon() { return term(1, 0, 1); }

GenusValue GenusValue::term(const Rat& coeff, long delta_power, long epsilon_power) {
  GenusValue g;
  g.add({delta_power, epsilon_power}, coeff);
  return g;
}

void GenusValue::add(std::pair<long, long> key, const Rat& value) {
  if (value == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat GenusValue::coeff(long delta_power, long epsilon_power) const {
  auto it = terms_.find({delta_power, epsilon_power});
  return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<long> GenusValue::homogeneous_degree() const {
  std::optional<long> deg;
  for (const auto& [key, v] : terms_) {
    const long d = 4 * key.first + 8 * key.second;
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

GenusValue& GenusValue::operator+=(const GenusValue& other) {
  for (const auto& [key, v] : other.terms_) add(key, v);
  return *this;
}

GenusValue& GenusValue::operator-=(const GenusValue& other) {
  for (const auto& [key, v] : other.terms_) add(key, -v);
  return *this;
}

GenusValue& GenusValue::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= scalar;
  return *this;
}

GenusValue operator*(const GenusValue& a, const GenusValue& b) {
  GenusValue out;
  for (const auto& [ka, va] : a.terms_) {
    for (const auto& [kb, vb] : b.terms_) out.add({ka.first + kb.first, ka.second + kb.second}, va * vb);
  }
  return out;
}

std::string GenusValue::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [key, v] = *it;
    Rat mag = abs(v);
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    const bool bare = key.first == 0 && key.second == 0;
    if (mag != 1 || bare) os << pnum::to_string(mag);
    if (bare) continue;
    bool need_star = mag != 1;
    auto var = [&](const char* name, long power) {
      if (power == 0) return;
      if (need_star) os << "*";
      os << name;
      if (power > 1) os << "^" << power;
      need_star = true;
    };
    var("d", key.first);
    var("e", key.second);
  }
  return os.str();
}

// ---------------------------------------------------------------- series

GenusValue SeriesQ::coeff(long power) const {
  if (power < 0 || power >= static_cast<long>(coeffs.size())) return {};
  return coeffs[static_cast<std::size_t>(power)];
}

namespace {

SeriesQ truncated_product(const SeriesQ& a, const SeriesQ& b, long order) {
  SeriesQ out{std::vector<GenusValue>(static_cast<std::size_t>(order) + 1)};
  for (long i = 0; i <= std::min(a.order(), order); ++i) {
    if (a.coeffs[static_cast<std::size_t>(i)].is_zero()) continue;
    for (long j = 0; j <= std::min(b.order(), order - i); ++j) {
      out.coeffs[static_cast<std::size_t>(i + j)] +=
          a.coeffs[static_cast<std::size_t>(i)] * b.coeffs[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

// f(h(x)) truncated at x^order; h has no constant term.
SeriesQ compose(const SeriesQ& f, const SeriesQ& h, long order) {
  SeriesQ out{std::vector<GenusValue>(static_cast<std::size_t>(order) + 1)};
  SeriesQ power{std::vector<GenusValue>(static_cast<std::size_t>(order) + 1)};
  power.coeffs[0] = 1;
  for (long i = 0; i <= std::min(f.order(), order); ++i) {
    const GenusValue& fi = f.coeffs[static_cast<std::size_t>(i)];
    if (!fi.is_zero()) {
      for (long j = 0; j <= order; ++j) out.coeffs[static_cast<std::size_t>(j)] += fi * power.coeffs[static_cast<std::size_t>(j)];
    }
    power = truncated_product(power, h, order);
  }
  return out;
}

}  // namespace

SeriesQ elliptic_log_series(long order) {
  if (order < 1) throw Error(ErrorCode::Precondition, "log series order must be >= 1");
  // (1 - w)^{-1/2} = sum_j binom(2j, j) / 4^j w^j with w = 2 delta t^2 - epsilon t^4,
  // kept to t^{order-1}, then integrated term by term.
  const long inner = order - 1;
  SeriesQ w{std::vector<GenusValue>(static_cast<std::size_t>(inner) + 1)};
  if (inner >= 2) w.coeffs[2] = GenusValue::delta() * Rat(2);
  if (inner >= 4) w.coeffs[4] = -GenusValue::epsilon();

  SeriesQ integrand{std::vector<GenusValue>(static_cast<std::size_t>(inner) + 1)};
  SeriesQ wj{std::vector<GenusValue>(static_cast<std::size_t>(inner) + 1)};
  wj.coeffs[0] = 1;
  for (long j = 0; 2 * j <= inner; ++j) {
    const Rat weight = Rat(binomial(2 * j, j)) / Rat(Int(1) << static_cast<unsigned long>(2 * j));
    for (long t = 0; t <= inner; ++t) integrand.coeffs[static_cast<std::size_t>(t)] += wj.coeffs[static_cast<std::size_t>(t)] * weight;
    wj = truncated_product(wj, w, inner);
  }

  SeriesQ g{std::vector<GenusValue>(static_cast<std::size_t>(order) + 1)};
  for (long t = 0; t <= inner; ++t) {
    g.coeffs[static_cast<std::size_t>(t + 1)] = integrand.coeffs[static_cast<std::size_t>(t)] * Rat(Rat(1) / (t + 1));
  }
  return g;
}

SeriesQ series_reversion(const SeriesQ& log) {
  const long order = log.order();
  if (order < 1 || !log.coeff(0).is_zero() || log.coeff(1) != GenusValue(1)) {
    throw Error(ErrorCode::Precondition, "reversion needs a series of the form u + O(u^2)");
  }
  // Fix one coefficient at a time: [x^j] log(h(x)) = h_j + (terms in h_1..h_{j-1}).
  SeriesQ h{std::vector<GenusValue>(static_cast<std::size_t>(order) + 1)};
  h.coeffs[1] = 1;
  for (long j = 2; j <= order; ++j) {
    const SeriesQ composed = compose(log, h, j);
    h.coeffs[static_cast<std::size_t>(j)] = -composed.coeffs[static_cast<std::size_t>(j)];
  }
  return h;
}

PartitionMap<GenusValue> multiplicative_sequence(const SeriesQ& log, long m) {
  if (m < 0) throw Error(ErrorCode::Precondition, "negative weight");
  if (log.order() < 2 * m + 1) {
    throw Error(ErrorCode::InsufficientOrder, "weight " + std::to_string(m) + " needs log series order " +
                                                  std::to_string(2 * m + 1) + ", got " + std::to_string(log.order()));
  }
  const long order = 2 * m + 1;
  SeriesQ trimmed{std::vector<GenusValue>(log.coeffs.begin(), log.coeffs.begin() + order + 1)};
  const SeriesQ inverse = series_reversion(trimmed);

  // Q(x) = x / h(x) with h(x) = x (1 + a_1 x + ...); invert 1 + a_1 x + ...
  const long qlen = 2 * m;
  std::vector<GenusValue> a(static_cast<std::size_t>(qlen) + 1);
  for (long i = 0; i <= qlen; ++i) a[static_cast<std::size_t>(i)] = inverse.coeff(i + 1);
  std::vector<GenusValue> qx(static_cast<std::size_t>(qlen) + 1);
  qx[0] = 1;
  for (long i = 1; i <= qlen; ++i) {
    GenusValue acc;
    for (long t = 1; t <= i; ++t) acc += a[static_cast<std::size_t>(t)] * qx[static_cast<std::size_t>(i - t)];
    qx[static_cast<std::size_t>(i)] = -acc;
  }
  // Q is even; in z = x^2 its coefficients are q_j = qx[2j].
  std::vector<GenusValue> q(static_cast<std::size_t>(m) + 1);
  for (long j = 0; j <= m; ++j) q[static_cast<std::size_t>(j)] = qx[static_cast<std::size_t>(2 * j)];

  // log Q(z) = sum_j l_j z^j, from Q * (log Q)' = Q'.
  std::vector<GenusValue> l(static_cast<std::size_t>(m) + 1);
  for (long j = 1; j <= m; ++j) {
    GenusValue acc = q[static_cast<std::size_t>(j)] * Rat(j);
    for (long i = 1; i < j; ++i) acc -= l[static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(j - i)] * Rat(i);
    l[static_cast<std::size_t>(j)] = acc * Rat(Rat(1) / j);
  }

  // prod_i Q(z_i) = exp(sum_j l_j N_j); graded exponential
  // w E_w = sum_{j=1}^{w} j S_j E_{w-j} with S_j = l_j N_j.
  const auto N = power_sums(m);
  std::vector<ESymPoly<GenusValue>> S(static_cast<std::size_t>(m) + 1);
  for (long j = 1; j <= m; ++j) {
    for (const auto& [p, coeff] : N[static_cast<std::size_t>(j)]) {
      add_term(S[static_cast<std::size_t>(j)], p, GenusValue(l[static_cast<std::size_t>(j)] * coeff));
    }
  }
  std::vector<ESymPoly<GenusValue>> E(static_cast<std::size_t>(m) + 1);
  add_term(E[0], Partition{}, GenusValue(1));
  for (long w = 1; w <= m; ++w) {
    auto& ew = E[static_cast<std::size_t>(w)];
    for (long j = 1; j <= w; ++j) {
      for (const auto& [p, coeff] : multiply(S[static_cast<std::size_t>(j)], E[static_cast<std::size_t>(w - j)])) {
        add_term(ew, p, GenusValue(coeff * (Rat(j) / w)));
      }
    }
  }
  return E[static_cast<std::size_t>(m)];
}

const PartitionMap<GenusValue>& elliptic_sequence(long m) {
  static std::mutex mu;
  static std::map<long, std::unique_ptr<const PartitionMap<GenusValue>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) {
    auto seq = std::make_unique<const PartitionMap<GenusValue>>(multiplicative_sequence(elliptic_log_series(2 * m + 1), m));
    it = cache.emplace(m, std::move(seq)).first;
  }
  return *it->second;
}

Rat specialize(const GenusValue& g, const Rat& delta_val, const Rat& epsilon_val) {
  Rat acc = 0;
  for (const auto& [key, v] : g.terms()) {
    Rat term = v;
    for (long i = 0; i < key.first; ++i) term *= delta_val;
    for (long j = 0; j < key.second; ++j) term *= epsilon_val;
    acc += term;
  }
  return acc;
}

GenusValue genus_of(const PNumberVector& v, std::optional<Rat> c_val) {
  if (!c_val && !v.is_numeric()) {
    throw Error(ErrorCode::SymbolicC, v.label + " depends on c; supply a value");
  }
  const auto& seq = elliptic_sequence(v.m);
  GenusValue acc;
  for (const auto& [lambda, k] : seq) {
    const PolyC& entry = v.at(lambda);
    const Rat number = c_val ? entry.eval(*c_val) : entry.coeff(0);
    if (number != 0) acc += k * number;
  }
  return acc;
}

PontryaginFunctional genus_functional(long m, const Rat& delta_val, const Rat& epsilon_val) {
  PontryaginFunctional f{m, {}};
  for (const Partition& lambda : partitions(m)) f.coefficients.emplace(lambda, Rat(0));
  for (const auto& [lambda, k] : elliptic_sequence(m)) f.coefficients[lambda] = specialize(k, delta_val, epsilon_val);
  return f;
}

bool is_in_elliptic_kernel(const PNumberVector& v, std::span<const long> c_samples) {
  if (v.is_numeric()) return genus_of(v).is_zero();
  for (long c : c_samples) {
    if (!genus_of(v, Rat(c)).is_zero()) return false;
  }
  return true;
}

}  // namespace pnum
