#include "pnum/verify.hpp"

#include "pnum/error.hpp"
#include "pnum/genus.hpp"
#include "pnum/witness.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <thread>

namespace pnum {

namespace {

using Task = std::function<std::vector<CheckResult>()>;

// Runs tasks on a small worker pool; results keep task order.
std::vector<CheckResult> fan_out(const std::vector<Task>& tasks) {
  std::vector<std::vector<CheckResult>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) slots[i] = tasks[i]();
  };
  const std::size_t count = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min(count, tasks.size()); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  std::vector<CheckResult> out;
  for (auto& s : slots) std::move(s.begin(), s.end(), std::back_inserter(out));
  return out;
}

CheckResult check(std::string suite, std::string name, bool pass, const std::function<Json()>& payload) {
  CheckResult r{std::move(suite), std::move(name), pass, nullptr};
  if (!pass) r.counterexample = payload();
  return r;
}

CheckResult failed_with(std::string suite, std::string name, const Error& e) {
  return CheckResult{std::move(suite), std::move(name), false,
                     Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}};
}

std::string nk_label(RingParams p) { return std::to_string(p.n) + "," + std::to_string(p.k); }

Json poly_json(const PolyC& p) { return Json{{"value", p.to_string()}, {"coefficients", poly_coefficients(p)}}; }

bool same_numbers(const PNumberVector& a, const PNumberVector& b) { return a.m == b.m && a.numbers == b.numbers; }

Json vector_diff(const PNumberVector& expected, const PNumberVector& actual) {
  Json out = Json::array();
  for (const auto& [lambda, value] : expected.numbers) {
    auto it = actual.numbers.find(lambda);
    const PolyC other = it == actual.numbers.end() ? PolyC() : it->second;
    if (other != value) {
      out.push_back(Json{{"partition", lambda.to_string()}, {"expected", poly_value(value)}, {"actual", poly_value(other)}});
    }
  }
  return out;
}

PNumberVector hp2_vector(const VerifyOptions& options) {
  PNumberVector v = class_HP2();
  if (options.hp2_override) {
    v.numbers[Partition({1, 1})] = PolyC(options.hp2_override->first);
    v.numbers[Partition({2})] = PolyC(options.hp2_override->second);
  }
  return v;
}

// a * u + b * w, entrywise.
PNumberVector combine(const PolyC& a, const PNumberVector& u, const PolyC& b, const PNumberVector& w) {
  PNumberVector out = u;
  for (auto& [lambda, value] : out.numbers) value = a * u.at(lambda) + b * w.at(lambda);
  out.label.clear();
  return out;
}

std::vector<CheckResult> formulas_for(RingParams p) {
  const std::string suite = "formulas";
  const std::string at = "(" + nk_label(p) + ")";
  std::vector<CheckResult> out;
  const long m = (p.n + p.k) / 2;
  const PNumberVector v = class_X(p);

  const PolyC s_def = s_number(p);
  const PolyC s_cf = s_closed_formula(p);
  const PolyC s_fn = apply_functional(functional_from_symmetric(SymmetricKind::S, m), v);
  out.push_back(check(suite, "s triple agreement " + at, s_def == s_cf && s_cf == s_fn, [&] {
    return Json{{"n", p.n}, {"k", p.k}, {"roots", poly_json(s_def)}, {"closed", poly_json(s_cf)}, {"functional", poly_json(s_fn)}};
  }));
  out.push_back(check(suite, "s nonvanishing of degree n " + at, s_cf.degree() == p.n,
                      [&] { return Json{{"n", p.n}, {"k", p.k}, {"closed", poly_json(s_cf)}}; }));

  const PolyC q_def = q_number(p);
  const PolyC q_cf = q_closed_formula(p);
  const PolyC q_fn = apply_functional(functional_from_symmetric(SymmetricKind::Q, m), v);
  out.push_back(check(suite, "q triple agreement " + at, q_def == q_cf && q_cf == q_fn, [&] {
    return Json{{"n", p.n}, {"k", p.k}, {"roots", poly_json(q_def)}, {"closed", poly_json(q_cf)}, {"functional", poly_json(q_fn)}};
  }));
  if (p.n == 3) {
    out.push_back(check(suite, "q has no linear term " + at, q_def.coeff(1) == 0,
                        [&] { return Json{{"n", p.n}, {"k", p.k}, {"q", poly_json(q_def)}}; }));
  }

  Json bad = Json::array();
  for (const auto& [lambda, value] : v.numbers) {
    if (!is_odd_poly(value) || value.degree() > p.n) bad.push_back(Json{{"partition", lambda.to_string()}, {"value", poly_json(value)}});
  }
  out.push_back(check(suite, "odd of degree <= n " + at, bad.empty(),
                      [&] { return Json{{"n", p.n}, {"k", p.k}, {"offending", bad}}; }));

  if (p == RingParams{3, 5}) {
    out.push_back(check(suite, "s(3,5) = 30c^3", s_def == PolyC::monomial(30, 3), [&] { return poly_json(s_def); }));
    out.push_back(check(suite, "q(3,5) = 30c^3", q_def == PolyC::monomial(30, 3), [&] { return poly_json(q_def); }));
  }
  if (p == RingParams{5, 3}) {
    out.push_back(check(suite, "s(5,3) = 18c^5", s_def == PolyC::monomial(18, 5), [&] { return poly_json(s_def); }));
    const PolyC expected = PolyC::monomial(-3, 5) + PolyC::monomial(42, 3);
    out.push_back(check(suite, "q(5,3) = -3c^5 + 42c^3", q_def == expected, [&] { return poly_json(q_def); }));
  }
  return out;
}

CheckResult spin_table() {
  Json bad = Json::array();
  for (long n = 1; n <= 6; ++n) {
    for (long k = 1; k <= 6; ++k) {
      for (long c = -4; c <= 4; ++c) {
        if ((n + k) % 2 != 0) {
          try {
            spin_check({n, k}, c);
            bad.push_back(Json{{"n", n}, {"k", k}, {"c", c}, {"expected", "ParityMismatch"}});
          } catch (const Error& e) {
            if (e.code() != ErrorCode::ParityMismatch) bad.push_back(Json{{"n", n}, {"k", k}, {"c", c}, {"error", e.what()}});
          }
          continue;
        }
        const bool expected = n % 2 != 0 && k % 2 != 0 && c % 2 == 0;
        if (spin_check({n, k}, c) != expected) bad.push_back(Json{{"n", n}, {"k", k}, {"c", c}, {"expected", expected}});
      }
    }
  }
  return check("formulas", "spin truth table", bad.empty(), [&] { return Json{{"offending", bad}}; });
}

std::vector<CheckResult> genus_for(RingParams p, long c) {
  const std::string suite = "genus-kernel";
  const std::string at = "X(" + nk_label(p) + ";" + std::to_string(c) + ")";
  std::vector<CheckResult> out;
  const PNumberVector v = class_X(p, c);
  const GenusValue phi = genus_of(v);
  out.push_back(check(suite, "elliptic genus vanishes on " + at, phi.is_zero(),
                      [&] { return Json{{"n", p.n}, {"k", p.k}, {"c", c}, {"genus", to_json(phi)}}; }));
  const Rat l_value = specialize(phi, 1, 1);
  const long sigma = intersection_signature(p, c);
  out.push_back(check(suite, "L-genus equals intersection signature on " + at, l_value == sigma, [&] {
    return Json{{"n", p.n}, {"k", p.k}, {"c", c}, {"L", to_string(l_value)}, {"signature", sigma}};
  }));
  return out;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::Formulas, Suite::GenusKernel, Suite::NoK3, Suite::Thom, Suite::Witness, Suite::All}) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view suite_name(Suite suite) {
  switch (suite) {
    case Suite::Formulas: return "formulas";
    case Suite::GenusKernel: return "genus-kernel";
    case Suite::NoK3: return "nok3";
    case Suite::Thom: return "thom";
    case Suite::Witness: return "witness";
    case Suite::All: return "all";
  }
  return "";
}

std::vector<RingParams> odd_grid(long max_dim) {
  std::vector<RingParams> out;
  for (long total = 6; total <= max_dim; total += 2) {
    for (long n = 3; n <= total - 3; n += 2) out.push_back({n, total - n});
  }
  return out;
}

std::vector<CheckResult> verify_formulas(const VerifyOptions& options) {
  std::vector<Task> tasks;
  for (RingParams p : odd_grid(options.max_dim)) tasks.emplace_back([p] { return formulas_for(p); });
  std::vector<CheckResult> out = fan_out(tasks);
  out.push_back(spin_table());
  return out;
}

std::vector<CheckResult> verify_genus_kernel(const VerifyOptions& options) {
  const std::string suite = "genus-kernel";
  std::vector<Task> tasks;
  for (RingParams p : odd_grid(options.max_dim)) {
    for (long c : options.c_values) tasks.emplace_back([p, c] { return genus_for(p, c); });
  }
  std::vector<CheckResult> out = fan_out(tasks);

  const PNumberVector k3 = class_K3();
  const PNumberVector hp2 = hp2_vector(options);
  const GenusValue phi_k3 = genus_of(k3);
  const GenusValue phi_hp2 = genus_of(hp2);
  out.push_back(check(suite, "elliptic genus of K3 is -16 delta", phi_k3 == GenusValue::delta() * Rat(-16),
                      [&] { return Json{{"genus", to_json(phi_k3)}}; }));
  out.push_back(check(suite, "elliptic genus of HP2 is epsilon", phi_hp2 == GenusValue::epsilon(),
                      [&] { return Json{{"genus", to_json(phi_hp2)}, {"numbers", to_json(hp2)}}; }));

  struct Normalization {
    std::string name;
    const GenusValue* phi;
    Rat delta;
    Rat epsilon;
    Rat expected;
  };
  const Rat a_hat_delta = Rat(-1) / 8;
  const std::vector<Normalization> norms{
      {"L-genus of K3 is -16", &phi_k3, 1, 1, -16},
      {"A-hat genus of K3 is 2", &phi_k3, a_hat_delta, 0, 2},
      {"L-genus of HP2 is 1", &phi_hp2, 1, 1, 1},
      {"A-hat genus of HP2 is 0", &phi_hp2, a_hat_delta, 0, 0},
  };
  for (const auto& nm : norms) {
    const Rat value = specialize(*nm.phi, nm.delta, nm.epsilon);
    out.push_back(check(suite, nm.name, value == nm.expected, [&] {
      return Json{{"expected", to_string(nm.expected)}, {"actual", to_string(value)}, {"genus", to_json(*nm.phi)}};
    }));
  }

  for (long c : options.c_values) {
    const PNumberVector x = class_X({3, 3}, c);
    const std::vector<std::pair<std::string, std::pair<PNumberVector, PNumberVector>>> pairs{
        {"K3 x HP2", {k3, hp2}}, {"K3 x K3", {k3, k3}}, {"HP2 x HP2", {hp2, hp2}}, {"HP2 x X(3,3;" + std::to_string(c) + ")", {hp2, x}}};
    for (const auto& [name, ab] : pairs) {
      const GenusValue lhs = genus_of(product(ab.first, ab.second));
      const GenusValue rhs = genus_of(ab.first) * genus_of(ab.second);
      out.push_back(check(suite, "genus is multiplicative on " + name, lhs == rhs,
                          [&] { return Json{{"product", to_json(lhs)}, {"factors", to_json(rhs)}}; }));
    }
    const bool ideal = is_in_elliptic_kernel(product(k3, x), std::span<const long>(&c, 1));
    out.push_back(check(suite, "K3 x X(3,3;" + std::to_string(c) + ") lies in the kernel", ideal,
                        [&] { return Json{{"c", c}}; }));
  }
  return out;
}

std::vector<CheckResult> verify_nok3(const VerifyOptions& options) {
  const std::string suite = "nok3";
  std::vector<CheckResult> out;
  const BasisSequence basis(options.policy);

  // q_4 of Y(c) = 3c^2 X(3,5;c) - 5 X(5,3;c), interpolated from six samples.
  {
    const PontryaginFunctional q4 = functional_from_symmetric(SymmetricKind::Q, 4);
    std::vector<std::pair<Rat, Rat>> points;
    for (long c = 2; c <= 12; c += 2) {
      const PNumberVector y = combine(PolyC(3 * c * c), class_X({3, 5}, c), PolyC(-5), class_X({5, 3}, c));
      points.emplace_back(Rat(c), apply_functional(q4, y).coeff(0));
    }
    const PolyC got = interpolate(points, 5);
    const PolyC expected = PolyC::monomial(105, 5) + PolyC::monomial(-210, 3);
    out.push_back(check(suite, "q4(Y) = 105c^3(c^2 - 2)", got == expected, [&] { return poly_json(got); }));
  }

  for (long c : options.c_values) {
    const std::string at = " c=" + std::to_string(c);
    try {
      const BasisSequence min_n(SplitPolicy::MinN);
      const PNumberVector y = combine(PolyC(3 * c * c), class_X({3, 5}, c), PolyC(-5), class_X({5, 3}, c));
      const BordismElement d = decompose(y, min_n, c);
      const Monomial target = min_n.monomial(Partition({3, 1}));
      const bool ok = d.combination.size() == 1 && d.combination.begin()->first == target;
      out.push_back(check(suite, "Y decomposes onto K3 x alpha_3 alone" + at, ok, [&] { return to_json(d); }));
    } catch (const Error& e) {
      out.push_back(failed_with(suite, "Y decomposes onto K3 x alpha_3 alone" + at, e));
    }
  }

  std::vector<Task> tasks;
  for (long m = std::max(3L, options.m_low); m <= options.m_high; ++m) {
    for (long c : options.c_values) {
      tasks.emplace_back([m, c, basis, suite] {
        std::vector<CheckResult> rs;
        const Monomial mono = basis.monomial(Partition({m, 1}));
        const std::string at = " " + mono.label(c);
        try {
          const BordismElement e = eliminate_K3(mono, basis, c);
          const PNumberVector lhs = monomial_vector(mono, c);
          const PNumberVector rhs = element_vector(e);
          rs.push_back(check(suite, "K3 elimination keeps the numbers of" + at, same_numbers(lhs, rhs),
                             [&] { return Json{{"element", to_json(e)}, {"differences", vector_diff(lhs, rhs)}}; }));
          const bool k3_free = std::none_of(e.combination.begin(), e.combination.end(),
                                            [](const auto& t) { return t.first.contains_k3(); });
          rs.push_back(check(suite, "K3 elimination is K3-free for" + at, k3_free, [&] { return to_json(e); }));
          const GenusValue phi = genus_of(rhs);
          rs.push_back(check(suite, "K3 elimination stays in the kernel for" + at, phi.is_zero(),
                             [&] { return Json{{"element", to_json(e)}, {"genus", to_json(phi)}}; }));
        } catch (const Error& e) {
          rs.push_back(failed_with(suite, "K3 elimination of" + at, e));
        }
        return rs;
      });
    }
  }
  std::vector<CheckResult> elim = fan_out(tasks);
  std::move(elim.begin(), elim.end(), std::back_inserter(out));
  return out;
}

std::vector<CheckResult> verify_thom(const VerifyOptions& options) {
  const std::string suite = "thom";
  std::vector<Task> tasks;
  for (SplitPolicy policy : {SplitPolicy::MinN, SplitPolicy::MaxN}) {
    for (long m = 1; m <= options.thom_max_m; ++m) {
      for (long c : options.c_values) {
        tasks.emplace_back([policy, m, c, suite] {
          std::vector<CheckResult> rs;
          const BasisSequence basis(policy);
          const std::string at = " m=" + std::to_string(m) + " c=" + std::to_string(c) + " " + basis.describe();
          try {
            const RatMatrix t = thom_matrix(m, basis, c);
            rs.push_back(check(suite, "Thom matrix nonsingular" + at, true, [] { return Json(); }));
          } catch (const Error& e) {
            rs.push_back(failed_with(suite, "Thom matrix nonsingular" + at, e));
            return rs;
          }
          std::mt19937 rng(static_cast<unsigned>(1000 * m + c));
          std::uniform_int_distribution<int> num(-9, 9);
          std::uniform_int_distribution<int> den(1, 7);
          Json bad = Json::array();
          for (int trial = 0; trial < 5; ++trial) {
            std::map<Monomial, Rat> combo;
            PNumberVector v;
            for (const Partition& idx : partitions(m)) {
              Rat coeff = Rat(num(rng)) / den(rng);
              if (coeff == 0) continue;
              const Monomial mono = basis.monomial(idx);
              combo.emplace(mono, coeff);
              const PNumberVector mv = monomial_vector(mono, c);
              v = v.numbers.empty() ? combine(PolyC(coeff), mv, PolyC(), mv) : combine(PolyC(1), v, PolyC(coeff), mv);
            }
            if (combo.empty()) continue;
            const BordismElement d = decompose(v, basis, c);
            if (d.combination != combo) bad.push_back(to_json(d));
          }
          rs.push_back(check(suite, "decompose inverts expansion" + at, bad.empty(), [&] { return Json{{"mismatches", bad}}; }));
          return rs;
        });
      }
    }
  }
  return fan_out(tasks);
}

std::vector<CheckResult> verify_witness(const VerifyOptions& options) {
  const std::string suite = "witness";
  std::vector<CheckResult> out;
  const BasisSequence basis(options.policy);

  auto unbounded = [&](const std::string& name, const PontryaginFunctional& f) {
    try {
      const auto samples = default_samples(f.m, basis);
      const WitnessReport r = find_witness(f, basis, samples);
      bool ok = r.status == WitnessStatus::Unbounded && r.f_poly && r.f_poly->degree() >= 1 && is_odd_poly(*r.f_poly) &&
                r.witness_spin && r.witness_nonneg_curved && r.certificate;
      if (ok) {
        ok = abs(r.f_poly->eval(Rat(r.certificate->c))) > r.certificate->bound;
        for (const auto& [c, value] : r.samples) ok = ok && r.f_poly->eval(Rat(c)) == value;
      }
      out.push_back(check(suite, name + " is unbounded on a witness family", ok, [&] { return to_json(r); }));
    } catch (const Error& e) {
      out.push_back(failed_with(suite, name + " is unbounded on a witness family", e));
    }
  };
  auto factors = [&](const std::string& name, const PontryaginFunctional& f) {
    try {
      const auto samples = default_samples(f.m, basis);
      const bool ok = factors_through_elliptic(f, basis, samples);
      out.push_back(check(suite, name + " factors through the elliptic genus", ok, [&] { return Json{{"m", f.m}}; }));
    } catch (const Error& e) {
      out.push_back(failed_with(suite, name + " factors through the elliptic genus", e));
    }
  };
  unbounded("s_4", functional_from_symmetric(SymmetricKind::S, 4));
  unbounded("q_4", functional_from_symmetric(SymmetricKind::Q, 4));
  factors("L_4", l_genus_functional(4));
  factors("A-hat_2", a_hat_functional(2));
  factors("A-hat_4", a_hat_functional(4));
  return out;
}

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& options) {
  switch (suite) {
    case Suite::Formulas: return verify_formulas(options);
    case Suite::GenusKernel: return verify_genus_kernel(options);
    case Suite::NoK3: return verify_nok3(options);
    case Suite::Thom: return verify_thom(options);
    case Suite::Witness: return verify_witness(options);
    case Suite::All: break;
  }
  std::vector<CheckResult> out;
  for (Suite s : {Suite::Formulas, Suite::GenusKernel, Suite::NoK3, Suite::Thom, Suite::Witness}) {
    auto part = run_suite(s, options);
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

Json to_json(const CheckResult& r) {
  Json out{{"suite", r.suite}, {"name", r.name}, {"pass", r.pass}};
  if (!r.pass) out["counterexample"] = r.counterexample;
  return out;
}

}  // namespace pnum
