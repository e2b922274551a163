#include "pnum/witness.hpp"

#include "pnum/error.hpp"

#include <algorithm>
#include <set>

namespace pnum {

namespace {

long x_degree_sum(const Monomial& mono) {
  long total = 0;
  for (const auto& f : mono.factors()) {
    if (f.kind == FactorKind::X) total += f.n;
  }
  return total;
}

void validate_samples(std::span<const long> c_samples, long needed_count) {
  std::set<long> seen;
  for (long c : c_samples) {
    if (c == 0 || c % 2 != 0) throw Error(ErrorCode::Precondition, "sample c = " + std::to_string(c) + " is not even and nonzero");
    if (!seen.insert(c).second) throw Error(ErrorCode::Precondition, "duplicate sample c = " + std::to_string(c));
  }
  if (static_cast<long>(c_samples.size()) < needed_count) {
    throw Error(ErrorCode::InsufficientSamples, std::to_string(c_samples.size()) + " samples, need at least " +
                                                    std::to_string(needed_count));
  }
}

// Samples ordered by |c|, positive first on ties; the head is the working c.
std::vector<long> ordered_samples(std::span<const long> c_samples) {
  std::vector<long> out(c_samples.begin(), c_samples.end());
  std::sort(out.begin(), out.end(), [](long a, long b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return a > b;
  });
  return out;
}

Rat cauchy_bound(const PolyC& p) {
  if (p.degree() < 1) return 0;
  const Rat lead = abs(p.coeff(static_cast<std::size_t>(p.degree())));
  Rat best = 0;
  for (long i = 0; i < p.degree(); ++i) best = std::max(best, Rat(abs(p.coeff(static_cast<std::size_t>(i))) / lead));
  return best + 1;
}

}  // namespace

std::string WitnessReport::witness_label() const {
  if (!witness) return "";
  std::string out;
  const auto& fs = witness->factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += " * ";
    if (fs[i].kind == FactorKind::X) {
      out += fs[i].label(i == varying_factor ? std::nullopt : std::optional<long>(fixed_c));
    } else {
      out += fs[i].label();
    }
  }
  return out;
}

long kernel_degree_bound(long m, const BasisSequence& basis) {
  long bound = 0;
  for (const Monomial& mono : kernel_monomials(m, basis)) bound = std::max(bound, x_degree_sum(mono));
  return bound;
}

std::vector<long> default_samples(long m, const BasisSequence& basis) {
  const long count = kernel_degree_bound(m, basis) + 1 + 2;
  std::vector<long> out;
  for (long i = 1; i <= count; ++i) out.push_back(2 * i);
  return out;
}

bool factors_through_elliptic(const PontryaginFunctional& f, const BasisSequence& basis,
                              std::span<const long> c_samples) {
  validate_samples(c_samples, kernel_degree_bound(f.m, basis) + 1);
  for (const Monomial& mono : kernel_monomials(f.m, basis)) {
    for (long c : c_samples) {
      if (!apply_functional(f, monomial_vector(mono, c)).is_zero()) return false;
    }
  }
  return true;
}

PNumberVector witness_vector(const WitnessReport& report, long c) {
  if (!report.witness) throw Error(ErrorCode::Precondition, "report has no witness");
  PNumberVector acc = unit_class();
  const auto& fs = report.witness->factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const long ci = (i == report.varying_factor) ? c : report.fixed_c;
    acc = product(acc, factor_vector(fs[i], ci));
  }
  return acc;
}

long certify(const PolyC& f, const Rat& bound) {
  if (f.degree() < 1) throw Error(ErrorCode::Precondition, "certificate needs a nonconstant polynomial");
  // Past the Cauchy bounds of f and f', |f| is increasing in c.
  const Rat r = std::max(cauchy_bound(f), cauchy_bound(f.derivative()));
  Int start_int = r.get_num() / r.get_den() + 1;
  if (start_int % 2 != 0) start_int += 1;
  if (start_int < 2) start_int = 2;
  const long start = start_int.get_si();

  auto big = [&](long c) { return abs(f.eval(Rat(c))) > bound; };
  long lo = start;  // smallest candidate
  long hi = start;
  while (!big(hi)) {
    lo = hi + 2;
    hi *= 2;
  }
  // First even c in [lo, hi] with |f(c)| > bound.
  while (lo < hi) {
    long mid = lo + (hi - lo) / 2;
    if (mid % 2 != 0) --mid;
    if (big(mid)) {
      hi = mid;
    } else {
      lo = mid + 2;
    }
  }
  return hi;
}

WitnessReport find_witness(const PontryaginFunctional& f, const BasisSequence& basis,
                           std::span<const long> c_samples) {
  WitnessReport report;
  report.m = f.m;
  report.basis = basis.describe();
  if (factors_through_elliptic(f, basis, c_samples)) {
    report.status = WitnessStatus::FactorsThroughEllipticGenus;
    return report;
  }
  report.status = WitnessStatus::Unbounded;
  const auto samples = ordered_samples(c_samples);

  // First kernel monomial (in canonical order) on which f does not vanish,
  // together with the first sample where that shows.
  std::optional<Monomial> chosen;
  long work_c = 0;
  for (const Monomial& mono : kernel_monomials(f.m, basis)) {
    for (long c : samples) {
      if (!apply_functional(f, monomial_vector(mono, c)).is_zero()) {
        chosen = mono;
        work_c = c;
        break;
      }
    }
    if (chosen) break;
  }
  report.kernel_monomial = chosen;

  Monomial current = *chosen;
  while (current.contains_k3()) {
    const BordismElement elim = eliminate_K3(current, basis, work_c);
    std::optional<Monomial> best;
    Rat best_value = 0;
    for (const auto& [mono, coeff] : elim.combination) {
      const Rat value = abs(coeff * apply_functional(f, monomial_vector(mono, work_c)).coeff(0));
      if (value > best_value) {
        best = mono;
        best_value = value;
      }
    }
    if (!best) throw Error(ErrorCode::PivotZero, "f vanishes on every summand after eliminating K3 from " + current.label(work_c));
    current = *best;
  }

  report.witness = current;
  report.fixed_c = work_c;
  const auto& fs = current.factors();
  report.varying_factor = static_cast<std::size_t>(
      std::find_if(fs.begin(), fs.end(), [](const Factor& x) { return x.kind == FactorKind::X; }) - fs.begin());

  // Interpolation points: the given samples, extended by further even values
  // when the witness needs more than the kernel bound provided.
  const long degree_bound = x_degree_sum(current);
  std::vector<long> points = samples;
  const long wanted = degree_bound + 1 + 2;
  long next = 2;
  while (static_cast<long>(points.size()) < wanted) {
    if (std::find(points.begin(), points.end(), next) == points.end()) points.push_back(next);
    next += 2;
  }
  std::vector<std::pair<Rat, Rat>> xy;
  for (long c : points) {
    const Rat value = apply_functional(f, witness_vector(report, c)).coeff(0);
    report.samples.emplace_back(c, value);
    xy.emplace_back(Rat(c), value);
  }
  report.f_poly = interpolate(xy, static_cast<std::size_t>(degree_bound));
  if (report.f_poly->degree() < 1 || !is_odd_poly(*report.f_poly)) {
    throw Error(ErrorCode::PivotZero, "witness polynomial " + report.f_poly->to_string() + " is not odd and nonconstant");
  }

  const PNumberVector member = witness_vector(report, work_c);
  report.witness_spin = member.is_spin;
  report.witness_nonneg_curved = member.nonneg_curved;
  const Rat default_bound = 1000000;
  report.certificate = Certificate{default_bound, certify(*report.f_poly, default_bound)};
  return report;
}

}  // namespace pnum
