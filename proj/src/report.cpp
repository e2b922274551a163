#include "pnum/report.hpp"

namespace pnum {

Json to_json(const Rat& r) { return to_string(r); }

Json poly_coefficients(const PolyC& p) {
  Json out = Json::object();
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i] != 0) out[std::to_string(i)] = to_string(p.coeffs()[i]);
  }
  return out;
}

Json poly_value(const PolyC& p) {
  if (p.is_constant()) return to_string(p.coeff(0));
  return p.to_string();
}

Json to_json(const GenusValue& g) {
  Json terms = Json::object();
  for (const auto& [key, v] : g.terms()) {
    terms["d^" + std::to_string(key.first) + "*e^" + std::to_string(key.second)] = to_string(v);
  }
  return Json{{"value", g.to_string()}, {"terms", terms}};
}

Json to_json(const PNumberVector& v) {
  Json numbers = Json::object();
  for (const auto& [lambda, value] : v.numbers) numbers[lambda.to_string()] = poly_value(value);
  return Json{{"manifold", v.label},
              {"dimension", 4 * v.m},
              {"spin", v.is_spin},
              {"nonneg_curved", v.nonneg_curved},
              {"numbers", numbers}};
}

Json to_json(const BordismElement& e) {
  Json terms = Json::array();
  for (const auto& [mono, coeff] : e.combination) {
    terms.push_back(Json{{"monomial", mono.label(e.c_val)}, {"indices", mono.indices().to_string()},
                         {"coefficient", to_string(coeff)}});
  }
  Json out{{"dimension", 4 * e.m}, {"c", e.c_val}, {"basis", e.basis}};
  if (!e.method.empty()) out["method"] = e.method;
  out["terms"] = terms;
  return out;
}

Json to_json(const WitnessReport& r) {
  if (r.status == WitnessStatus::FactorsThroughEllipticGenus) {
    return Json{{"status", "factors_through_elliptic_genus"}, {"m", r.m}, {"basis", r.basis}};
  }
  Json samples = Json::array();
  for (const auto& [c, value] : r.samples) samples.push_back(Json{{"c", c}, {"value", to_string(value)}});
  Json out{{"status", "unbounded"},
           {"m", r.m},
           {"basis", r.basis},
           {"witness", r.witness_label()},
           {"f", r.f_poly->to_string()},
           {"f_coefficients", poly_coefficients(*r.f_poly)},
           {"fixed_c", r.fixed_c},
           {"spin", r.witness_spin},
           {"nonneg_curved", r.witness_nonneg_curved},
           {"samples", samples}};
  if (r.kernel_monomial) out["kernel_monomial"] = r.kernel_monomial->label(r.fixed_c);
  if (r.certificate) out["certificate"] = Json{{"bound", to_string(r.certificate->bound)}, {"c", r.certificate->c}};
  return out;
}

}  // namespace pnum
