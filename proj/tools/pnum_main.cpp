// pnum: Pontryagin numbers of CP^k-bundles over CP^n, bordism decompositions
// and witness families. Every invocation writes one JSON document.

#include "pnum/bordism.hpp"
#include "pnum/error.hpp"
#include "pnum/genus.hpp"
#include "pnum/manifold_expr.hpp"
#include "pnum/report.hpp"
#include "pnum/verify.hpp"
#include "pnum/witness.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace pnum;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct Output {
  std::string path;

  void write(const Json& doc) const {
    const std::string text = doc.dump(2) + "\n";
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::Validation, "cannot write " + path);
    out << text;
  }
};

bool is_usage_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::Validation:
    case ErrorCode::BadParams:
    case ErrorCode::Precondition:
    case ErrorCode::WeightMismatch:
    case ErrorCode::ParityMismatch:
    case ErrorCode::DimensionOdd:
    case ErrorCode::SymbolicC:
    case ErrorCode::InsufficientSamples:
      return true;
    default:
      return false;
  }
}

SplitPolicy parse_split(const std::string& s) {
  if (s == "min-n") return SplitPolicy::MinN;
  if (s == "max-n") return SplitPolicy::MaxN;
  throw Error(ErrorCode::Parse, "basis split must be min-n or max-n, got '" + s + "'");
}

std::pair<long, long> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const long v = std::stol(s);
      return {v, v};
    }
    return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::Parse, "expected a range a..b, got '" + s + "'");
  }
}

std::pair<Rat, Rat> parse_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::Parse, "expected two values p11,p2, got '" + s + "'");
  return {parse_rat(s.substr(0, comma)), parse_rat(s.substr(comma + 1))};
}

// Fills symbolic c in X factors with c_val.
ManifoldExpr with_c(ManifoldExpr expr, std::optional<long> c_val) {
  if (!c_val) return expr;
  for (auto& f : expr.factors) {
    if (f.kind == ExprFactor::Kind::X && !f.c) f.c = *c_val;
  }
  return expr;
}

Monomial to_monomial(const ManifoldExpr& expr, long c_val) {
  std::vector<Factor> factors;
  for (const auto& f : expr.factors) {
    switch (f.kind) {
      case ExprFactor::Kind::K3: factors.push_back(Factor::k3()); break;
      case ExprFactor::Kind::HP2: factors.push_back(Factor::hp2()); break;
      case ExprFactor::Kind::X:
        if (f.c && *f.c != c_val) {
          throw Error(ErrorCode::Precondition, "every X factor must use c = " + std::to_string(c_val));
        }
        if (f.n % 2 == 0 || f.k % 2 == 0 || f.n < 3 || f.k < 3) {
          throw Error(ErrorCode::BadParams, "X factors need n, k odd and >= 3");
        }
        factors.push_back(Factor::x(f.n, f.k));
        break;
    }
  }
  return Monomial(std::move(factors));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Validation, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pontryagin numbers, bordism decompositions and witness families for X(n,k;c)"};
  app.require_subcommand(1);
  Output output;
  app.add_option("--out", output.path, "Write the JSON document to this file");

  // numbers
  auto* numbers = app.add_subcommand("numbers", "Pontryagin numbers of a product of K3, HP2 and X(n,k;c)");
  std::string numbers_expr;
  bool want_s = false, want_q = false, want_all = false;
  std::string numbers_partition;
  std::optional<long> numbers_c;
  numbers->add_option("expr", numbers_expr, "e.g. \"X(3,5;c)\" or \"K3 * X(3,3;2)\"")->required();
  numbers->add_flag("--s", want_s, "s-number");
  numbers->add_flag("--q", want_q, "q-number");
  numbers->add_option("--partition", numbers_partition, "single Pontryagin number, e.g. [2,1]");
  numbers->add_flag("--all", want_all, "every Pontryagin number (default)");
  numbers->add_option("--c", numbers_c, "value for symbolic c");

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string suite_text;
  VerifyOptions vopts;
  std::string m_range = "3..5";
  std::string verify_split = "min-n";
  std::string hp2_text;
  verify->add_option("suite", suite_text, "formulas | genus-kernel | nok3 | thom | witness | all")->required();
  verify->add_option("--max-dim", vopts.max_dim, "largest n + k in the grid")->capture_default_str();
  verify->add_option("--c", vopts.c_values, "comma-separated even c values")->delimiter(',')->capture_default_str();
  verify->add_option("--m", m_range, "range of m for K3 elimination, a..b")->capture_default_str();
  verify->add_option("--basis-split", verify_split, "min-n | max-n")->capture_default_str();
  verify->add_option("--hp2", hp2_text, "replace the HP2 numbers p_{1,1},p_2");

  // decompose
  auto* decomp = app.add_subcommand("decompose", "Coefficients in the basis monomials at fixed c");
  std::string decomp_expr;
  long decomp_c = 2;
  std::string decomp_split = "min-n";
  decomp->add_option("expr", decomp_expr)->required();
  decomp->add_option("--c", decomp_c, "even c")->capture_default_str();
  decomp->add_option("--basis-split", decomp_split, "min-n | max-n")->capture_default_str();

  // eliminate
  auto* elim = app.add_subcommand("eliminate", "Rewrite a product containing K3 without K3");
  std::string elim_expr;
  long elim_c = 2;
  std::string elim_split = "min-n";
  elim->add_option("expr", elim_expr, "e.g. \"K3 * X(3,5;c)\"")->required();
  elim->add_option("--c", elim_c, "even c")->capture_default_str();
  elim->add_option("--basis-split", elim_split, "min-n | max-n")->capture_default_str();

  // witness
  auto* witness = app.add_subcommand("witness", "Factor through the elliptic genus or find an unbounded family");
  std::string spec_path;
  std::string named;
  long named_m = 0;
  std::string witness_split = "min-n";
  std::vector<long> samples;
  witness->add_option("spec", spec_path, "JSON functional spec file");
  witness->add_option("--functional", named, "s | q | L | Ahat instead of a spec file");
  witness->add_option("--m", named_m, "weight for --functional");
  witness->add_option("--basis-split", witness_split, "min-n | max-n")->capture_default_str();
  witness->add_option("--samples", samples, "comma-separated even c samples")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (numbers->parsed()) {
      const ManifoldExpr expr = with_c(parse_manifold_expr(numbers_expr), numbers_c);
      const PNumberVector v = evaluate(expr);
      Json doc = to_json(v);
      if (!want_all && (want_s || want_q || !numbers_partition.empty())) doc.erase("numbers");
      if (want_s) doc["s"] = poly_value(apply_functional(functional_from_symmetric(SymmetricKind::S, v.m), v));
      if (want_q) {
        if (v.m < 2) throw Error(ErrorCode::Precondition, "q-number needs dimension >= 8");
        doc["q"] = poly_value(apply_functional(functional_from_symmetric(SymmetricKind::Q, v.m), v));
      }
      if (!numbers_partition.empty()) {
        const Partition p = parse_partition(numbers_partition);
        if (p.weight() != v.m) {
          throw Error(ErrorCode::WeightMismatch, "partition " + p.to_string() + " has weight " + std::to_string(p.weight()) +
                                                     ", manifold has m = " + std::to_string(v.m));
        }
        doc["partition"] = p.to_string();
        doc["value"] = poly_value(v.at(p));
      }
      if (!v.is_spin) doc["warnings"] = Json::array({"not spin"});
      output.write(doc);
      return kOk;
    }

    if (verify->parsed()) {
      const auto suite = parse_suite(suite_text);
      if (!suite) throw Error(ErrorCode::Parse, "unknown suite '" + suite_text + "'");
      std::tie(vopts.m_low, vopts.m_high) = parse_range(m_range);
      vopts.policy = parse_split(verify_split);
      if (!hp2_text.empty()) vopts.hp2_override = parse_pair(hp2_text);
      for (long c : vopts.c_values) {
        if (c == 0 || c % 2 != 0) throw Error(ErrorCode::Precondition, "c values must be even and nonzero");
      }
      const auto results = run_suite(*suite, vopts);
      Json items = Json::array();
      std::size_t failures = 0;
      for (const auto& r : results) {
        items.push_back(to_json(r));
        if (!r.pass) ++failures;
      }
      Json opts{{"max_dim", vopts.max_dim}, {"c", vopts.c_values}, {"m", m_range}, {"basis_split", verify_split}};
      if (vopts.hp2_override) {
        opts["hp2"] = Json::array({to_string(vopts.hp2_override->first), to_string(vopts.hp2_override->second)});
      }
      output.write(Json{{"suite", suite_text},
                        {"options", opts},
                        {"checks", results.size()},
                        {"failures", failures},
                        {"pass", failures == 0},
                        {"results", items}});
      return failures == 0 ? kOk : kFailure;
    }

    if (decomp->parsed()) {
      const PNumberVector v = evaluate(with_c(parse_manifold_expr(decomp_expr), decomp_c));
      if (!v.is_numeric()) throw Error(ErrorCode::SymbolicC, "decompose needs numeric c in every factor");
      const BordismElement e = decompose(v, BasisSequence(parse_split(decomp_split)), decomp_c);
      Json doc = to_json(e);
      doc["manifold"] = v.label;
      output.write(doc);
      return kOk;
    }

    if (elim->parsed()) {
      const Monomial mono = to_monomial(parse_manifold_expr(elim_expr), elim_c);
      const BordismElement e = eliminate_K3(mono, BasisSequence(parse_split(elim_split)), elim_c);
      Json doc = to_json(e);
      doc["input"] = mono.label(elim_c);
      doc["same_numbers"] = element_vector(e).numbers == monomial_vector(mono, elim_c).numbers;
      output.write(doc);
      return kOk;
    }

    if (witness->parsed()) {
      PontryaginFunctional f;
      if (!spec_path.empty()) {
        if (!named.empty()) throw Error(ErrorCode::Parse, "give either a spec file or --functional");
        f = parse_functional_spec(read_file(spec_path));
      } else if (!named.empty()) {
        if (named_m < 1) throw Error(ErrorCode::Parse, "--functional needs --m >= 1");
        if (named == "s") {
          f = functional_from_symmetric(SymmetricKind::S, named_m);
        } else if (named == "q") {
          if (named_m < 2) throw Error(ErrorCode::Precondition, "q needs m >= 2");
          f = functional_from_symmetric(SymmetricKind::Q, named_m);
        } else if (named == "L") {
          f = l_genus_functional(named_m);
        } else if (named == "Ahat") {
          f = a_hat_functional(named_m);
        } else {
          throw Error(ErrorCode::Parse, "unknown functional '" + named + "' (s, q, L, Ahat)");
        }
      } else {
        throw Error(ErrorCode::Parse, "witness needs a spec file or --functional");
      }
      const BasisSequence basis(parse_split(witness_split));
      if (samples.empty()) samples = default_samples(f.m, basis);
      output.write(to_json(find_witness(f, basis, samples)));
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "pnum: " << e.what() << "\n";
    Json doc{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    std::cout << doc.dump(2) << "\n";
    return is_usage_error(e.code()) ? kUsage : kFailure;
  }
  return kUsage;
}
