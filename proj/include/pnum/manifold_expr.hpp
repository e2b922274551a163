#pragma once

// Text forms used on the command line:
//   manifolds    K3 | HP2 | X(n,k;c) | X(n,k;<int>) | expr * expr
//   functionals  JSON {"m": 4, "entries": {"[4]": "1", "[3,1]": "-4/3"}}

#include "pnum/charclass.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pnum {

struct ExprFactor {
  enum class Kind { K3, HP2, X } kind = Kind::K3;
  long n = 0;
  long k = 0;
  std::optional<long> c;  // nullopt: symbolic c
};

struct ManifoldExpr {
  std::vector<ExprFactor> factors;

  bool is_symbolic() const;
  long weight() const;
};

/// Throws Error(Parse) naming the 0-based character offset of the problem.
ManifoldExpr parse_manifold_expr(std::string_view text);

/// Pontryagin numbers of the product. X factors accept any n, k >= 1 with
/// n + k even; flags follow spin_check and the curvature lemma.
PNumberVector evaluate(const ManifoldExpr& expr);

/// "[3,1]" or "3,1" -> Partition. Throws Error(Parse).
Partition parse_partition(std::string_view text);

/// Throws Error(Parse) for malformed JSON and Error(Validation) for entries
/// whose partition weight is not m.
PontryaginFunctional parse_functional_spec(std::string_view json_text);
std::string functional_spec_to_json(const PontryaginFunctional& f);

}  // namespace pnum
