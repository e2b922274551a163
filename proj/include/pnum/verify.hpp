#pragma once

// Verification suites over parameter grids. Each check yields one
// CheckResult; failures carry a JSON counterexample.

#include "pnum/bordism.hpp"
#include "pnum/report.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pnum {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  Json counterexample;  // null on success
};

struct VerifyOptions {
  /// Grid: odd n, k >= 3 with n + k <= max_dim.
  long max_dim = 24;
  std::vector<long> c_values{2};
  long m_low = 3;
  long m_high = 5;
  /// Thom matrices are checked for 1 <= m <= thom_max_m.
  long thom_max_m = 6;
  SplitPolicy policy = SplitPolicy::MinN;
  /// Replaces the HP2 numbers (p_{1,1}, p_2) in the normalization checks.
  std::optional<std::pair<Rat, Rat>> hp2_override;
};

enum class Suite { Formulas, GenusKernel, NoK3, Thom, Witness, All };

/// "formulas", "genus-kernel", "nok3", "thom", "witness", "all".
std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

std::vector<CheckResult> verify_formulas(const VerifyOptions& options);
std::vector<CheckResult> verify_genus_kernel(const VerifyOptions& options);
std::vector<CheckResult> verify_nok3(const VerifyOptions& options);
std::vector<CheckResult> verify_thom(const VerifyOptions& options);
std::vector<CheckResult> verify_witness(const VerifyOptions& options);
std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& options);

/// Odd (n, k), both >= 3, n + k <= max_dim, ordered by n + k then n.
std::vector<RingParams> odd_grid(long max_dim);

Json to_json(const CheckResult& r);

}  // namespace pnum
