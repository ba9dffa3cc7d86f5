#pragma once

// Named invariant suites. Each suite runs a batch of exact checks and reports
// how many cases it tried and how many failed.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hypercert/parallel.hpp"

namespace hypercert::checks {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::string first_violation;

  bool passed() const { return violations == 0 && cases > 0; }
};

struct SuiteContext {
  std::uint64_t seed = 20240917;
  const WorkerPool* pool = &WorkerPool::serial();
};

struct SuiteInfo {
  std::string name;
  std::string module;
  std::function<SuiteResult(const SuiteContext&)> run;
};

/// Every suite, grouped by module in dependency order.
const std::vector<SuiteInfo>& suite_registry();

/// Runs the suites whose name or module is in `filter` (all when empty).
std::vector<SuiteResult> run_suites(const std::vector<std::string>& filter, const SuiteContext& ctx);

SuiteResult run_suite(const std::string& name, const SuiteContext& ctx);

/// Accumulates one suite's cases.
class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (ok) return;
    if (result_.violations++ == 0) result_.first_violation = describe();
  }

  SuiteResult result() const { return result_; }

 private:
  SuiteResult result_;
};

// seqcore
SuiteResult suite_partition_oracle(const SuiteContext& ctx);
SuiteResult suite_plane_partition_oracle(const SuiteContext& ctx);
SuiteResult suite_sequence_roundtrip(const SuiteContext& ctx);
SuiteResult suite_generator_determinism(const SuiteContext& ctx);

// polyexact
SuiteResult suite_product_rules(const SuiteContext& ctx);
SuiteResult suite_squarefree_part(const SuiteContext& ctx);
SuiteResult suite_taylor_window(const SuiteContext& ctx);

// rootcert
SuiteResult suite_sturm_hankel_agreement(const SuiteContext& ctx);
SuiteResult suite_hankel_minors_from_roots(const SuiteContext& ctx);
SuiteResult suite_hankel_scaling(const SuiteContext& ctx);
SuiteResult suite_d2_coefficient_form(const SuiteContext& ctx);

// jensen
SuiteResult suite_jensen_derivative(const SuiteContext& ctx);
SuiteResult suite_appell_derivative(const SuiteContext& ctx);
SuiteResult suite_degree_reduction(const SuiteContext& ctx);
SuiteResult suite_jensen_convergence(const SuiteContext& ctx);

// turan
SuiteResult suite_turan1_closed_form(const SuiteContext& ctx);
SuiteResult suite_turan_scaling_sign(const SuiteContext& ctx);
SuiteResult suite_turan2_vs_jensen(const SuiteContext& ctx);
SuiteResult suite_turan_route_agreement(const SuiteContext& ctx);
SuiteResult suite_anchor_reindexing(const SuiteContext& ctx);

// laguerre
SuiteResult suite_laguerre_sequence_series(const SuiteContext& ctx);
SuiteResult suite_laguerre_expansion(const SuiteContext& ctx);
SuiteResult suite_laguerre_positivity(const SuiteContext& ctx);
SuiteResult suite_iterated_laguerre_derivative(const SuiteContext& ctx);
SuiteResult suite_iterated_laguerre_closed_form(const SuiteContext& ctx);

// multseq
SuiteResult suite_schur_szego_closure(const SuiteContext& ctx);
SuiteResult suite_witness_jensen_equivalence(const SuiteContext& ctx);
SuiteResult suite_hadamard_monoid(const SuiteContext& ctx);
SuiteResult suite_limit_stability(const SuiteContext& ctx);

// thresholds
SuiteResult suite_threshold_determinism(const SuiteContext& ctx);
SuiteResult suite_threshold_monotone(const SuiteContext& ctx);
SuiteResult suite_cross_family(const SuiteContext& ctx);

}  // namespace hypercert::checks
