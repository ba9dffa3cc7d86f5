#include <algorithm>

#include "hypercert/checks/suites.hpp"
#include "hypercert/error.hpp"

namespace hypercert::checks {

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> registry{
      {"partition_oracle", "seqcore", suite_partition_oracle},
      {"plane_partition_oracle", "seqcore", suite_plane_partition_oracle},
      {"sequence_roundtrip", "seqcore", suite_sequence_roundtrip},
      {"generator_determinism", "seqcore", suite_generator_determinism},
      {"product_rules", "polyexact", suite_product_rules},
      {"squarefree_part", "polyexact", suite_squarefree_part},
      {"taylor_window", "polyexact", suite_taylor_window},
      {"sturm_hankel_agreement", "rootcert", suite_sturm_hankel_agreement},
      {"hankel_minors_from_roots", "rootcert", suite_hankel_minors_from_roots},
      {"hankel_scaling", "rootcert", suite_hankel_scaling},
      {"d2_coefficient_form", "rootcert", suite_d2_coefficient_form},
      {"jensen_derivative", "jensen", suite_jensen_derivative},
      {"appell_derivative", "jensen", suite_appell_derivative},
      {"degree_reduction", "jensen", suite_degree_reduction},
      {"jensen_convergence", "jensen", suite_jensen_convergence},
      {"turan1_closed_form", "turan", suite_turan1_closed_form},
      {"turan_scaling_sign", "turan", suite_turan_scaling_sign},
      {"turan2_vs_jensen", "turan", suite_turan2_vs_jensen},
      {"turan_route_agreement", "turan", suite_turan_route_agreement},
      {"anchor_reindexing", "turan", suite_anchor_reindexing},
      {"laguerre_sequence_series", "laguerre", suite_laguerre_sequence_series},
      {"laguerre_expansion", "laguerre", suite_laguerre_expansion},
      {"laguerre_positivity", "laguerre", suite_laguerre_positivity},
      {"iterated_laguerre_derivative", "laguerre", suite_iterated_laguerre_derivative},
      {"iterated_laguerre_closed_form", "laguerre", suite_iterated_laguerre_closed_form},
      {"schur_szego_closure", "multseq", suite_schur_szego_closure},
      {"witness_jensen_equivalence", "multseq", suite_witness_jensen_equivalence},
      {"hadamard_monoid", "multseq", suite_hadamard_monoid},
      {"limit_stability", "multseq", suite_limit_stability},
      {"threshold_determinism", "thresholds", suite_threshold_determinism},
      {"threshold_monotone", "thresholds", suite_threshold_monotone},
      {"cross_family", "thresholds", suite_cross_family},
  };
  return registry;
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& filter, const SuiteContext& ctx) {
  const auto& registry = suite_registry();
  for (const auto& f : filter) {
    const bool known = std::any_of(registry.begin(), registry.end(),
                                   [&](const SuiteInfo& s) { return s.name == f || s.module == f; });
    if (!known) throw ContractError("unknown suite or module '" + f + "'");
  }
  std::vector<SuiteResult> results;
  for (const auto& s : registry) {
    const bool selected = filter.empty() || std::find(filter.begin(), filter.end(), s.name) != filter.end() ||
                          std::find(filter.begin(), filter.end(), s.module) != filter.end();
    if (selected) results.push_back(s.run(ctx));
  }
  return results;
}

SuiteResult run_suite(const std::string& name, const SuiteContext& ctx) {
  for (const auto& s : suite_registry()) {
    if (s.name == name) return s.run(ctx);
  }
  throw ContractError("unknown suite '" + name + "'");
}

}  // namespace hypercert::checks
