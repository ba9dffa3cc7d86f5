#pragma once

// Coefficient-wise multiplier operators and finite evidence for order-d
// multiplier sequences.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hypercert/parallel.hpp"
#include "hypercert/polynomial.hpp"
#include "hypercert/rootcert.hpp"
#include "hypercert/sequence.hpp"

namespace hypercert {

/// Gamma_{gamma shifted by n}: coefficient k of f is multiplied by gamma_{n+k}.
Polynomial gamma_apply(const Sequence& gamma, Index n, const Polynomial& f);

/// For f1 = sum C(d,k) a_k x^k and f2 = sum C(d,k) b_k x^k of equal degree d,
/// returns sum C(d,k) a_k b_k x^k. Real-rooted when both inputs are and the
/// roots of f2 share one sign.
Polynomial schur_szego(const Polynomial& f1, const Polynomial& f2);

/// Termwise product on the overlap of the index ranges.
Sequence hadamard_product(const Sequence& gamma, const Sequence& lambda);

/// Which real-rooted inputs an order-d multiplier must preserve.
enum class MultiplierType {
  type_one,  ///< every real-rooted input of degree <= d
  type_two,  ///< real-rooted inputs whose roots share one sign
};

std::string to_string(MultiplierType t);
MultiplierType parse_multiplier_type(std::string_view text);

struct WitnessFailure {
  std::size_t trial = 0;
  Polynomial input;
  Polynomial output;
  RootCertificate certificate;
};

struct WitnessReport {
  enum class Verdict { no_counterexample, counterexample_found };

  unsigned degree = 0;
  Index shift = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  MultiplierType type = MultiplierType::type_one;
  std::vector<WitnessFailure> failures;  ///< ordered by trial
  Verdict verdict = Verdict::no_counterexample;
};

/// Trial inputs for order_d_witness_test: trial 0 is (1+x)^d, the rest are
/// products of random linear factors with roots on a bounded rational grid.
std::vector<Polynomial> witness_inputs(unsigned d, std::size_t trials, std::uint64_t seed,
                                       MultiplierType type);

/// Applies gamma_apply(gamma, n, .) to every witness input and certifies the
/// output with Sturm chains. Finite refutation only: no_counterexample is
/// evidence, not proof.
WitnessReport order_d_witness_test(const Sequence& gamma, unsigned d, Index n, std::size_t trials,
                                   std::uint64_t seed,
                                   MultiplierType type = MultiplierType::type_one,
                                   const WorkerPool& pool = WorkerPool::serial());

nlohmann::json to_json(const WitnessReport& report);

enum class WindowPattern { constant_sign, alternating_sign, mixed, all_zero };

std::string to_string(WindowPattern p);

struct StructureReport {
  Index n_lo = 0;
  Index n_hi = 0;
  WindowPattern pattern = WindowPattern::all_zero;
  /// Zero terms with nonzero terms on both sides.
  std::vector<Index> interior_zeros;
  /// For a mixed window, the first nonzero term that breaks both the
  /// constant-sign and alternating-sign patterns.
  std::vector<Index> sign_breaks;

  bool clean() const { return interior_zeros.empty() && sign_breaks.empty(); }
};

/// Zeros may only form a leading or trailing run; nonzero terms must share a
/// sign or alternate.
StructureReport window_structure_check(const Sequence& gamma, Index n_lo, Index n_hi);

nlohmann::json to_json(const StructureReport& report);

}  // namespace hypercert
