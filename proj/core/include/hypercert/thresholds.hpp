#pragma once

// Minimal-onset search over shift indices, and reproduction of the reference
// onset tables for the partition function.
//
// For a predicate P on indices, the onset N is the least n such that P holds
// at every n' in [n, n_max]. Only the scanned window is certified.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hypercert/numeric.hpp"
#include "hypercert/parallel.hpp"
#include "hypercert/sequence.hpp"
#include "hypercert/turan.hpp"

namespace hypercert {

enum class Strictness { gt, ge };

std::string to_string(Strictness s);
Strictness parse_strictness(std::string_view text);

struct PredicateSpec {
  enum class Family { turan, laguerre_zero, jensen_hyperbolic };

  Family family = Family::turan;
  unsigned j = 1;       ///< operator order (turan, laguerre)
  unsigned k = 1;       ///< iteration count (turan)
  unsigned degree = 2;  ///< polynomial degree (jensen)
  Anchor anchor = Anchor::start;
  Strictness strict = Strictness::gt;

  /// T_j^(k)(n) > 0 by default; anchor defaults per order.
  static PredicateSpec turan(unsigned j, unsigned k, std::optional<Anchor> anchor = std::nullopt,
                             std::optional<Strictness> strict = std::nullopt);
  /// L_j(phi^(n))(0) >= 0 by default.
  static PredicateSpec laguerre_zero(unsigned j, std::optional<Strictness> strict = std::nullopt);
  /// J^{d,n} has only real roots.
  static PredicateSpec jensen_hyperbolic(unsigned d);

  std::string to_string() const;
};

/// Largest sequence index the predicate reads when evaluated up to n_max.
Index required_last_index(const PredicateSpec& pred, Index n_max);

/// Least index at which the predicate is defined for a sequence starting at `offset`.
Index predicate_domain_min(const PredicateSpec& pred, Index offset);

struct FailureWitness {
  Index index = 0;
  std::optional<Rational> value;  ///< operator value, when the predicate is a sign test
  std::string detail;
};

struct ThresholdReport {
  enum class Status { holds_from_start, verified_window, no_onset_found };

  PredicateSpec predicate;
  std::optional<Index> onset;
  Index n_max = 0;
  Index domain_min = 0;
  /// Failure at onset - 1 (or at n_max when no onset was found).
  std::optional<FailureWitness> failure_witness;
  Status status = Status::no_onset_found;
};

std::string to_string(ThresholdReport::Status s);

/// Evaluates the predicate at every n in [domain_min, n_max] on `pool` and
/// reduces by a backward scan. Throws RangeError carrying the required last
/// index when gamma is too short, ContractError when the domain is empty.
ThresholdReport threshold_search(const PredicateSpec& pred, const Sequence& gamma, Index n_max,
                                 const WorkerPool& pool = WorkerPool::serial());

/// Turan onsets for every iteration level 1..k_max of one (j, anchor) chain.
/// Equivalent to k_max calls of threshold_search but computes the chain once.
std::vector<ThresholdReport> turan_level_thresholds(const Sequence& gamma, unsigned j, unsigned k_max,
                                                    Anchor anchor, Strictness strict, Index n_max,
                                                    const WorkerPool& pool = WorkerPool::serial());

nlohmann::json to_json(const ThresholdReport& report);

/// Published onsets for the partition function, when the cell exists.
std::optional<Index> table1_reference(unsigned j, unsigned k);  // j, k <= 4
std::optional<Index> table2_reference(unsigned j);              // j <= 10

struct Table1Cell {
  unsigned j = 0;
  unsigned k = 0;
  ThresholdReport report;  ///< under the default anchor
  std::optional<Index> reference;
  /// Onset under each anchor tried; filled only for cells with j >= 3, k >= 2.
  std::map<Anchor, std::optional<Index>> anchor_onsets;
  std::vector<Anchor> matching_anchors;
  bool matched = false;  ///< false when there is no reference
};

struct Table1Report {
  unsigned j_max = 0;
  unsigned k_max = 0;
  Index n_max = 0;
  Strictness strict = Strictness::gt;
  std::vector<Table1Cell> cells;  ///< row-major by j, then k

  const Table1Cell& cell(unsigned j, unsigned k) const;
  bool all_matched() const;
};

/// Largest sequence index reproduce_table1 reads.
Index table1_required_last_index(unsigned j_max, unsigned k_max, Index n_max,
                                 std::optional<Anchor> row_anchor = std::nullopt);

/// Onset grid for T_j^(k) > 0 (or >= 0 under Strictness::ge) with default
/// anchors; cells with j >= 3 and k >= 2 are additionally scanned under all
/// three anchors and accepted if any anchor matches the reference.
/// A `row_anchor` replaces the scan: rows j >= 3 then use that anchor only.
Table1Report reproduce_table1(unsigned j_max, unsigned k_max, Index n_max, const Sequence& gamma,
                              const WorkerPool& pool = WorkerPool::serial(),
                              Strictness strict = Strictness::gt,
                              std::optional<Anchor> row_anchor = std::nullopt);

struct Table2Report {
  unsigned j_max = 0;
  Index n_max = 0;
  Strictness strict = Strictness::ge;
  std::vector<ThresholdReport> rows;  ///< j = 1..j_max
  std::vector<std::optional<Index>> references;

  bool all_matched() const;
};

Index table2_required_last_index(unsigned j_max, Index n_max);

Table2Report reproduce_table2(unsigned j_max, Index n_max, const Sequence& gamma,
                              const WorkerPool& pool = WorkerPool::serial(),
                              Strictness strict = Strictness::ge);

/// onset / ((6/pi^2) (jk)^2 (log jk)^2); nullopt for jk = 1 or a missing onset.
std::optional<double> asymptotic_ratio(unsigned j, unsigned k, Index onset);

std::string to_csv(const Table1Report& t);
std::string to_markdown(const Table1Report& t);
nlohmann::json to_json(const Table1Report& t);

std::string to_csv(const Table2Report& t);
std::string to_markdown(const Table2Report& t);
nlohmann::json to_json(const Table2Report& t);

/// Ratio grid as CSV; undefined cells are written as "undefined".
std::string ratio_csv(const Table1Report& t);

}  // namespace hypercert
