// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any
// criterion fails. Every tolerance and time budget is fixed below.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypercert/checks/oracles.hpp"
#include "hypercert/checks/suites.hpp"
#include "hypercert/cli/cli.hpp"
#include "hypercert/laguerre.hpp"
#include "hypercert/thresholds.hpp"

using namespace hypercert;

namespace {

// Onsets are integers; every comparison is exact.
constexpr double kTable1BudgetSeconds = 300.0;
constexpr double kTable2BudgetSeconds = 600.0;
constexpr double kJensenBudgetSeconds = 60.0;
constexpr Index kJensenScanCeiling = 600;
constexpr std::size_t kOracleAgreementCases = 1000;
constexpr std::size_t kExpansionCases = 200 * 3;
constexpr std::size_t kClosedFormSequences = 100;
constexpr double kExtendedWindowFactor = 1.5;

const std::vector<std::vector<Index>> kTable1{
    {2, 8, 26, 68}, {26, 222, 640, 1292}, {94, 522, 1232, 2094}, {206, 991, 2040, 3005}};
const std::vector<Index> kTable2{25, 184, 531, 1102, 1923, 3014, 4391, 6070, 8063, 10382};
const std::vector<Index> kJensen{25, 94, 206, 381};  // d = 2..5

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Timed {
  Verdict verdict;
  double seconds = 0;
};

Timed timed(const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v = body();
  return {std::move(v), std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
}

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string onset_text(const nlohmann::json& v) { return v.is_null() ? "none" : std::to_string(v.get<Index>()); }

nlohmann::json table1_doc;  // shared with criterion 9

Verdict criterion_table1() {
  const auto r = cli({"--format", "json", "table1", "--jmax", "4", "--kmax", "4", "--nmax", "3300"});
  if (r.code != 0) return {false, "exit " + std::to_string(r.code) + ": " + r.err};
  table1_doc = nlohmann::json::parse(r.out);
  std::string misses;
  for (const auto& c : table1_doc["cells"]) {
    const auto j = c["j"].get<unsigned>(), k = c["k"].get<unsigned>();
    const Index want = kTable1[j - 1][k - 1];
    bool ok = false;
    if (j <= 2 || k == 1) {
      ok = c["report"]["onset"] == want;
    } else {
      for (const auto& [anchor, onset] : c["anchor_onsets"].items()) ok = ok || onset == want;
    }
    if (!ok) misses += " (" + std::to_string(j) + "," + std::to_string(k) + ")";
  }
  if (!misses.empty()) return {false, "mismatched cells" + misses};
  return {true, "16/16 cells exact"};
}

Verdict criterion_table2() {
  const auto r = cli({"--format", "json", "table2", "--jmax", "10", "--nmax", "10600"});
  if (r.code != 0) return {false, "exit " + std::to_string(r.code) + ": " + r.err};
  const auto doc = nlohmann::json::parse(r.out);
  std::string got;
  bool ok = doc["rows"].size() == kTable2.size();
  for (std::size_t i = 0; ok && i < kTable2.size(); ++i) {
    const auto& onset = doc["rows"][i]["report"]["onset"];
    got += (i ? "," : "") + onset_text(onset);
    ok = onset == kTable2[i];
  }
  return {ok, "onsets (" + got + ")"};
}

Verdict criterion_jensen() {
  const Sequence p = partition_sequence(kJensenScanCeiling + 5);
  const WorkerPool pool(0);
  std::string got;
  bool ok = true;
  for (unsigned d = 2; d <= 5; ++d) {
    const auto r = threshold_search(PredicateSpec::jensen_hyperbolic(d), p, kJensenScanCeiling, pool);
    got += (d > 2 ? "," : "") + (r.onset ? std::to_string(*r.onset) : std::string("none"));
    ok = ok && r.onset == kJensen[d - 2];
  }
  return {ok, "onsets d=2..5 (" + got + ") on [0," + std::to_string(kJensenScanCeiling) + "]"};
}

Verdict suites_verdict(const std::vector<std::string>& names, std::size_t min_cases = 1) {
  const WorkerPool pool(0);
  checks::SuiteContext ctx;
  ctx.pool = &pool;
  Verdict v{true, ""};
  for (const auto& name : names) {
    const auto r = checks::run_suite(name, ctx);
    const bool ok = r.passed() && r.cases >= min_cases;
    v.pass = v.pass && ok;
    v.detail += (v.detail.empty() ? "" : "; ") + name + " " + std::to_string(r.cases) + " cases, " +
                std::to_string(r.violations) + " violations";
    if (!ok && !r.first_violation.empty()) v.detail += " [" + r.first_violation + "]";
  }
  return v;
}

Verdict criterion_closed_form() {
  auto v = suites_verdict({"iterated_laguerre_closed_form"}, kClosedFormSequences);
  const Sequence p = partition_sequence(10);
  const Rational at0 = laguerre_iterate_at_zero(p, 1, 2, 0);
  const bool zero = at0 == 0 && checks::iterated_laguerre_closed_form(p.window(0, 4)) == 0;
  v.pass = v.pass && zero;
  v.detail += "; p-sequence value at n=0 is " + to_string(at0);
  return v;
}

Verdict criterion_oracles() {
  auto v = suites_verdict({"partition_oracle", "plane_partition_oracle"});
  const Sequence p = partition_sequence(20);
  const Sequence pp = plane_partition_sequence(6);
  bool ok = true;
  for (unsigned n = 0; n <= 20; ++n) ok = ok && p.at(n) == Rational(checks::count_partitions_enumerated(n));
  for (unsigned n = 0; n <= 6; ++n) ok = ok && pp.at(n) == Rational(checks::count_plane_partitions_enumerated(n));
  v.pass = v.pass && ok;
  v.detail += ok ? "; p(0..20), pp(0..6) equal enumeration" : "; direct enumeration mismatch";
  return v;
}

// The open conjectures cannot be settled by computation. What is checked
// instead: every order >= 3 cell carries an anchor map with a matching
// anchor, the full invariant registry passes, and the table onsets do not
// move when the scan window is widened.
Verdict criterion_substitute() {
  std::string detail;
  bool ok = !table1_doc.is_null();
  std::size_t mapped = 0;
  if (ok) {
    for (const auto& c : table1_doc["cells"]) {
      if (c["j"].get<unsigned>() < 3 || c["k"].get<unsigned>() < 2) continue;
      ok = ok && c.contains("anchor_onsets") && c["anchor_onsets"].size() == 3 && !c["matched_by"].empty();
      ++mapped;
    }
  }
  ok = ok && mapped == 6;
  detail += "anchor map " + std::to_string(mapped) + "/6 cells";

  const WorkerPool pool(0);
  checks::SuiteContext ctx;
  ctx.pool = &pool;
  std::size_t failed = 0;
  const auto all = checks::run_suites({}, ctx);
  for (const auto& r : all) failed += r.passed() ? 0 : 1;
  ok = ok && failed == 0;
  detail += "; " + std::to_string(all.size() - failed) + "/" + std::to_string(all.size()) + " suites";

  // Widened windows for the cheaper rows of both tables.
  const auto widen = [](Index ref) { return static_cast<Index>(static_cast<double>(ref) * kExtendedWindowFactor); };
  const Index t1_top = widen(kTable1[1][3]);
  const Sequence g1 = partition_sequence(table1_required_last_index(2, 4, t1_top));
  const auto t1 = reproduce_table1(2, 4, t1_top, g1, pool);
  const Index t2_top = widen(kTable2[4]);
  const Sequence g2 = partition_sequence(table2_required_last_index(5, t2_top));
  const auto t2 = reproduce_table2(5, t2_top, g2, pool);
  const bool stable = t1.all_matched() && t2.all_matched();
  ok = ok && stable;
  detail += std::string("; onsets ") + (stable ? "unchanged" : "CHANGED") + " on widened windows (table1 rows 1-2 to " +
            std::to_string(t1_top) + ", table2 rows 1-5 to " + std::to_string(t2_top) + ")";
  detail += "; open conjectures themselves are not decidable here";
  return {ok, detail};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Verdict()> run;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria{
      {1, "table1 reproduction", criterion_table1, kTable1BudgetSeconds},
      {2, "table2 reproduction", criterion_table2, kTable2BudgetSeconds},
      {3, "jensen onsets", criterion_jensen, kJensenBudgetSeconds},
      {4, "sturm/hankel agreement", [] { return suites_verdict({"sturm_hankel_agreement"}, kOracleAgreementCases); }, 0},
      {5, "laguerre expansion identity", [] { return suites_verdict({"laguerre_expansion"}, kExpansionCases); }, 0},
      {6, "iterated laguerre closed form", criterion_closed_form, 0},
      {7, "brute-force sequence oracles", criterion_oracles, 0},
      {8, "identity suites",
       [] { return suites_verdict({"jensen_derivative", "appell_derivative", "degree_reduction", "schur_szego_closure"}); },
       0},
      {9, "substitute evidence for open conjectures", criterion_substitute, 0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto [v, seconds] = timed(c.run);
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      v.pass = false;
      v.detail += "; over the " + std::to_string(static_cast<int>(c.budget_seconds)) + "s budget";
    }
    failures += v.pass ? 0 : 1;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << (v.pass ? "PASS" : "FAIL") << ' ' << c.id << ' ' << c.name << ": " << v.detail << " (" << seconds << "s)";
    std::cout << line.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
