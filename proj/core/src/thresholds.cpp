#include "hypercert/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hypercert/error.hpp"
#include "hypercert/jensen.hpp"
#include "hypercert/laguerre.hpp"

namespace hypercert {

std::string to_string(Strictness s) { return s == Strictness::gt ? "gt" : "ge"; }

Strictness parse_strictness(std::string_view text) {
  if (text == "gt") return Strictness::gt;
  if (text == "ge") return Strictness::ge;
  throw ContractError("unknown strictness '" + std::string(text) + "' (gt|ge)");
}

PredicateSpec PredicateSpec::turan(unsigned j, unsigned k, std::optional<Anchor> anchor,
                                   std::optional<Strictness> strict) {
  if (j == 0 || k == 0) throw ContractError("turan predicate needs j >= 1 and k >= 1");
  PredicateSpec p;
  p.family = Family::turan;
  p.j = j;
  p.k = k;
  p.anchor = anchor.value_or(default_anchor(j));
  p.strict = strict.value_or(Strictness::gt);
  return p;
}

PredicateSpec PredicateSpec::laguerre_zero(unsigned j, std::optional<Strictness> strict) {
  if (j == 0) throw ContractError("laguerre predicate needs j >= 1");
  PredicateSpec p;
  p.family = Family::laguerre_zero;
  p.j = j;
  p.strict = strict.value_or(Strictness::ge);
  return p;
}

PredicateSpec PredicateSpec::jensen_hyperbolic(unsigned d) {
  if (d == 0) throw ContractError("jensen predicate needs degree d >= 1");
  PredicateSpec p;
  p.family = Family::jensen_hyperbolic;
  p.degree = d;
  return p;
}

std::string PredicateSpec::to_string() const {
  switch (family) {
    case Family::turan:
      return "turan(j=" + std::to_string(j) + ",k=" + std::to_string(k) +
             ",anchor=" + hypercert::to_string(anchor) + ",strict=" + hypercert::to_string(strict) + ")";
    case Family::laguerre_zero:
      return "laguerre_zero(j=" + std::to_string(j) + ",strict=" + hypercert::to_string(strict) + ")";
    case Family::jensen_hyperbolic:
      return "jensen_hyperbolic(d=" + std::to_string(degree) + ")";
  }
  return "?";
}

namespace {

Index turan_forward(unsigned j, Anchor anchor) {
  return static_cast<Index>(j) - anchor_reach_back(anchor, j);
}

bool passes(const Rational& v, Strictness s) {
  const int sg = sign(v);
  return s == Strictness::gt ? sg > 0 : sg >= 0;
}

void require_coverage(const PredicateSpec& pred, const Sequence& gamma, Index n_max) {
  const Index need = required_last_index(pred, n_max);
  if (gamma.last_index() < need) {
    throw RangeError(pred.to_string() + " up to n=" + std::to_string(n_max) + " needs " +
                         gamma.provenance() + " through index " + std::to_string(need) +
                         ", have " + std::to_string(gamma.last_index()),
                     need);
  }
  const Index lo = predicate_domain_min(pred, gamma.offset());
  if (n_max < lo) {
    throw ContractError(pred.to_string() + " is first defined at n=" + std::to_string(lo) +
                        ", above n_max=" + std::to_string(n_max));
  }
}

// Backward scan over pass flags for [lo, n_max].
ThresholdReport reduce(const PredicateSpec& pred, Index lo, Index n_max, const std::vector<char>& pass,
                       const std::function<FailureWitness(Index)>& witness) {
  ThresholdReport r;
  r.predicate = pred;
  r.n_max = n_max;
  r.domain_min = lo;
  Index n = n_max;
  while (n >= lo && pass[static_cast<std::size_t>(n - lo)]) --n;
  if (n < lo) {
    r.onset = lo;
    r.status = ThresholdReport::Status::holds_from_start;
  } else if (n == n_max) {
    r.status = ThresholdReport::Status::no_onset_found;
    r.failure_witness = witness(n);
  } else {
    r.onset = n + 1;
    r.status = ThresholdReport::Status::verified_window;
    r.failure_witness = witness(n);
  }
  return r;
}

ThresholdReport value_report(const PredicateSpec& pred, Index lo, Index n_max,
                             const std::function<const Rational&(Index)>& value) {
  std::vector<char> pass(static_cast<std::size_t>(n_max - lo + 1));
  for (Index n = lo; n <= n_max; ++n) pass[static_cast<std::size_t>(n - lo)] = passes(value(n), pred.strict);
  return reduce(pred, lo, n_max, pass, [&](Index n) {
    FailureWitness w;
    w.index = n;
    w.value = value(n);
    w.detail = "value " + to_string(value(n));
    return w;
  });
}

}  // namespace

Index required_last_index(const PredicateSpec& pred, Index n_max) {
  switch (pred.family) {
    case PredicateSpec::Family::turan:
      return n_max + static_cast<Index>(pred.k) * turan_forward(pred.j, pred.anchor);
    case PredicateSpec::Family::laguerre_zero:
      return n_max + 2 * static_cast<Index>(pred.j);
    case PredicateSpec::Family::jensen_hyperbolic:
      return n_max + static_cast<Index>(pred.degree);
  }
  return n_max;
}

Index predicate_domain_min(const PredicateSpec& pred, Index offset) {
  if (pred.family == PredicateSpec::Family::turan) {
    return offset + static_cast<Index>(pred.k) * anchor_reach_back(pred.anchor, pred.j);
  }
  return offset;
}

std::string to_string(ThresholdReport::Status s) {
  switch (s) {
    case ThresholdReport::Status::holds_from_start:
      return "holds_from_start";
    case ThresholdReport::Status::verified_window:
      return "verified_window";
    case ThresholdReport::Status::no_onset_found:
      return "no_onset_found";
  }
  return "?";
}

namespace {

// Level-1..k_max chains of T_j under `anchor`, each trimmed to what n_max needs.
std::vector<Sequence> turan_chain(const Sequence& gamma, unsigned j, unsigned k_max, Anchor anchor, Index n_max,
                                  const WorkerPool& pool) {
  const Index forward = turan_forward(j, anchor);
  std::vector<Sequence> chain;
  const Sequence* current = &gamma;
  for (unsigned level = 1; level <= k_max; ++level) {
    const Index limit = n_max + static_cast<Index>(k_max - level) * forward;
    chain.push_back(turan_apply(*current, j, anchor, pool, limit));
    current = &chain.back();
  }
  return chain;
}

// The level-k value under anchor a at index i is the start-anchor value at
// i - k * reach(a), so every anchor's chain is a reindexed start chain.
std::vector<ThresholdReport> chain_reports(const std::vector<Sequence>& start_chain, unsigned j, Anchor anchor,
                                           Strictness strict, Index n_max) {
  const Index reach = anchor_reach_back(anchor, j);
  std::vector<ThresholdReport> reports;
  for (std::size_t level = 1; level <= start_chain.size(); ++level) {
    const Sequence& seq = start_chain[level - 1];
    const Index shift = static_cast<Index>(level) * reach;
    const auto pred = PredicateSpec::turan(j, static_cast<unsigned>(level), anchor, strict);
    reports.push_back(value_report(pred, seq.offset() + shift, n_max,
                                   [&](Index n) -> const Rational& { return seq.at(n - shift); }));
  }
  return reports;
}

}  // namespace

std::vector<ThresholdReport> turan_level_thresholds(const Sequence& gamma, unsigned j, unsigned k_max,
                                                    Anchor anchor, Strictness strict, Index n_max,
                                                    const WorkerPool& pool) {
  require_coverage(PredicateSpec::turan(j, k_max, anchor, strict), gamma, n_max);
  const auto chain = turan_chain(gamma, j, k_max, anchor, n_max, pool);
  std::vector<ThresholdReport> reports;
  for (std::size_t level = 1; level <= chain.size(); ++level) {
    const Sequence& seq = chain[level - 1];
    const auto pred = PredicateSpec::turan(j, static_cast<unsigned>(level), anchor, strict);
    reports.push_back(value_report(pred, seq.offset(), n_max,
                                   [&](Index n) -> const Rational& { return seq.at(n); }));
  }
  return reports;
}

ThresholdReport threshold_search(const PredicateSpec& pred, const Sequence& gamma, Index n_max,
                                 const WorkerPool& pool) {
  require_coverage(pred, gamma, n_max);
  const Index lo = predicate_domain_min(pred, gamma.offset());

  switch (pred.family) {
    case PredicateSpec::Family::turan:
      return turan_level_thresholds(gamma, pred.j, pred.k, pred.anchor, pred.strict, n_max, pool).back();

    case PredicateSpec::Family::laguerre_zero: {
      std::vector<Rational> values(static_cast<std::size_t>(n_max - lo + 1));
      pool.parallel_for(values.size(), [&](std::size_t i) {
        values[i] = laguerre_at_zero(gamma, pred.j, lo + static_cast<Index>(i));
      });
      return value_report(pred, lo, n_max, [&](Index n) -> const Rational& {
        return values[static_cast<std::size_t>(n - lo)];
      });
    }

    case PredicateSpec::Family::jensen_hyperbolic: {
      const auto window = jensen_window_report(gamma, pred.degree, lo, n_max, pool);
      std::vector<char> pass(window.verdicts.size());
      for (std::size_t i = 0; i < pass.size(); ++i) pass[i] = window.verdicts[i].hyperbolic;
      return reduce(pred, lo, n_max, pass, [&](Index n) {
        FailureWitness w;
        w.index = n;
        w.detail = "J^{" + std::to_string(pred.degree) + "," + std::to_string(n) + "} is not real-rooted";
        return w;
      });
    }
  }
  throw ContractError("unknown predicate family");
}

nlohmann::json to_json(const ThresholdReport& report) {
  nlohmann::json j;
  j["predicate"] = report.predicate.to_string();
  j["onset"] = report.onset ? nlohmann::json(*report.onset) : nlohmann::json(nullptr);
  j["n_max"] = report.n_max;
  j["domain_min"] = report.domain_min;
  j["status"] = to_string(report.status);
  if (report.failure_witness) {
    const auto& w = *report.failure_witness;
    nlohmann::json jw{{"index", w.index}, {"detail", w.detail}};
    if (w.value) jw["value"] = to_string(*w.value);
    j["failure_witness"] = std::move(jw);
  } else {
    j["failure_witness"] = nullptr;
  }
  return j;
}

std::optional<Index> table1_reference(unsigned j, unsigned k) {
  static constexpr std::array<std::array<Index, 4>, 4> table{{
      {2, 8, 26, 68},
      {26, 222, 640, 1292},
      {94, 522, 1232, 2094},
      {206, 991, 2040, 3005},
  }};
  if (j < 1 || j > 4 || k < 1 || k > 4) return std::nullopt;
  return table[j - 1][k - 1];
}

std::optional<Index> table2_reference(unsigned j) {
  static constexpr std::array<Index, 10> table{25, 184, 531, 1102, 1923, 3014, 4391, 6070, 8063, 10382};
  if (j < 1 || j > 10) return std::nullopt;
  return table[j - 1];
}

namespace {

constexpr std::array<Anchor, 3> kAllAnchors{Anchor::backward, Anchor::centered, Anchor::start};

bool scanned_cell(unsigned j, unsigned k) { return j >= 3 && k >= 2; }

std::vector<Anchor> anchors_for_row(unsigned j, unsigned k_max, std::optional<Anchor> row_anchor) {
  if (j < 3) return {default_anchor(j)};
  if (row_anchor) return {*row_anchor};
  if (k_max >= 2) return {kAllAnchors.begin(), kAllAnchors.end()};
  return {default_anchor(j)};
}

std::string onset_text(const std::optional<Index>& onset) {
  return onset ? std::to_string(*onset) : "none";
}

// Renders rows with every column padded to its widest entry.
std::string aligned_markdown(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    out << '|';
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string cell = c < row.size() ? row[c] : "";
      out << ' ' << cell << std::string(width[c] - cell.size(), ' ') << " |";
    }
    out << '\n';
  };
  for (std::size_t r = 0; r < rows.size(); ++r) {
    emit(rows[r]);
    if (r == 0) {
      out << '|';
      for (auto w : width) out << std::string(w + 2, '-') << '|';
      out << '\n';
    }
  }
  return out.str();
}

std::string join_csv(const std::vector<std::string>& row) {
  std::string line;
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (c) line += ',';
    line += row[c];
  }
  return line + '\n';
}

std::vector<std::vector<std::string>> table1_grid(const Table1Report& t) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"j", "anchor", "strict"};
  for (unsigned k = 1; k <= t.k_max; ++k) header.push_back("k=" + std::to_string(k));
  rows.push_back(header);
  for (unsigned j = 1; j <= t.j_max; ++j) {
    std::vector<std::string> row{std::to_string(j), to_string(t.cell(j, 1).report.predicate.anchor),
                                 to_string(t.strict)};
    for (unsigned k = 1; k <= t.k_max; ++k) row.push_back(onset_text(t.cell(j, k).report.onset));
    rows.push_back(row);
  }
  return rows;
}

std::string matched_by(const Table1Cell& c) {
  if (!c.reference) return "no_reference";
  if (c.matching_anchors.empty()) return "none";
  std::string s;
  for (auto a : c.matching_anchors) {
    if (!s.empty()) s += '+';
    s += to_string(a);
  }
  return s;
}

std::vector<std::vector<std::string>> table1_anchor_map(const Table1Report& t) {
  std::vector<std::vector<std::string>> rows{
      {"j", "k", "reference", "backward", "centered", "start", "matched_by"}};
  for (const auto& c : t.cells) {
    if (!scanned_cell(c.j, c.k)) continue;
    std::vector<std::string> row{std::to_string(c.j), std::to_string(c.k),
                                 c.reference ? std::to_string(*c.reference) : "-"};
    for (auto a : kAllAnchors) {
      const auto it = c.anchor_onsets.find(a);
      row.push_back(it == c.anchor_onsets.end() ? "-" : onset_text(it->second));
    }
    row.push_back(matched_by(c));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

const Table1Cell& Table1Report::cell(unsigned j, unsigned k) const {
  if (j < 1 || j > j_max || k < 1 || k > k_max) throw ContractError("table cell out of range");
  return cells[(j - 1) * k_max + (k - 1)];
}

bool Table1Report::all_matched() const {
  return std::all_of(cells.begin(), cells.end(), [](const Table1Cell& c) { return c.matched; });
}

Index table1_required_last_index(unsigned j_max, unsigned k_max, Index n_max, std::optional<Anchor> row_anchor) {
  Index need = n_max;
  for (unsigned j = 1; j <= j_max; ++j) {
    for (auto a : anchors_for_row(j, k_max, row_anchor)) {
      need = std::max(need, n_max + static_cast<Index>(k_max) * turan_forward(j, a));
    }
  }
  return need;
}

Table1Report reproduce_table1(unsigned j_max, unsigned k_max, Index n_max, const Sequence& gamma,
                              const WorkerPool& pool, Strictness strict, std::optional<Anchor> row_anchor) {
  if (j_max == 0 || k_max == 0) throw ContractError("table1 needs j_max >= 1 and k_max >= 1");
  const Index need = table1_required_last_index(j_max, k_max, n_max, row_anchor);
  if (gamma.last_index() < need) {
    throw RangeError("table1 up to n=" + std::to_string(n_max) + " needs " + gamma.provenance() +
                         " through index " + std::to_string(need),
                     need);
  }

  Table1Report t;
  t.j_max = j_max;
  t.k_max = k_max;
  t.n_max = n_max;
  t.strict = strict;

  for (unsigned j = 1; j <= j_max; ++j) {
    std::map<Anchor, std::vector<ThresholdReport>> levels;
    const auto anchors = anchors_for_row(j, k_max, row_anchor);
    if (anchors.size() == 1) {
      levels[anchors.front()] = turan_level_thresholds(gamma, j, k_max, anchors.front(), strict, n_max, pool);
    } else {
      // Only the start chain is computed; the other anchors reindex it.
      const auto chain = turan_chain(gamma, j, k_max, Anchor::start, n_max, pool);
      for (auto a : anchors) levels[a] = chain_reports(chain, j, a, strict, n_max);
    }
    const Anchor def = anchors.size() == 1 ? anchors.front() : default_anchor(j);
    for (unsigned k = 1; k <= k_max; ++k) {
      Table1Cell c;
      c.j = j;
      c.k = k;
      c.report = levels.at(def)[k - 1];
      c.reference = table1_reference(j, k);
      if (scanned_cell(j, k)) {
        for (auto a : anchors) {
          c.anchor_onsets[a] = levels.at(a)[k - 1].onset;
          if (c.reference && c.anchor_onsets[a] == c.reference) c.matching_anchors.push_back(a);
        }
      } else if (c.reference && c.report.onset == c.reference) {
        c.matching_anchors.push_back(def);
      }
      c.matched = !c.matching_anchors.empty();
      t.cells.push_back(std::move(c));
    }
  }
  return t;
}

bool Table2Report::all_matched() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!references[i] || rows[i].onset != references[i]) return false;
  }
  return true;
}

Index table2_required_last_index(unsigned j_max, Index n_max) { return n_max + 2 * static_cast<Index>(j_max); }

Table2Report reproduce_table2(unsigned j_max, Index n_max, const Sequence& gamma, const WorkerPool& pool,
                              Strictness strict) {
  if (j_max == 0) throw ContractError("table2 needs j_max >= 1");
  Table2Report t;
  t.j_max = j_max;
  t.n_max = n_max;
  t.strict = strict;
  for (unsigned j = 1; j <= j_max; ++j) {
    t.rows.push_back(threshold_search(PredicateSpec::laguerre_zero(j, strict), gamma, n_max, pool));
    t.references.push_back(table2_reference(j));
  }
  return t;
}

std::optional<double> asymptotic_ratio(unsigned j, unsigned k, Index onset) {
  const double x = static_cast<double>(j) * static_cast<double>(k);
  if (x <= 1.0) return std::nullopt;
  const double lg = std::log(x);
  const double scale = 6.0 / (std::numbers::pi * std::numbers::pi) * x * x * lg * lg;
  return static_cast<double>(onset) / scale;
}

std::string to_csv(const Table1Report& t) {
  std::string out;
  for (const auto& row : table1_grid(t)) out += join_csv(row);
  const auto map = table1_anchor_map(t);
  if (map.size() > 1) {
    out += '\n';
    for (const auto& row : map) out += join_csv(row);
  }
  return out;
}

std::string to_markdown(const Table1Report& t) {
  std::string out = aligned_markdown(table1_grid(t));
  const auto map = table1_anchor_map(t);
  if (map.size() > 1) out += '\n' + aligned_markdown(map);
  return out;
}

nlohmann::json to_json(const Table1Report& t) {
  nlohmann::json j;
  j["j_max"] = t.j_max;
  j["k_max"] = t.k_max;
  j["n_max"] = t.n_max;
  j["strict"] = to_string(t.strict);
  j["all_matched"] = t.all_matched();
  auto cells = nlohmann::json::array();
  for (const auto& c : t.cells) {
    nlohmann::json jc{{"j", c.j},
                      {"k", c.k},
                      {"anchor", to_string(c.report.predicate.anchor)},
                      {"report", to_json(c.report)},
                      {"reference", c.reference ? nlohmann::json(*c.reference) : nlohmann::json(nullptr)},
                      {"matched", c.matched},
                      {"matched_by", matched_by(c)}};
    if (!c.anchor_onsets.empty()) {
      nlohmann::json map;
      for (const auto& [a, onset] : c.anchor_onsets) {
        map[to_string(a)] = onset ? nlohmann::json(*onset) : nlohmann::json(nullptr);
      }
      jc["anchor_onsets"] = std::move(map);
    }
    cells.push_back(std::move(jc));
  }
  j["cells"] = std::move(cells);
  return j;
}

namespace {

std::vector<std::vector<std::string>> table2_rows(const Table2Report& t) {
  std::vector<std::vector<std::string>> rows{
      {"j", "strict", "onset", "reference", "match", "status", "witness_index", "witness_value"}};
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    const auto& ref = t.references[i];
    const auto& w = r.failure_witness;
    rows.push_back({std::to_string(i + 1), to_string(t.strict), onset_text(r.onset),
                    ref ? std::to_string(*ref) : "-", ref && r.onset == ref ? "yes" : "no",
                    to_string(r.status), w ? std::to_string(w->index) : "-",
                    w && w->value ? to_string(*w->value) : "-"});
  }
  return rows;
}

}  // namespace

std::string to_csv(const Table2Report& t) {
  std::string out;
  for (const auto& row : table2_rows(t)) out += join_csv(row);
  return out;
}

std::string to_markdown(const Table2Report& t) { return aligned_markdown(table2_rows(t)); }

nlohmann::json to_json(const Table2Report& t) {
  nlohmann::json j;
  j["j_max"] = t.j_max;
  j["n_max"] = t.n_max;
  j["strict"] = to_string(t.strict);
  j["all_matched"] = t.all_matched();
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    rows.push_back({{"j", i + 1},
                    {"report", to_json(t.rows[i])},
                    {"reference", t.references[i] ? nlohmann::json(*t.references[i]) : nlohmann::json(nullptr)}});
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string ratio_csv(const Table1Report& t) {
  std::string out = "j";
  for (unsigned k = 1; k <= t.k_max; ++k) out += ",k=" + std::to_string(k);
  out += '\n';
  for (unsigned j = 1; j <= t.j_max; ++j) {
    out += std::to_string(j);
    for (unsigned k = 1; k <= t.k_max; ++k) {
      const auto& onset = t.cell(j, k).report.onset;
      const auto r = onset ? asymptotic_ratio(j, k, *onset) : std::nullopt;
      if (r) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", *r);
        out += ',' + std::string(buf);
      } else {
        out += ",undefined";
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace hypercert
