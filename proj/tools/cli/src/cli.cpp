#include "hypercert/cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hypercert/checks/suites.hpp"
#include "hypercert/error.hpp"
#include "hypercert/jensen.hpp"
#include "hypercert/laguerre.hpp"
#include "hypercert/multseq.hpp"
#include "hypercert/rootcert.hpp"
#include "hypercert/sequence.hpp"
#include "hypercert/thresholds.hpp"
#include "hypercert/turan.hpp"

namespace hypercert::cli {

namespace {

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::markdown:
      return "markdown";
    case OutputFormat::json:
      return "json";
  }
  return "?";
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "markdown") return OutputFormat::markdown;
  if (s == "json") return OutputFormat::json;
  throw ContractError("unknown format '" + s + "' (csv|markdown|json)");
}

// Table text with columns padded to their widest cell.
std::string csv_to_markdown(const std::string& csv) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(csv);
  std::string line;
  std::vector<std::string> blocks;
  auto flush = [&] {
    if (rows.empty()) return;
    std::vector<std::size_t> width;
    for (const auto& r : rows) {
      width.resize(std::max(width.size(), r.size()));
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out << '|';
      for (std::size_t c = 0; c < width.size(); ++c) {
        const std::string cell = c < rows[i].size() ? rows[i][c] : "";
        out << ' ' << cell << std::string(width[c] - cell.size(), ' ') << " |";
      }
      out << '\n';
      if (i == 0) {
        out << '|';
        for (auto w : width) out << std::string(w + 2, '-') << '|';
        out << '\n';
      }
    }
    blocks.push_back(out.str());
    rows.clear();
  };
  while (std::getline(in, line)) {
    if (line.empty()) {
      flush();
      continue;
    }
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  flush();
  std::string text;
  for (std::size_t i = 0; i < blocks.size(); ++i) text += (i ? "\n" : "") + blocks[i];
  return text;
}

void emit_table(std::ostream& out, const std::string& csv, OutputFormat f) {
  out << (f == OutputFormat::markdown ? csv_to_markdown(csv) : csv);
}

Anchor anchor_for(const RunConfig& cfg, unsigned j) {
  if (cfg.anchor.empty()) return default_anchor(j);
  if (cfg.anchor == "all") throw ContractError("--anchor all only applies to table1");
  return parse_anchor(cfg.anchor);
}

std::optional<Strictness> strict_for(const RunConfig& cfg) {
  if (cfg.strict.empty()) return std::nullopt;
  return parse_strictness(cfg.strict);
}

Sequence load_gamma(const RunConfig& cfg, Index last_index) {
  const std::string& src = cfg.sequence;
  if (src.rfind("file:", 0) == 0) return load_sequence(src.substr(5));

  std::function<Sequence(Index)> generate;
  if (src == "partition") {
    generate = partition_sequence;
  } else if (src == "planepartition") {
    generate = plane_partition_sequence;
  } else if (src.rfind("builtin:", 0) == 0) {
    const auto spec = parse_builtin(src.substr(8));
    generate = [spec](Index n) { return builtin_sequence(spec, n); };
  } else {
    throw ContractError("unknown sequence '" + src + "' (partition|planepartition|file:PATH|builtin:NAME)");
  }
  if (last_index < 0) throw ContractError("sequence length must be nonnegative");
  if (cfg.cache_dir.empty()) return generate(last_index);
  SequenceCache cache(cfg.cache_dir);
  return cache.get_or_compute(src, last_index, generate);
}

std::string sequence_csv(const Sequence& s) {
  std::string out = "index,value\n";
  for (Index i = s.offset(); i <= s.last_index(); ++i) out += std::to_string(i) + ',' + to_string(s.at(i)) + '\n';
  return out;
}

std::string threshold_csv(const ThresholdReport& r) {
  std::string out = "predicate,onset,n_max,domain_min,status,witness_index,witness_value\n";
  const auto& w = r.failure_witness;
  out += '"' + r.predicate.to_string() + '"';
  out += ',' + (r.onset ? std::to_string(*r.onset) : std::string("none"));
  out += ',' + std::to_string(r.n_max) + ',' + std::to_string(r.domain_min) + ',' + to_string(r.status);
  out += ',' + (w ? std::to_string(w->index) : std::string("-"));
  out += ',' + (w && w->value ? to_string(*w->value) : std::string("-"));
  return out + '\n';
}

struct Window {
  std::optional<Index> n;
  std::optional<Index> from;
  std::optional<Index> to;

  // [lo, hi] from --n or --from/--to, with fallbacks.
  std::pair<Index, Index> range(Index default_lo, Index default_hi) const {
    if (n) return {*n, *n};
    const Index lo = from.value_or(default_lo);
    const Index hi = to.value_or(std::max(lo, default_hi));
    if (lo > hi) throw ContractError("--from must not exceed --to");
    return {lo, hi};
  }
};

void add_window(CLI::App* sub, Window& w) {
  sub->add_option("--n", w.n, "Single shift");
  sub->add_option("--from", w.from, "First shift of a window");
  sub->add_option("--to", w.to, "Last shift of a window");
}

int report_table_mismatch(bool matched, std::ostream& err) {
  if (matched) return kSuccess;
  err << "hypercert: reproduction mismatch: at least one cell differs from its reference value\n";
  return kMismatch;
}

}  // namespace

std::string RunConfig::summary() const {
  std::ostringstream s;
  s << "nmax=" << (n_max ? std::to_string(*n_max) : "default") << " jmax=" << (j_max ? std::to_string(*j_max) : "default")
    << " kmax=" << (k_max ? std::to_string(*k_max) : "default") << " anchor=" << (anchor.empty() ? "default" : anchor)
    << " strict=" << (strict.empty() ? "default" : strict) << " seq=" << sequence
    << " cache=" << (cache_dir.empty() ? "none" : cache_dir) << " threads=" << threads
    << " format=" << (format ? format_name(*format) : "default") << " seed=" << seed;
  return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();

  CLI::App app{"Exact real-rootedness certificates, Turan and Laguerre operators, and onset thresholds",
               "hypercert"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read key=value settings (flag names without dashes); flags win");
  app.allow_config_extras(false);

  RunConfig cfg;
  Index n_max = 0;
  unsigned j_max = 0, k_max = 0;
  std::string format;
  auto* o_nmax = app.add_option("--nmax", n_max, "Scan ceiling / sequence length");
  auto* o_jmax = app.add_option("--jmax", j_max, "Largest operator order");
  auto* o_kmax = app.add_option("--kmax", k_max, "Largest iteration count");
  app.add_option("--anchor", cfg.anchor, "Turan window anchor")
      ->check(CLI::IsMember({"backward", "centered", "start", "all"}));
  app.add_option("--strict", cfg.strict, "Predicate strictness")->check(CLI::IsMember({"gt", "ge"}));
  app.add_option("--seq", cfg.sequence, "partition | planepartition | file:PATH | builtin:NAME");
  app.add_option("--cache", cfg.cache_dir, "Sequence cache directory");
  app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  auto* o_format = app.add_option("--format", format, "Output format")
                       ->check(CLI::IsMember({"csv", "markdown", "json"}));
  app.add_option("--seed", cfg.seed, "Random seed");

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  // seq
  auto* seq_cmd = sub("seq", "Generate or ingest a sequence");
  std::string seq_out;
  seq_cmd->add_option("--out", seq_out, "Write the sequence file here instead of stdout");

  // jensen
  auto* jensen_cmd = sub("jensen", "Jensen polynomials and their real-rootedness");
  unsigned jensen_d = 0;
  std::string jensen_method = "sturm";
  Window jensen_win;
  jensen_cmd->add_option("--d", jensen_d, "Degree")->required();
  jensen_cmd->add_option("--method", jensen_method, "sturm | hankel | both");
  add_window(jensen_cmd, jensen_win);

  // certify
  auto* certify_cmd = sub("certify", "Certify real-rootedness of a polynomial");
  std::string certify_poly, certify_method = "both";
  certify_cmd->add_option("--poly", certify_poly, "Coefficients c0 c1 ... as exact rationals")->required();
  certify_cmd->add_option("--method", certify_method, "sturm | hankel | both");

  // turan
  auto* turan_cmd = sub("turan", "Iterated Turan operator values");
  unsigned turan_j = 0, turan_k = 1;
  Window turan_win;
  turan_cmd->add_option("--j", turan_j, "Order")->required();
  turan_cmd->add_option("--k", turan_k, "Iterations");
  add_window(turan_cmd, turan_win);

  // laguerre
  auto* laguerre_cmd = sub("laguerre", "Laguerre operators at zero, or the expansion identity for a polynomial");
  unsigned laguerre_k = 1, laguerre_iter = 1;
  std::string laguerre_expand, laguerre_at = "0";
  Window laguerre_win;
  laguerre_cmd->add_option("--k", laguerre_k, "Operator order");
  laguerre_cmd->add_option("--iterate", laguerre_iter, "Number of applications (series form when > 1)");
  laguerre_cmd->add_option("--expand", laguerre_expand, "Check the expansion identity for this polynomial");
  laguerre_cmd->add_option("--at", laguerre_at, "Evaluation point for --expand");
  add_window(laguerre_cmd, laguerre_win);

  // multseq
  auto* multseq_cmd = sub("multseq", "Order-d multiplier witness test or window structure check");
  unsigned multseq_d = 0;
  std::size_t multseq_trials = 200;
  std::string multseq_type = "I";
  bool multseq_structure = false;
  Window multseq_win;
  multseq_cmd->add_option("--d", multseq_d, "Degree bound");
  multseq_cmd->add_option("--trials", multseq_trials, "Random trials (trial 0 is (1+x)^d)");
  multseq_cmd->add_option("--type", multseq_type, "I (all real-rooted inputs) | II (same-sign roots)");
  multseq_cmd->add_flag("--structure", multseq_structure, "Check the zero/sign structure of --from..--to");
  add_window(multseq_cmd, multseq_win);

  // threshold
  auto* threshold_cmd = sub("threshold", "Least onset of a predicate family");
  std::string threshold_family;
  unsigned threshold_j = 1, threshold_k = 1, threshold_d = 2;
  threshold_cmd->add_option("--family", threshold_family, "turan | laguerre | jensen")
      ->required()
      ->check(CLI::IsMember({"turan", "laguerre", "jensen"}));
  threshold_cmd->add_option("--j", threshold_j, "Operator order");
  threshold_cmd->add_option("--k", threshold_k, "Turan iterations");
  threshold_cmd->add_option("--d", threshold_d, "Jensen degree");

  // tables
  auto* table1_cmd = sub("table1", "Onsets of iterated Turan inequalities for p(n)");
  bool table1_ratios = false;
  table1_cmd->add_flag("--ratios", table1_ratios, "Append onset / ((6/pi^2)(jk)^2 log(jk)^2) as decimals");
  auto* table2_cmd = sub("table2", "Onsets of Laguerre inequalities at zero for p(n)");

  // check
  auto* check_cmd = sub("check", "Run the invariant suites");
  std::vector<std::string> check_suites;
  bool check_list = false;
  check_cmd->add_option("--suite", check_suites, "Suite or module name (repeatable)");
  check_cmd->add_flag("--list", check_list, "List suites and exit");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kSuccess : kContractError;
  }

  if (o_nmax->count() > 0) cfg.n_max = n_max;
  if (o_jmax->count() > 0) cfg.j_max = j_max;
  if (o_kmax->count() > 0) cfg.k_max = k_max;
  if (o_format->count() > 0) cfg.format = parse_format(format);
  err << "hypercert: " << cfg.summary() << '\n';

  int status = kSuccess;
  try {
    const WorkerPool pool(cfg.threads);
    const auto fmt = [&](OutputFormat fallback) { return cfg.format.value_or(fallback); };

    if (seq_cmd->parsed()) {
      const Sequence s = load_gamma(cfg, cfg.n_max.value_or(100));
      if (!seq_out.empty()) {
        save_sequence(seq_out, s);
        err << "hypercert: wrote " << s.size() << " terms to " << seq_out << '\n';
      } else if (!cfg.format) {
        out << format_sequence(s);
      } else if (*cfg.format == OutputFormat::json) {
        nlohmann::json j{{"provenance", s.provenance()}, {"offset", s.offset()}};
        auto terms = nlohmann::json::array();
        for (const auto& q : s.terms()) terms.push_back(to_string(q));
        j["terms"] = std::move(terms);
        out << j.dump(2) << '\n';
      } else {
        emit_table(out, sequence_csv(s), *cfg.format);
      }
    } else if (jensen_cmd->parsed()) {
      const auto method = parse_cert_method(jensen_method);
      if (jensen_win.n) {
        const Sequence g = load_gamma(cfg, *jensen_win.n + jensen_d);
        const auto j = jensen_poly(g, jensen_d, *jensen_win.n);
        nlohmann::json doc{{"degree", jensen_d},
                           {"shift", *jensen_win.n},
                           {"jensen", to_text(j)},
                           {"appell", to_text(appell_poly(g, jensen_d, *jensen_win.n))},
                           {"certificate", to_json(certify_hyperbolic(j, method))}};
        out << doc.dump(2) << '\n';
      } else {
        const auto [lo, hi] = jensen_win.range(0, cfg.n_max.value_or(100));
        const Sequence g = load_gamma(cfg, hi + jensen_d);
        const auto report = jensen_window_report(g, jensen_d, lo, hi, pool);
        if (fmt(OutputFormat::csv) == OutputFormat::json) {
          nlohmann::json doc{{"degree", report.degree}, {"n_lo", report.n_lo}, {"n_hi", report.n_hi}};
          doc["onset"] = report.onset ? nlohmann::json(*report.onset) : nlohmann::json(nullptr);
          auto verdicts = nlohmann::json::array();
          for (const auto& v : report.verdicts) {
            verdicts.push_back({{"shift", v.shift}, {"hyperbolic", v.hyperbolic}, {"sign_profile", to_string(v.sign.pattern)}});
          }
          doc["verdicts"] = std::move(verdicts);
          out << doc.dump(2) << '\n';
        } else {
          emit_table(out, to_csv(report), fmt(OutputFormat::csv));
        }
        err << "hypercert: window onset "
            << (report.onset ? std::to_string(*report.onset) : std::string("none")) << '\n';
      }
    } else if (certify_cmd->parsed()) {
      const auto cert = certify_hyperbolic(parse_polynomial(certify_poly), parse_cert_method(certify_method));
      if (fmt(OutputFormat::json) == OutputFormat::json) {
        out << to_json(cert).dump(2) << '\n';
      } else {
        const std::string csv = "hyperbolic,degree,distinct_real_roots,simple_roots,hankel,sign_profile\n" +
                                std::string(cert.hyperbolic ? "true" : "false") + ',' + std::to_string(cert.degree) +
                                ',' + std::to_string(cert.distinct_real_roots) + ',' +
                                (cert.simple_roots ? "true" : "false") + ',' + to_string(cert.hankel) + ',' +
                                to_string(cert.sign.pattern) + '\n';
        emit_table(out, csv, *cfg.format);
      }
    } else if (turan_cmd->parsed()) {
      const Anchor anchor = anchor_for(cfg, turan_j);
      const Index reach = anchor_reach_back(anchor, turan_j);
      const Index forward = static_cast<Index>(turan_j) - reach;
      const auto [lo, hi] = turan_win.range(static_cast<Index>(turan_k) * reach, cfg.n_max.value_or(100));
      const Sequence g = load_gamma(cfg, hi + static_cast<Index>(turan_k) * forward);
      const auto it = turan_iterate(g, turan_j, turan_k, anchor, pool, hi);
      const Index first = std::max(lo, it.first_index());
      if (first > it.last_index()) throw ContractError("requested window lies outside the operator's domain");
      const auto values = it.values.window(first, it.last_index());
      IteratedSequence trimmed{Sequence({values.begin(), values.end()}, first, it.values.provenance()), it.order,
                               it.iterations, it.anchor};
      if (fmt(OutputFormat::csv) == OutputFormat::json) {
        nlohmann::json doc{{"j", turan_j}, {"k", turan_k}, {"anchor", to_string(anchor)}};
        auto rows = nlohmann::json::array();
        for (Index i = first; i <= trimmed.last_index(); ++i) {
          rows.push_back({{"index", i}, {"value", to_string(trimmed.values.at(i))}, {"sign", sign(trimmed.values.at(i))}});
        }
        doc["values"] = std::move(rows);
        out << doc.dump(2) << '\n';
      } else {
        emit_table(out, to_csv(trimmed), fmt(OutputFormat::csv));
      }
    } else if (laguerre_cmd->parsed()) {
      if (!laguerre_expand.empty()) {
        const auto report = laguerre_expansion_check(parse_polynomial(laguerre_expand), parse_rational(laguerre_at));
        nlohmann::json doc{{"passed", report.passed}, {"first_mismatch", report.first_mismatch}};
        auto coeffs = nlohmann::json::array();
        for (const auto& c : report.even_coefficients) coeffs.push_back(to_string(c));
        doc["even_coefficients"] = std::move(coeffs);
        out << doc.dump(2) << '\n';
        if (!report.passed) status = kContractError;
      } else {
        if (laguerre_iter == 0) throw ContractError("--iterate must be at least 1");
        const auto [lo, hi] = laguerre_win.range(0, cfg.n_max.value_or(100));
        const Index reach = static_cast<Index>(laguerre_required_order(laguerre_k, laguerre_iter));
        const Sequence g = load_gamma(cfg, hi + reach);
        std::vector<LaguerreValue> values(static_cast<std::size_t>(hi - lo + 1));
        pool.parallel_for(values.size(), [&](std::size_t i) {
          const Index n = lo + static_cast<Index>(i);
          auto& v = values[i];
          v.k = laguerre_k;
          v.shift = n;
          if (laguerre_iter == 1) {
            v.value = laguerre_at_zero(g, laguerre_k, n);
            v.source = LaguerreValue::Source::sequence_form;
          } else {
            v.value = laguerre_iterate_at_zero(g, laguerre_k, laguerre_iter, n);
            v.source = LaguerreValue::Source::series_form;
          }
        });
        if (fmt(OutputFormat::csv) == OutputFormat::json) {
          auto rows = nlohmann::json::array();
          for (const auto& v : values) {
            rows.push_back({{"n", v.shift}, {"k", v.k}, {"value", to_string(v.value)}, {"sign", sign(v.value)}});
          }
          out << nlohmann::json{{"iterations", laguerre_iter}, {"values", rows}}.dump(2) << '\n';
        } else {
          emit_table(out, to_csv(values), fmt(OutputFormat::csv));
        }
      }
    } else if (multseq_cmd->parsed()) {
      if (multseq_structure) {
        const auto [lo, hi] = multseq_win.range(0, cfg.n_max.value_or(100));
        const Sequence g = load_gamma(cfg, hi);
        out << to_json(window_structure_check(g, lo, hi)).dump(2) << '\n';
      } else {
        if (multseq_d == 0 || !multseq_win.n) throw ContractError("multseq needs --d >= 1 and --n (or --structure)");
        const Sequence g = load_gamma(cfg, *multseq_win.n + multseq_d);
        const auto report = order_d_witness_test(g, multseq_d, *multseq_win.n, multseq_trials, cfg.seed,
                                                 parse_multiplier_type(multseq_type), pool);
        out << to_json(report).dump(2) << '\n';
      }
    } else if (threshold_cmd->parsed()) {
      PredicateSpec pred;
      if (threshold_family == "turan") {
        pred = PredicateSpec::turan(threshold_j, threshold_k, anchor_for(cfg, threshold_j), strict_for(cfg));
      } else if (threshold_family == "laguerre") {
        pred = PredicateSpec::laguerre_zero(threshold_j, strict_for(cfg));
      } else {
        pred = PredicateSpec::jensen_hyperbolic(threshold_d);
      }
      const Index top = cfg.n_max.value_or(1000);
      const Sequence g = load_gamma(cfg, required_last_index(pred, top));
      const auto report = threshold_search(pred, g, top, pool);
      if (fmt(OutputFormat::csv) == OutputFormat::json) {
        out << to_json(report).dump(2) << '\n';
      } else {
        emit_table(out, threshold_csv(report), fmt(OutputFormat::csv));
      }
    } else if (table1_cmd->parsed()) {
      const unsigned jm = cfg.j_max.value_or(4), km = cfg.k_max.value_or(4);
      std::optional<Anchor> row_anchor;
      if (!cfg.anchor.empty() && cfg.anchor != "all") row_anchor = parse_anchor(cfg.anchor);
      const Strictness strict = strict_for(cfg).value_or(Strictness::gt);
      Index largest = 0;
      for (unsigned j = 1; j <= jm; ++j)
        for (unsigned k = 1; k <= km; ++k) largest = std::max(largest, table1_reference(j, k).value_or(0));
      const Index top = cfg.n_max.value_or(largest + 200);
      const Sequence g = load_gamma(cfg, table1_required_last_index(jm, km, top, row_anchor));
      const auto t = reproduce_table1(jm, km, top, g, pool, strict, row_anchor);
      const auto f = fmt(OutputFormat::csv);
      if (f == OutputFormat::json) {
        auto doc = to_json(t);
        if (table1_ratios) {
          nlohmann::json ratios;
          for (const auto& c : t.cells) {
            const auto r = c.report.onset ? asymptotic_ratio(c.j, c.k, *c.report.onset) : std::nullopt;
            ratios[std::to_string(c.j) + "," + std::to_string(c.k)] = r ? nlohmann::json(*r) : nlohmann::json(nullptr);
          }
          doc["ratios"] = std::move(ratios);
        }
        out << doc.dump(2) << '\n';
      } else {
        std::string csv = to_csv(t);
        if (table1_ratios) csv += '\n' + ratio_csv(t);
        emit_table(out, csv, f);
      }
      status = report_table_mismatch(t.all_matched(), err);
    } else if (table2_cmd->parsed()) {
      const unsigned jm = cfg.j_max.value_or(10);
      const Strictness strict = strict_for(cfg).value_or(Strictness::ge);
      Index largest = 0;
      for (unsigned j = 1; j <= jm; ++j) largest = std::max(largest, table2_reference(j).value_or(0));
      const Index top = cfg.n_max.value_or(largest + 200);
      const Sequence g = load_gamma(cfg, table2_required_last_index(jm, top));
      const auto t = reproduce_table2(jm, top, g, pool, strict);
      const auto f = fmt(OutputFormat::csv);
      if (f == OutputFormat::json) {
        out << to_json(t).dump(2) << '\n';
      } else {
        emit_table(out, to_csv(t), f);
      }
      status = report_table_mismatch(t.all_matched(), err);
    } else if (check_cmd->parsed()) {
      if (check_list) {
        std::string csv = "suite,module\n";
        for (const auto& s : checks::suite_registry()) csv += s.name + ',' + s.module + '\n';
        emit_table(out, csv, fmt(OutputFormat::csv));
      } else {
        checks::SuiteContext ctx;
        ctx.seed = cfg.seed;
        ctx.pool = &pool;
        const auto results = checks::run_suites(check_suites, ctx);
        std::string csv = "suite,cases,violations,status\n";
        for (const auto& r : results) {
          csv += r.name + ',' + std::to_string(r.cases) + ',' + std::to_string(r.violations) + ',' +
                 (r.passed() ? "pass" : "FAIL") + '\n';
          if (!r.passed()) {
            err << "hypercert: " << r.name << ": "
                << (r.first_violation.empty() ? "no cases ran" : r.first_violation) << '\n';
            status = kContractError;
          }
        }
        emit_table(out, csv, fmt(OutputFormat::csv));
      }
    }
  } catch (const RangeError& e) {
    err << "hypercert: error: " << e.what() << '\n';
    if (e.required_last_index()) err << "hypercert: extend the sequence through index " << *e.required_last_index() << '\n';
    return kContractError;
  } catch (const std::exception& e) {
    err << "hypercert: error: " << e.what() << '\n';
    return kContractError;
  }

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  err << "hypercert: finished in " << seconds << "s\n";
  return status;
}

}  // namespace hypercert::cli
