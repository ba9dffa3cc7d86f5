#include "hypercert/checks/oracles.hpp"
#include "hypercert/checks/random.hpp"
#include "hypercert/checks/suites.hpp"
#include "hypercert/jensen.hpp"
#include "hypercert/laguerre.hpp"
#include "hypercert/multseq.hpp"
#include "hypercert/rootcert.hpp"
#include "hypercert/thresholds.hpp"

#include <nlohmann/json.hpp>

namespace hypercert::checks {

SuiteResult suite_schur_szego_closure(const SuiteContext& ctx) {
  Tally t("schur_szego_closure");
  Rng rng(ctx.seed + 89);
  for (int i = 0; i < 500; ++i) {
    const auto d = static_cast<std::size_t>(rng.integer(1, 6));
    std::vector<Rational> r1(d), r2(d);
    for (auto& r : r1) r = rng.rational(12, 4);
    const int side = rng.coin() ? 1 : -1;
    for (auto& r : r2) {
      r = rng.rational(12, 4);
      if (sgn(r) * side < 0) r = -r;
    }
    const auto f1 = polynomial_from_roots(r1, rng.nonzero_integer(6));
    const auto f2 = polynomial_from_roots(r2, rng.nonzero_integer(6));
    const auto g = schur_szego(f1, f2);
    t.check(is_hyperbolic(g), [&] {
      return "composition of " + to_text(f1) + " and " + to_text(f2) + " is not real-rooted: " + to_text(g);
    });
  }
  return t.result();
}

SuiteResult suite_witness_jensen_equivalence(const SuiteContext& ctx) {
  Tally t("witness_jensen_equivalence");
  const auto p = partition_sequence(140);
  for (unsigned d = 1; d <= 3; ++d) {
    for (Index n = 0; n <= 130; n += 5) {
      const auto report = order_d_witness_test(p, d, n, 20, ctx.seed + n, MultiplierType::type_one, *ctx.pool);
      const bool found = report.verdict == WitnessReport::Verdict::counterexample_found;
      const bool jensen_fails = !is_hyperbolic(jensen_poly(p, d, n));
      t.check(found == jensen_fails, [&] {
        return "witness test and J^{" + std::to_string(d) + "," + std::to_string(n) + "} disagree";
      });
    }
  }
  return t.result();
}

SuiteResult suite_hadamard_monoid(const SuiteContext& ctx) {
  Tally t("hadamard_monoid");
  Rng rng(ctx.seed + 97);
  const auto p = partition_sequence(100);
  const auto one = builtin_sequence(parse_builtin("constant"), 100);
  t.check(hadamard_product(p, one) == p, [] { return "p * constant != p"; });
  for (int i = 0; i < 50; ++i) {
    const auto a = rng.sequence(static_cast<std::size_t>(rng.integer(5, 30)), 50, rng.integer(0, 5));
    const auto b = rng.sequence(static_cast<std::size_t>(rng.integer(5, 30)), 50, rng.integer(0, 5));
    const auto c = rng.sequence(static_cast<std::size_t>(rng.integer(5, 30)), 50, rng.integer(0, 5));
    t.check(hadamard_product(a, b) == hadamard_product(b, a), [] { return "product not commutative"; });
    t.check(hadamard_product(hadamard_product(a, b), c) == hadamard_product(a, hadamard_product(b, c)),
            [] { return "product not associative"; });
    const auto unit = builtin_sequence(parse_builtin("constant"), a.last_index());
    t.check(hadamard_product(a, unit) == a, [] { return "constant is not a unit"; });
  }
  return t.result();
}

SuiteResult suite_limit_stability(const SuiteContext& ctx) {
  Tally t("limit_stability");
  Rng rng(ctx.seed + 101);
  const auto p = partition_sequence(120);
  constexpr unsigned d = 3;
  constexpr std::size_t trials = 40;
  for (Index n : {100, 110}) {
    const auto delta = rng.sequence(p.size(), 1000);
    std::size_t passing = 0;
    for (long scale : {1L, 10L, 1000L, 1000000L}) {
      std::vector<Rational> terms(p.terms().begin(), p.terms().end());
      for (std::size_t k = 0; k < terms.size(); ++k) terms[k] += delta.terms()[k] / Rational(scale);
      const Sequence approx(std::move(terms), 0, "perturbed");
      const auto r = order_d_witness_test(approx, d, n, trials, ctx.seed, MultiplierType::type_one, *ctx.pool);
      if (r.verdict == WitnessReport::Verdict::no_counterexample) ++passing;
    }
    t.check(passing > 0, [&] { return "no perturbed approximant passed at n=" + std::to_string(n); });
    const auto limit = order_d_witness_test(p, d, n, trials, ctx.seed, MultiplierType::type_one, *ctx.pool);
    t.check(limit.verdict == WitnessReport::Verdict::no_counterexample,
            [&] { return "limit sequence fails the witness set at n=" + std::to_string(n); });
  }
  return t.result();
}

namespace {

std::vector<PredicateSpec> sample_predicates() {
  return {PredicateSpec::turan(1, 2), PredicateSpec::turan(2, 1), PredicateSpec::turan(2, 2),
          PredicateSpec::turan(3, 1), PredicateSpec::laguerre_zero(1), PredicateSpec::laguerre_zero(2),
          PredicateSpec::jensen_hyperbolic(2), PredicateSpec::jensen_hyperbolic(3)};
}

// Direct, serial evaluation of one predicate at one index.
bool holds_at(const PredicateSpec& pred, const Sequence& g, Index n) {
  const auto ok = [&](const Rational& v) {
    return pred.strict == Strictness::gt ? sgn(v) > 0 : sgn(v) >= 0;
  };
  switch (pred.family) {
    case PredicateSpec::Family::turan: {
      const auto it = turan_iterate(g, pred.j, pred.k, pred.anchor, WorkerPool::serial(), n);
      return ok(it.values.at(n));
    }
    case PredicateSpec::Family::laguerre_zero:
      return ok(laguerre_at_zero(g, pred.j, n));
    case PredicateSpec::Family::jensen_hyperbolic:
      return is_hyperbolic(jensen_poly(g, pred.degree, n));
  }
  return false;
}

}  // namespace

SuiteResult suite_threshold_determinism(const SuiteContext&) {
  Tally t("threshold_determinism");
  const auto p = partition_sequence(420);
  const WorkerPool wide(4);
  for (const auto& pred : sample_predicates()) {
    const auto serial = to_json(threshold_search(pred, p, 400, WorkerPool::serial())).dump();
    const auto parallel = to_json(threshold_search(pred, p, 400, wide)).dump();
    t.check(serial == parallel, [&] { return pred.to_string() + " depends on evaluation order"; });
  }
  return t.result();
}

SuiteResult suite_threshold_monotone(const SuiteContext& ctx) {
  Tally t("threshold_monotone");
  const auto p = partition_sequence(320);
  constexpr Index n_max = 300;
  for (const auto& pred : sample_predicates()) {
    const auto report = threshold_search(pred, p, n_max, *ctx.pool);
    t.check(report.onset.has_value(), [&] { return pred.to_string() + " found no onset"; });
    if (!report.onset) continue;
    for (Index n = *report.onset; n <= n_max; ++n) {
      t.check(holds_at(pred, p, n), [&] { return pred.to_string() + " fails at " + std::to_string(n); });
    }
    if (*report.onset > report.domain_min) {
      t.check(!holds_at(pred, p, *report.onset - 1),
              [&] { return pred.to_string() + " holds just below its onset"; });
    }
  }
  return t.result();
}

SuiteResult suite_cross_family(const SuiteContext& ctx) {
  Tally t("cross_family");
  const auto p = partition_sequence(520);
  const auto lag = threshold_search(PredicateSpec::laguerre_zero(1), p, 500, *ctx.pool);
  const auto jen = threshold_search(PredicateSpec::jensen_hyperbolic(2), p, 500, *ctx.pool);
  const auto tur = threshold_search(PredicateSpec::turan(2, 1, Anchor::centered), p, 500, *ctx.pool);
  t.check(lag.onset && jen.onset && tur.onset, [] { return "an onset is missing"; });
  if (lag.onset && jen.onset && tur.onset) {
    t.check(*lag.onset == *jen.onset, [] { return "laguerre_zero(1) and jensen_hyperbolic(2) onsets differ"; });
    t.check(*lag.onset == *tur.onset - 1, [] { return "laguerre_zero(1) onset != turan(2,1) onset - 1"; });
  }
  return t.result();
}

}  // namespace hypercert::checks
