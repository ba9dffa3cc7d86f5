#include "hypercert/multseq.hpp"

#include <random>

#include <nlohmann/json.hpp>

#include "hypercert/error.hpp"

namespace hypercert {

Polynomial gamma_apply(const Sequence& gamma, Index n, const Polynomial& f) {
  if (f.is_zero()) return f;
  const auto d = static_cast<Index>(f.degree());
  gamma.require_range(n, n + d, "gamma_apply");
  std::vector<Rational> c(f.coefficients().begin(), f.coefficients().end());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] *= gamma.at(n + static_cast<Index>(k));
  return Polynomial(std::move(c));
}

Polynomial schur_szego(const Polynomial& f1, const Polynomial& f2) {
  if (f1.is_zero() || f2.is_zero() || f1.degree() != f2.degree()) {
    throw ContractError("schur_szego needs two nonzero polynomials of equal degree");
  }
  const auto d = static_cast<unsigned>(f1.degree());
  const auto& binom = binomial_row(d);
  std::vector<Rational> g(d + 1);
  for (unsigned k = 0; k <= d; ++k) {
    // C(d,k) a_k b_k with a_k = f1_k / C(d,k), b_k = f2_k / C(d,k).
    g[k] = f1.coeff(k) * f2.coeff(k) / binom[k];
  }
  return Polynomial(std::move(g));
}

Sequence hadamard_product(const Sequence& gamma, const Sequence& lambda) {
  const Index lo = std::max(gamma.offset(), lambda.offset());
  const Index hi = std::min(gamma.last_index(), lambda.last_index());
  if (lo > hi) throw ContractError("hadamard_product: index ranges do not overlap");
  std::vector<Rational> terms;
  terms.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (Index i = lo; i <= hi; ++i) terms.push_back(gamma.at(i) * lambda.at(i));
  return Sequence(std::move(terms), lo, "(" + gamma.provenance() + ")*(" + lambda.provenance() + ")");
}

std::string to_string(MultiplierType t) {
  return t == MultiplierType::type_one ? "I" : "II";
}

MultiplierType parse_multiplier_type(std::string_view text) {
  if (text == "I" || text == "1" || text == "type_one") return MultiplierType::type_one;
  if (text == "II" || text == "2" || text == "type_two") return MultiplierType::type_two;
  throw ContractError("unknown multiplier type '" + std::string(text) + "' (I|II)");
}

std::vector<Polynomial> witness_inputs(unsigned d, std::size_t trials, std::uint64_t seed,
                                       MultiplierType type) {
  if (d == 0) throw ContractError("witness inputs need degree d >= 1");
  std::vector<Polynomial> inputs;
  inputs.reserve(trials);
  if (trials == 0) return inputs;
  inputs.push_back(pow(Polynomial{1, 1}, d));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> degree_dist(1, d);
  std::uniform_int_distribution<long> num_dist(-20, 20);
  std::uniform_int_distribution<long> den_dist(1, 6);
  std::uniform_int_distribution<long> lead_dist(1, 5);
  std::bernoulli_distribution coin(0.5);

  for (std::size_t t = 1; t < trials; ++t) {
    const unsigned m = degree_dist(rng);
    const int root_sign = coin(rng) ? 1 : -1;
    Polynomial f = Polynomial::constant(coin(rng) ? lead_dist(rng) : -lead_dist(rng));
    for (unsigned r = 0; r < m; ++r) {
      long num = num_dist(rng);
      if (type == MultiplierType::type_two) num = root_sign * std::abs(num);
      Rational root(num, den_dist(rng));
      root.canonicalize();
      f = f * Polynomial::linear_factor(root);
    }
    inputs.push_back(std::move(f));
  }
  return inputs;
}

WitnessReport order_d_witness_test(const Sequence& gamma, unsigned d, Index n, std::size_t trials,
                                   std::uint64_t seed, MultiplierType type,
                                   const WorkerPool& pool) {
  if (trials == 0) throw ContractError("order_d_witness_test needs trials >= 1");
  gamma.require_range(n, n + static_cast<Index>(d), "order_d_witness_test");

  WitnessReport report;
  report.degree = d;
  report.shift = n;
  report.trials = trials;
  report.seed = seed;
  report.type = type;

  const auto inputs = witness_inputs(d, trials, seed, type);
  std::vector<std::optional<WitnessFailure>> outcome(inputs.size());
  pool.parallel_for(inputs.size(), [&](std::size_t t) {
    Polynomial out = gamma_apply(gamma, n, inputs[t]);
    if (out.is_zero()) return;
    RootCertificate cert = certify_hyperbolic(out, CertMethod::sturm);
    if (!cert.hyperbolic) outcome[t] = WitnessFailure{t, inputs[t], std::move(out), std::move(cert)};
  });
  for (auto& o : outcome) {
    if (o) report.failures.push_back(std::move(*o));
  }
  report.verdict = report.failures.empty() ? WitnessReport::Verdict::no_counterexample
                                           : WitnessReport::Verdict::counterexample_found;
  return report;
}

nlohmann::json to_json(const WitnessReport& report) {
  nlohmann::json j;
  j["degree"] = report.degree;
  j["shift"] = report.shift;
  j["seed"] = report.seed;
  j["trials"] = report.trials;
  j["type"] = to_string(report.type);
  j["verdict"] = report.verdict == WitnessReport::Verdict::no_counterexample ? "no_counterexample"
                                                                             : "counterexample_found";
  auto failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"trial", f.trial},
                        {"input", to_text(f.input)},
                        {"output", to_text(f.output)},
                        {"certificate", to_json(f.certificate)}});
  }
  j["failures"] = std::move(failures);
  return j;
}

std::string to_string(WindowPattern p) {
  switch (p) {
    case WindowPattern::constant_sign:
      return "constant_sign";
    case WindowPattern::alternating_sign:
      return "alternating_sign";
    case WindowPattern::mixed:
      return "mixed";
    case WindowPattern::all_zero:
      return "all_zero";
  }
  return "?";
}

StructureReport window_structure_check(const Sequence& gamma, Index n_lo, Index n_hi) {
  gamma.require_range(n_lo, n_hi, "window_structure_check");
  StructureReport report;
  report.n_lo = n_lo;
  report.n_hi = n_hi;

  std::optional<Index> first_nonzero, last_nonzero;
  for (Index i = n_lo; i <= n_hi; ++i) {
    if (sgn(gamma.at(i)) != 0) {
      if (!first_nonzero) first_nonzero = i;
      last_nonzero = i;
    }
  }
  if (!first_nonzero) return report;

  for (Index i = *first_nonzero; i <= *last_nonzero; ++i) {
    if (sgn(gamma.at(i)) == 0) report.interior_zeros.push_back(i);
  }

  const int s0 = sgn(gamma.at(*first_nonzero));
  bool constant = true;
  bool alternating = true;
  for (Index i = *first_nonzero; i <= *last_nonzero; ++i) {
    const int s = sgn(gamma.at(i));
    if (s == 0) continue;
    const bool same = s == s0;
    const bool parity_ok = ((i - *first_nonzero) % 2 == 0) == same;
    if (!same) constant = false;
    if (!parity_ok) alternating = false;
    if (!constant && !alternating) {
      report.sign_breaks.push_back(i);
      break;
    }
  }
  report.pattern = constant      ? WindowPattern::constant_sign
                   : alternating ? WindowPattern::alternating_sign
                                 : WindowPattern::mixed;
  return report;
}

nlohmann::json to_json(const StructureReport& report) {
  return {{"n_lo", report.n_lo},
          {"n_hi", report.n_hi},
          {"pattern", to_string(report.pattern)},
          {"interior_zeros", report.interior_zeros},
          {"sign_breaks", report.sign_breaks}};
}

}  // namespace hypercert
