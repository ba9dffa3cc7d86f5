#include "hypercert/jensen.hpp"

#include <sstream>

#include "hypercert/error.hpp"

namespace hypercert {

Polynomial jensen_poly(const Sequence& gamma, unsigned d, Index n) {
  if (d == 0) throw ContractError("jensen_poly needs degree d >= 1");
  gamma.require_range(n, n + static_cast<Index>(d), "Jensen polynomial J^{" + std::to_string(d) + "," + std::to_string(n) + "}");
  const auto& binom = binomial_row(d);
  std::vector<Rational> c(d + 1);
  for (unsigned k = 0; k <= d; ++k) c[k] = gamma.at(n + static_cast<Index>(k)) * binom[k];
  return Polynomial(std::move(c));
}

Polynomial appell_poly(const Sequence& gamma, unsigned d, Index n) {
  const Polynomial j = jensen_poly(gamma, d, n);
  // x^d J(1/x): coefficient of x^k becomes coefficient of x^(d-k).
  std::vector<Rational> c(d + 1);
  const Integer d_factorial = factorial(d);
  for (unsigned k = 0; k <= d; ++k) c[d - k] = j.coeff(k) / d_factorial;
  return Polynomial(std::move(c));
}

Rational scaled_jensen_eval(const Sequence& gamma, unsigned d, Index n, const Rational& x) {
  if (d == 0) throw ContractError("scaled_jensen_eval needs d >= 1");
  Rational scaled = x / Integer(d);
  return jensen_poly(gamma, d, n)(scaled);
}

JensenWindowReport jensen_window_report(const Sequence& gamma, unsigned d, Index n_lo, Index n_hi,
                                        const WorkerPool& pool) {
  if (n_lo > n_hi) throw ContractError("jensen_window_report needs n_lo <= n_hi");
  if (d == 0) throw ContractError("jensen_window_report needs degree d >= 1");
  gamma.require_range(n_lo, n_hi + static_cast<Index>(d), "jensen_window_report");

  JensenWindowReport report;
  report.degree = d;
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  report.verdicts.resize(static_cast<std::size_t>(n_hi - n_lo + 1));
  pool.parallel_for(report.verdicts.size(), [&](std::size_t k) {
    const Index n = n_lo + static_cast<Index>(k);
    const Polynomial j = jensen_poly(gamma, d, n);
    const RootCertificate cert = certify_hyperbolic(j, CertMethod::sturm);
    report.verdicts[k] = JensenVerdict{n, cert.hyperbolic, cert.sign};
  });

  std::optional<Index> onset;
  for (auto it = report.verdicts.rbegin(); it != report.verdicts.rend() && it->hyperbolic; ++it) {
    onset = it->shift;
  }
  report.onset = onset;
  return report;
}

std::string to_csv(const JensenWindowReport& report) {
  std::ostringstream out;
  out << "shift,hyperbolic,sign_profile\n";
  for (const auto& v : report.verdicts) {
    out << v.shift << ',' << (v.hyperbolic ? "true" : "false") << ',' << to_string(v.sign.pattern)
        << '\n';
  }
  return out.str();
}

}  // namespace hypercert
