#include "hypercert/laguerre.hpp"

#include <sstream>

#include "hypercert/error.hpp"

namespace hypercert {

namespace {

// (-1)^(j+k) C(2k, j) / (2k)!
Rational leibniz_weight(unsigned k, unsigned j) {
  Rational w(binomial(2 * k, j), factorial(2 * k));
  w.canonicalize();
  if ((j + k) % 2 == 1) w = -w;
  return w;
}

}  // namespace

Rational laguerre_at_zero(const Sequence& gamma, unsigned k, Index n) {
  gamma.require_range(n, n + 2 * static_cast<Index>(k), "laguerre_at_zero");
  Rational sum = 0;
  for (unsigned j = 0; j <= 2 * k; ++j) {
    sum += leibniz_weight(k, j) * gamma.at(n + j) * gamma.at(n + 2 * k - j);
  }
  return sum;
}

TruncatedSeries laguerre_series(const TruncatedSeries& s, unsigned k) {
  const std::size_t need = 2 * static_cast<std::size_t>(k);
  if (s.order() < need) {
    throw ContractError("L_" + std::to_string(k) + " needs series order >= " + std::to_string(need) +
                        ", got " + std::to_string(s.order()));
  }
  const std::size_t out_order = s.order() - need;

  std::vector<TruncatedSeries> derivs{s};
  derivs.reserve(need + 1);
  for (std::size_t j = 1; j <= need; ++j) derivs.push_back(derivative(derivs.back()));

  std::vector<Rational> acc(out_order + 1);
  for (unsigned j = 0; j <= need; ++j) {
    const TruncatedSeries term = product(derivs[j], derivs[need - j]);
    const Rational w = leibniz_weight(k, j);
    for (std::size_t m = 0; m <= out_order; ++m) acc[m] += w * term.coeff(m);
  }
  return TruncatedSeries(std::move(acc), s.base_shift());
}

Rational laguerre_iterate_at_zero(const Sequence& gamma, unsigned j, unsigned k, Index n) {
  if (k == 0) throw ContractError("laguerre_iterate_at_zero needs k >= 1");
  const std::size_t order = laguerre_required_order(j, k);
  gamma.require_range(n, n + static_cast<Index>(order),
                      "L_" + std::to_string(j) + "^(" + std::to_string(k) +
                          ") at 0 (order " + std::to_string(order) + " window)");
  TruncatedSeries s = taylor_window(gamma, n, order);
  for (unsigned level = 0; level < k; ++level) s = laguerre_series(s, j);
  return s.coeff(0);
}

Polynomial laguerre_poly(const Polynomial& f, unsigned k) {
  Polynomial sum;
  for (unsigned j = 0; j <= 2 * k; ++j) {
    sum += leibniz_weight(k, j) * (f.derivative(j) * f.derivative(2 * k - j));
  }
  return sum;
}

namespace {

// Real and imaginary parts of f(x + s*i*y) as polynomials in y, s = +1 or -1,
// by expanding each (x + s*i*y)^m binomially.
std::pair<std::vector<Rational>, std::vector<Rational>> complex_shift(const Polynomial& f,
                                                                      const Rational& x, int s) {
  const std::size_t n = f.coefficients().size();
  std::vector<Rational> re(n), im(n);
  for (std::size_t m = 0; m < n; ++m) {
    const Rational& fm = f.coefficients()[m];
    if (sgn(fm) == 0) continue;
    const auto& binom = binomial_row(static_cast<unsigned>(m));
    for (std::size_t t = 0; t <= m; ++t) {
      // (s i)^t = s^t i^t; i^t cycles 1, i, -1, -i.
      Rational term = fm * binom[t] * pow(x, static_cast<unsigned>(m - t));
      if (s < 0 && t % 2 == 1) term = -term;
      switch (t % 4) {
        case 0: re[t] += term; break;
        case 1: im[t] += term; break;
        case 2: re[t] -= term; break;
        case 3: im[t] -= term; break;
      }
    }
  }
  return {std::move(re), std::move(im)};
}

std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

ExpansionCheck laguerre_expansion_check(const Polynomial& f, const Rational& x) {
  if (f.is_zero()) throw ContractError("laguerre_expansion_check of the zero polynomial");
  const auto [p_re, p_im] = complex_shift(f, x, +1);
  const auto [q_re, q_im] = complex_shift(f, x, -1);

  const auto rr = convolve(p_re, q_re);
  const auto ii = convolve(p_im, q_im);
  const auto ri = convolve(p_re, q_im);
  const auto ir = convolve(p_im, q_re);

  ExpansionCheck report;
  report.passed = true;
  auto fail = [&](std::string why) {
    if (report.passed) report.first_mismatch = std::move(why);
    report.passed = false;
  };

  for (std::size_t t = 0; t < rr.size(); ++t) {
    const Rational real = rr[t] - ii[t];
    const Rational imag = ri[t] + ir[t];
    if (sgn(imag) != 0) fail("imaginary part has nonzero y^" + std::to_string(t) + " coefficient");
    if (t % 2 == 1) {
      if (sgn(real) != 0) fail("odd power y^" + std::to_string(t) + " has coefficient " + to_string(real));
      continue;
    }
    const auto k = static_cast<unsigned>(t / 2);
    const Rational expected = laguerre_poly(f, k)(x);
    if (real != expected) {
      fail("y^" + std::to_string(t) + " coefficient " + to_string(real) + " != L_" +
           std::to_string(k) + "(f)(x) = " + to_string(expected));
    }
    report.even_coefficients.push_back(real);
  }
  return report;
}

std::string to_csv(std::span<const LaguerreValue> values) {
  std::ostringstream out;
  out << "n,k,value,sign\n";
  for (const auto& v : values) {
    out << v.shift << ',' << v.k << ',' << to_string(v.value) << ',' << sign(v.value) << '\n';
  }
  return out.str();
}

}  // namespace hypercert
