#include "hypercert/checks/oracles.hpp"
#include "hypercert/checks/random.hpp"
#include "hypercert/checks/suites.hpp"
#include "hypercert/error.hpp"
#include "hypercert/jensen.hpp"
#include "hypercert/laguerre.hpp"
#include "hypercert/rootcert.hpp"
#include "hypercert/turan.hpp"

namespace hypercert::checks {

namespace {

std::string at_text(unsigned d, Index n) {
  return "(d=" + std::to_string(d) + ", n=" + std::to_string(n) + ")";
}

Sequence scaled(const Sequence& g, const Rational& c) {
  std::vector<Rational> terms(g.terms().begin(), g.terms().end());
  for (auto& q : terms) q *= c;
  return Sequence(std::move(terms), g.offset(), g.provenance());
}

}  // namespace

SuiteResult suite_jensen_derivative(const SuiteContext& ctx) {
  Tally t("jensen_derivative");
  Rng rng(ctx.seed + 37);
  for (int trial = 0; trial < 12; ++trial) {
    const auto g = rng.sequence(30, 200);
    for (unsigned d = 1; d <= 8; ++d) {
      const Index n = rng.integer(0, 20);
      const auto j = jensen_poly(g, d, n);
      for (unsigned m = 0; m <= d; ++m) {
        const Rational falling(factorial(d) / factorial(d - m));
        const Polynomial expected = m < d ? falling * jensen_poly(g, d - m, n + m)
                                          : Polynomial::constant(falling * g.at(n + d));
        t.check(j.derivative(m) == expected,
                [&] { return "derivative " + std::to_string(m) + " of J" + at_text(d, n) + " mismatch"; });
      }
    }
  }
  return t.result();
}

SuiteResult suite_appell_derivative(const SuiteContext& ctx) {
  Tally t("appell_derivative");
  Rng rng(ctx.seed + 41);
  for (int trial = 0; trial < 12; ++trial) {
    const auto g = rng.sequence(30, 200);
    for (unsigned d = 1; d <= 8; ++d) {
      const Index n = rng.integer(0, 20);
      const Polynomial expected = d >= 2 ? appell_poly(g, d - 1, n) : Polynomial::constant(g.at(n));
      t.check(appell_poly(g, d, n).derivative() == expected,
              [&] { return "P'" + at_text(d, n) + " != P" + at_text(d - 1, n); });
    }
  }
  return t.result();
}

SuiteResult suite_degree_reduction(const SuiteContext&) {
  Tally t("degree_reduction");
  const auto p = partition_sequence(310);
  for (unsigned d = 2; d <= 5; ++d) {
    for (Index n = 94; n <= 300; ++n) {
      if (!is_hyperbolic(jensen_poly(p, d, n))) continue;
      for (unsigned m = 1; m < d; ++m) {
        t.check(is_hyperbolic(jensen_poly(p, m, n)),
                [&] { return "J" + at_text(d, n) + " real-rooted but J" + at_text(m, n) + " is not"; });
      }
    }
  }
  return t.result();
}

SuiteResult suite_jensen_convergence(const SuiteContext&) {
  Tally t("jensen_convergence");
  const auto ones = builtin_sequence(parse_builtin("constant"), 1000);
  const Rational e = e_partial_sum(60);  // within 1/61! of e
  Rational previous = -1;
  for (unsigned d : {10u, 100u, 1000u}) {
    Rational err = scaled_jensen_eval(ones, d, 0, 1) - e;
    if (sgn(err) < 0) err = -err;
    if (sgn(previous) >= 0) {
      t.check(err < previous, [&] { return "error at d=" + std::to_string(d) + " did not decrease"; });
    }
    previous = err;
  }
  return t.result();
}

SuiteResult suite_turan1_closed_form(const SuiteContext& ctx) {
  Tally t("turan1_closed_form");
  Rng rng(ctx.seed + 43);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = rng.sequence(40, 500);
    for (unsigned k = 1; k <= 6; ++k) {
      const auto it = turan_iterate(g, 1, k, Anchor::backward);
      for (Index i = it.first_index(); i <= it.last_index(); ++i) {
        const Rational expected = backward_difference(g.terms(), static_cast<std::size_t>(i), k);
        t.check(it.values.at(i) == expected,
                [&] { return "T_1^(" + std::to_string(k) + ")(" + std::to_string(i) + ") mismatch"; });
      }
    }
  }
  return t.result();
}

SuiteResult suite_turan_scaling_sign(const SuiteContext& ctx) {
  Tally t("turan_scaling_sign");
  Rng rng(ctx.seed + 47);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = rng.sequence(20, 60);
    const Rational c = rng.positive_rational(50, 13);
    const auto h = scaled(g, c);
    for (unsigned j = 1; j <= 4; ++j) {
      const Anchor a = default_anchor(j);
      const Index lo = anchor_reach_back(a, j);
      const Index hi = g.last_index() - static_cast<Index>(j) + lo;
      for (Index i = lo; i <= hi; ++i) {
        t.check(sign(turan_value(g, j, i, a)) == sign(turan_value(h, j, i, a)), [&] {
          return "sign of T_" + std::to_string(j) + "(" + std::to_string(i) + ") changes under scaling by " +
                 to_string(c);
        });
      }
    }
  }
  return t.result();
}

SuiteResult suite_turan2_vs_jensen(const SuiteContext& ctx) {
  Tally t("turan2_vs_jensen");
  Rng rng(ctx.seed + 53);
  std::vector<Sequence> samples{partition_sequence(200)};
  for (int i = 0; i < 15; ++i) samples.push_back(rng.sequence(30, 40, 0, true));
  for (const auto& g : samples) {
    for (Index i = 1; i + 1 <= g.last_index(); ++i) {
      const bool positive = sign(turan_value(g, 2, i, Anchor::centered)) > 0;
      const auto cert = certify_hyperbolic(jensen_poly(g, 2, i - 1), CertMethod::sturm);
      t.check(positive == (cert.hyperbolic && cert.simple_roots), [&] {
        return "T_2(" + std::to_string(i) + ") > 0 disagrees with J^{2," + std::to_string(i - 1) + "} on " +
               g.provenance();
      });
    }
  }
  return t.result();
}

SuiteResult suite_turan_route_agreement(const SuiteContext& ctx) {
  Tally t("turan_route_agreement");
  Rng rng(ctx.seed + 59);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<Rational> w4(4), w5(5);
    for (auto& q : w4) q = rng.rational(40, trial % 3 == 0 ? 5 : 1);
    for (auto& q : w5) q = rng.rational(40, trial % 3 == 0 ? 5 : 1);
    if (trial % 7 == 0) {
      w4.back() = 0;
      w5.back() = 0;
    }
    const Rational closed = turan_closed_form3(w4);
    t.check(turan_hankel_route(w4) == 27 * closed, [&] { return "j=3 Hankel route != 27 * closed form"; });
    t.check(turan_quartic_discriminant(w5) == turan_hankel_route(w5),
            [&] { return "j=4 discriminant != Hankel route"; });
    bool cross_ok = true;
    try {
      (void)turan_window_value(w4, TuranOptions{true});
    } catch (const IntegrityError&) {
      cross_ok = false;
    }
    t.check(cross_ok, [&] { return "j=3 cross-check raised an integrity error"; });
  }
  return t.result();
}

SuiteResult suite_anchor_reindexing(const SuiteContext& ctx) {
  Tally t("anchor_reindexing");
  Rng rng(ctx.seed + 61);
  for (int trial = 0; trial < 4; ++trial) {
    const auto g = rng.positive_sequence(40, 30);
    for (unsigned j = 1; j <= 4; ++j) {
      const unsigned k_max = j <= 2 ? 3 : 2;
      for (unsigned k = 1; k <= k_max; ++k) {
        const auto start = turan_iterate(g, j, k, Anchor::start);
        for (Anchor a : {Anchor::backward, Anchor::centered}) {
          const auto other = turan_iterate(g, j, k, a);
          const Index shift = static_cast<Index>(k) * anchor_reach_back(a, j);
          for (Index i = other.first_index(); i <= other.last_index(); ++i) {
            if (!start.values.contains(i - shift)) continue;
            t.check(other.values.at(i) == start.values.at(i - shift), [&] {
              return "T_" + std::to_string(j) + "^(" + std::to_string(k) + ")[" + to_string(a) + "](" +
                     std::to_string(i) + ") != start value at " + std::to_string(i - shift);
            });
          }
        }
      }
    }
  }
  return t.result();
}

SuiteResult suite_laguerre_sequence_series(const SuiteContext& ctx) {
  Tally t("laguerre_sequence_series");
  Rng rng(ctx.seed + 67);
  std::vector<Sequence> samples{partition_sequence(60)};
  for (int i = 0; i < 4; ++i) samples.push_back(rng.sequence(60, 300));
  for (const auto& g : samples) {
    for (unsigned k = 0; k <= 4; ++k) {
      for (Index n = 0; n <= 50; n += 7) {
        const auto series = laguerre_series(taylor_window(g, n, 2 * k), k);
        t.check(laguerre_at_zero(g, k, n) == series.coeff(0), [&] {
          return "L_" + std::to_string(k) + " at n=" + std::to_string(n) + " differs between forms on " +
                 g.provenance();
        });
      }
    }
  }
  return t.result();
}

SuiteResult suite_laguerre_expansion(const SuiteContext& ctx) {
  Tally t("laguerre_expansion");
  Rng rng(ctx.seed + 71);
  for (int i = 0; i < 200; ++i) {
    const auto f = rng.polynomial(static_cast<unsigned>(rng.integer(0, 6)), 30);
    for (long x : {0L, 1L, -2L}) {
      const auto report = laguerre_expansion_check(f, x);
      t.check(report.passed, [&] {
        return "expansion check failed for " + to_text(f) + " at x=" + std::to_string(x) + ": " +
               report.first_mismatch;
      });
    }
  }
  return t.result();
}

SuiteResult suite_laguerre_positivity(const SuiteContext& ctx) {
  Tally t("laguerre_positivity");
  Rng rng(ctx.seed + 73);
  for (int i = 0; i < 40; ++i) {
    std::vector<Rational> roots(static_cast<std::size_t>(rng.integer(1, 6)));
    for (auto& r : roots) r = rng.rational(10, 3);
    const auto f = polynomial_from_roots(roots, rng.nonzero_integer(4));
    for (int s = 0; s < 20; ++s) {
      const Rational x = rng.rational(15, 4);
      for (unsigned k = 0; k <= static_cast<unsigned>(f.degree()); ++k) {
        t.check(sgn(laguerre_poly(f, k)(x)) >= 0, [&] {
          return "L_" + std::to_string(k) + "(" + to_text(f) + ")(" + to_string(x) + ") < 0";
        });
      }
    }
  }
  return t.result();
}

SuiteResult suite_iterated_laguerre_derivative(const SuiteContext& ctx) {
  Tally t("iterated_laguerre_derivative");
  Rng rng(ctx.seed + 79);
  for (unsigned m = 2; m <= 10; ++m) {
    const auto g = pow(Polynomial{1, 1}, m).derivative(2);
    const auto twice = laguerre_poly(laguerre_poly(g, 1), 1);
    for (int s = 0; s < 20; ++s) {
      const Rational x = rng.rational(12, 5);
      t.check(sgn(twice(x)) >= 0, [&] {
        return "L_1^(2) of ((1+x)^" + std::to_string(m) + ")'' negative at " + to_string(x);
      });
    }
  }
  return t.result();
}

SuiteResult suite_iterated_laguerre_closed_form(const SuiteContext& ctx) {
  Tally t("iterated_laguerre_closed_form");
  Rng rng(ctx.seed + 83);
  for (int i = 0; i < 100; ++i) {
    const auto g = rng.sequence(12, 60);
    const Index n = rng.integer(0, 7);
    const Rational series = laguerre_iterate_at_zero(g, 1, 2, n);
    const Rational closed = iterated_laguerre_closed_form(g.window(n, n + 4));
    t.check(series == closed, [&] {
      return "L_1^(2) series route " + to_string(series) + " != closed form " + to_string(closed) + " at n=" +
             std::to_string(n);
    });
  }
  const auto p = partition_sequence(4);
  t.check(sgn(laguerre_iterate_at_zero(p, 1, 2, 0)) == 0, [] { return "L_1^(2)(phi_p)(0) != 0"; });
  return t.result();
}

}  // namespace hypercert::checks
