#include <filesystem>
#include <sstream>

#include "hypercert/checks/oracles.hpp"
#include "hypercert/checks/random.hpp"
#include "hypercert/checks/suites.hpp"
#include "hypercert/error.hpp"
#include "hypercert/polynomial.hpp"
#include "hypercert/rootcert.hpp"
#include "hypercert/sequence.hpp"
#include "hypercert/series.hpp"

namespace hypercert::checks {

namespace {

Polynomial monic(const Polynomial& f) {
  if (f.is_zero()) return f;
  return f * (Rational(1) / f.leading());
}

}  // namespace

SuiteResult suite_partition_oracle(const SuiteContext&) {
  Tally t("partition_oracle");
  const auto p = partition_sequence(100);
  for (unsigned n = 0; n <= 20; ++n) {
    const Integer brute = count_partitions_enumerated(n);
    t.check(p.at(n) == Rational(brute), [&] {
      return "p(" + std::to_string(n) + ") = " + to_string(p.at(n)) + ", enumeration gives " + to_string(brute);
    });
  }
  for (unsigned n = 0; n <= 100; ++n) {
    const Integer dp = count_partitions_dp(n);
    t.check(p.at(n) == Rational(dp), [&] {
      return "p(" + std::to_string(n) + ") = " + to_string(p.at(n)) + ", dp gives " + to_string(dp);
    });
  }
  return t.result();
}

SuiteResult suite_plane_partition_oracle(const SuiteContext&) {
  Tally t("plane_partition_oracle");
  const auto pp = plane_partition_sequence(6);
  for (unsigned n = 0; n <= 6; ++n) {
    const Integer brute = count_plane_partitions_enumerated(n);
    t.check(pp.at(n) == Rational(brute), [&] {
      return "pp(" + std::to_string(n) + ") = " + to_string(pp.at(n)) + ", enumeration gives " + to_string(brute);
    });
  }
  return t.result();
}

SuiteResult suite_sequence_roundtrip(const SuiteContext& ctx) {
  Tally t("sequence_roundtrip");
  Rng rng(ctx.seed + 3);
  std::vector<Sequence> samples{partition_sequence(200), plane_partition_sequence(50),
                                builtin_sequence(parse_builtin("signflip"), 10)};
  for (int i = 0; i < 60; ++i) {
    std::vector<Rational> terms(static_cast<std::size_t>(rng.integer(1, 30)));
    for (auto& q : terms) q = rng.rational(1000000, i % 2 == 0 ? 1 : 97);
    samples.emplace_back(std::move(terms), rng.integer(0, 7), "random");
  }

  const auto dir = std::filesystem::temp_directory_path() /
                   ("hypercert-roundtrip-" + std::to_string(ctx.seed) + "-" + std::to_string(rng.integer(0, 1 << 30)));
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    std::istringstream in(format_sequence(s));
    const Sequence back = parse_sequence(in, s.provenance());
    t.check(back == s, [&] { return "in-memory round trip changed sample " + std::to_string(i); });

    const auto path = dir / ("s" + std::to_string(i) + ".seq");
    save_sequence(path, s);
    const Sequence loaded = load_sequence(path);
    t.check(loaded == s, [&] { return "file round trip changed sample " + std::to_string(i); });
  }
  std::filesystem::remove_all(dir);
  return t.result();
}

SuiteResult suite_generator_determinism(const SuiteContext&) {
  Tally t("generator_determinism");
  t.check(partition_sequence(400) == partition_sequence(400), [] { return "partition_sequence differs"; });
  t.check(plane_partition_sequence(120) == plane_partition_sequence(120),
          [] { return "plane_partition_sequence differs"; });
  for (const char* name : {"constant", "signflip", "binomial_row(7)", "geometric(3/2)"}) {
    const auto spec = parse_builtin(name);
    t.check(builtin_sequence(spec, 40) == builtin_sequence(spec, 40),
            [&] { return std::string("builtin ") + name + " differs"; });
  }
  return t.result();
}

SuiteResult suite_product_rules(const SuiteContext& ctx) {
  Tally t("product_rules");
  Rng rng(ctx.seed + 11);
  for (int i = 0; i < 200; ++i) {
    const auto f = rng.polynomial(static_cast<unsigned>(rng.integer(0, 8)), 50);
    const auto g = rng.polynomial(static_cast<unsigned>(rng.integer(0, 8)), 50);
    const auto fg = f * g;
    t.check(fg.degree() == f.degree() + g.degree(), [&] {
      return "deg(fg) != deg f + deg g for f=" + to_text(f) + ", g=" + to_text(g);
    });
    t.check(fg.derivative() == f.derivative() * g + f * g.derivative(),
            [&] { return "Leibniz rule fails for f=" + to_text(f) + ", g=" + to_text(g); });
  }
  return t.result();
}

SuiteResult suite_squarefree_part(const SuiteContext& ctx) {
  Tally t("squarefree_part");
  Rng rng(ctx.seed + 13);
  for (int i = 0; i < 150; ++i) {
    const auto distinct = rng.distinct_rationals(static_cast<std::size_t>(rng.integer(1, 4)), 9, 3);
    std::vector<Rational> roots;
    for (const auto& r : distinct) {
      for (long m = rng.integer(1, 3); m > 0; --m) roots.push_back(r);
    }
    Polynomial f = polynomial_from_roots(roots, rng.nonzero_integer(7));
    Polynomial expected = polynomial_from_roots(distinct);
    if (rng.coin()) {
      const Polynomial quad{rng.integer(1, 9), 0, 1};  // x^2 + c, c > 0
      f = f * quad;
      expected = expected * quad;
    }
    const auto sqf = squarefree_part(f);
    t.check(divide(f, sqf).remainder.is_zero(),
            [&] { return "squarefree part does not divide " + to_text(f); });
    t.check(gcd(sqf, sqf.derivative()).degree() == 0,
            [&] { return "squarefree part of " + to_text(f) + " is not square-free"; });
    t.check(monic(sqf) == monic(expected), [&] {
      return "squarefree part of " + to_text(f) + " is " + to_text(sqf) + ", expected " + to_text(expected);
    });
    t.check(monic(gcd(f, f.derivative())) == euclid_gcd(f, f.derivative()),
            [&] { return "gcd(f, f') disagrees with Euclid for " + to_text(f); });
  }
  for (int i = 0; i < 100; ++i) {
    const auto common = rng.polynomial(static_cast<unsigned>(rng.integer(0, 3)), 6);
    const auto a = common * rng.polynomial(static_cast<unsigned>(rng.integer(0, 4)), 6);
    const auto b = common * rng.polynomial(static_cast<unsigned>(rng.integer(0, 4)), 6);
    t.check(monic(gcd(a, b)) == euclid_gcd(a, b),
            [&] { return "gcd disagrees with Euclid for " + to_text(a) + " and " + to_text(b); });
  }
  return t.result();
}

SuiteResult suite_taylor_window(const SuiteContext& ctx) {
  Tally t("taylor_window");
  Rng rng(ctx.seed + 17);
  for (int i = 0; i < 100; ++i) {
    const auto g = rng.sequence(40, 1000);
    const Index n = rng.integer(0, 20);
    const auto order = static_cast<std::size_t>(rng.integer(0, 19));
    const auto s = taylor_window(g, n, order);
    for (std::size_t k = 0; k <= order; ++k) {
      t.check(s.coeff(k) * Rational(factorial(static_cast<unsigned>(k))) == g.at(n + static_cast<Index>(k)),
              [&] { return "k! a_k != gamma_{n+k} at n=" + std::to_string(n) + ", k=" + std::to_string(k); });
    }
  }
  return t.result();
}

SuiteResult suite_sturm_hankel_agreement(const SuiteContext& ctx) {
  Tally t("sturm_hankel_agreement");
  Rng rng(ctx.seed + 19);
  constexpr int kCases = 1000;
  for (int i = 0; i < kCases; ++i) {
    Polynomial f;
    std::optional<bool> known;
    std::optional<std::size_t> known_distinct;
    switch (i % 3) {
      case 0: {  // simple real roots
        const auto roots = rng.distinct_rationals(static_cast<std::size_t>(rng.integer(1, 6)), 12, 4);
        f = polynomial_from_roots(roots, rng.rational(9, 3) + (rng.coin() ? 10 : -10));
        known = true;
        known_distinct = roots.size();
        break;
      }
      case 1: {  // a conjugate pair of non-real roots
        const auto roots = rng.distinct_rationals(static_cast<std::size_t>(rng.integer(0, 4)), 12, 4);
        const Rational a = rng.rational(6, 2);
        const Rational b = rng.positive_rational(6, 3);
        const Polynomial quad(std::vector<Rational>{a * a + b, -2 * a, 1});
        f = polynomial_from_roots(roots, rng.nonzero_integer(5)) * quad;
        known = false;
        known_distinct = roots.size();
        break;
      }
      default:
        f = rng.polynomial(static_cast<unsigned>(rng.integer(1, 6)), 20);
        break;
    }
    const auto sturm = certify_hyperbolic(f, CertMethod::sturm);
    const auto hankel = certify_hyperbolic(f, CertMethod::hankel);
    t.check(sturm.hyperbolic == hankel.hyperbolic,
            [&] { return "sturm and hankel disagree on " + to_text(f); });
    if (known) {
      t.check(sturm.hyperbolic == *known, [&] { return "sturm verdict wrong for " + to_text(f); });
      t.check(sturm.distinct_real_roots == *known_distinct,
              [&] { return "sturm root count wrong for " + to_text(f); });
    }
    if (i % 3 == 0) {
      t.check(hankel.hankel == HankelVerdict::positive_definite,
              [&] { return "hankel not positive definite on simple real roots " + to_text(f); });
    }
    bool both_ok = true;
    try {
      (void)certify_hyperbolic(f, CertMethod::both);
    } catch (const IntegrityError&) {
      both_ok = false;
    }
    t.check(both_ok, [&] { return "method=both raised an integrity error on " + to_text(f); });
  }
  return t.result();
}

SuiteResult suite_hankel_minors_from_roots(const SuiteContext& ctx) {
  Tally t("hankel_minors_from_roots");
  Rng rng(ctx.seed + 23);
  for (int i = 0; i < 200; ++i) {
    const auto d = static_cast<std::size_t>(rng.integer(1, 5));
    std::vector<Rational> roots;
    for (std::size_t k = 0; k < d; ++k) {
      roots.push_back(!roots.empty() && rng.integer(0, 4) == 0 ? roots.back() : rng.rational(8, 3));
    }
    const bool distinct = [&] {
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b)
          if (roots[a] == roots[b]) return false;
      return true;
    }();
    const auto f = polynomial_from_roots(roots, rng.rational(5, 2) + 6);
    const auto minors = hankel_minors(f);
    const auto oracle = hankel_minors_from_roots(roots);
    t.check(minors == oracle, [&] { return "hankel minors differ from the root oracle for " + to_text(f); });
    for (std::size_t j = 0; j < minors.size(); ++j) {
      t.check(sgn(minors[j]) >= 0, [&] { return "negative D_j for real-rooted " + to_text(f); });
      if (distinct) t.check(sgn(minors[j]) > 0, [&] { return "zero D_j with distinct roots " + to_text(f); });
    }
  }
  return t.result();
}

SuiteResult suite_hankel_scaling(const SuiteContext& ctx) {
  Tally t("hankel_scaling");
  Rng rng(ctx.seed + 29);
  for (int i = 0; i < 200; ++i) {
    const auto f = rng.polynomial(static_cast<unsigned>(rng.integer(1, 6)), 30);
    Rational c = rng.rational(20, 7);
    if (sgn(c) == 0) c = -3;
    t.check(hankel_minors(c * f) == hankel_minors(f),
            [&] { return "minors change under scaling by " + to_string(c) + " for " + to_text(f); });
  }
  return t.result();
}

SuiteResult suite_d2_coefficient_form(const SuiteContext& ctx) {
  Tally t("d2_coefficient_form");
  Rng rng(ctx.seed + 31);
  for (int i = 0; i < 300; ++i) {
    const auto d = static_cast<unsigned>(rng.integer(2, 6));
    const auto f = rng.polynomial(d, 25);
    const auto& bd = f.coeff(d);
    const auto& bd1 = f.coeff(d - 1);
    const auto& bd2 = f.coeff(d - 2);
    const Rational form = Rational(d - 1) * bd1 * bd1 - Rational(2 * d) * bd * bd2;
    const auto minors = hankel_minors(f);
    t.check(sgn(minors[1]) == sgn(form), [&] { return "sign(D_2) disagrees with coefficient form for " + to_text(f); });
  }
  return t.result();
}

}  // namespace hypercert::checks
