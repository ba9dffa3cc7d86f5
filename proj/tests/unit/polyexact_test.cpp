#include <doctest.h>

#include "helpers.hpp"
#include "hypercert/checks/oracles.hpp"
#include "hypercert/checks/random.hpp"
#include "hypercert/error.hpp"
#include "hypercert/polynomial.hpp"
#include "hypercert/series.hpp"

using namespace hypercert;
using namespace hypercert::testing;

TEST_SUITE("polyexact") {
  TEST_CASE("arithmetic and evaluation") {
    const Polynomial f{1, 2, 1};
    CHECK(f == Polynomial{1, 1} * Polynomial{1, 1});
    CHECK(f(q("-1")) == 0);
    CHECK(f(q("1/2")) == q("9/4"));
    CHECK(f.derivative() == Polynomial{2, 2});
    CHECK(f.derivative(3).is_zero());
    CHECK((f - f).is_zero());
    CHECK((f - f).degree() == Polynomial::kZeroDegree);
    CHECK(pow(Polynomial{1, 1}, 3) == Polynomial{1, 3, 3, 1});
  }

  TEST_CASE("division") {
    const Polynomial a{-1, 0, 0, 1};
    const Polynomial b{-1, 1};
    const auto [quot, rem] = divide(a, b);
    CHECK(quot == Polynomial{1, 1, 1});
    CHECK(rem.is_zero());
    CHECK_THROWS_AS(divide(a, Polynomial{}), ContractError);
  }

  TEST_CASE("square-free part") {
    CHECK(squarefree_part(Polynomial{1, 2, 1}) == Polynomial{1, 1});
    CHECK(squarefree_part(Polynomial{0, -1, 0, 1}) == Polynomial{0, -1, 0, 1});
    // (x^2+1)(x-2)^2 -> (x^2+1)(x-2), up to a constant.
    const Polynomial f = Polynomial{1, 0, 1} * pow(Polynomial{-2, 1}, 2);
    const Polynomial want = Polynomial{1, 0, 1} * Polynomial{-2, 1};
    const Polynomial got = squarefree_part(f);
    CHECK(got * want.leading() == want * got.leading());
  }

  TEST_CASE("gcd against the schoolbook oracle") {
    checks::Rng rng(7);
    for (int t = 0; t < 100; ++t) {
      const Polynomial common = rng.polynomial(static_cast<unsigned>(rng.integer(0, 2)), 5);
      const Polynomial a = common * rng.polynomial(static_cast<unsigned>(rng.integer(0, 3)), 5);
      const Polynomial b = common * rng.polynomial(static_cast<unsigned>(rng.integer(0, 3)), 5);
      const Polynomial g = gcd(a, b);
      const Polynomial oracle = checks::euclid_gcd(a, b);
      CHECK(g * oracle.leading() == oracle * g.leading());
    }
  }

  TEST_CASE("text round trip") {
    const Polynomial f = parse_polynomial("1958 4872 3010");
    CHECK(f == Polynomial{1958, 4872, 3010});
    CHECK(parse_polynomial(to_text(f)) == f);
    CHECK(parse_polynomial("1/2 0 -3/4").coeff(2) == q("-3/4"));
    CHECK_THROWS(parse_polynomial("1 x 2"));
  }

  TEST_CASE("taylor windows") {
    const auto& p = partitions(10);
    const auto a = taylor_window(p, 0, 3);
    CHECK(a.coeff(0) == 1);
    CHECK(a.coeff(1) == 1);
    CHECK(a.coeff(2) == 1);
    CHECK(a.coeff(3) == q("1/2"));
    const auto c = taylor_window(builtin_sequence(parse_builtin("constant"), 5), 0, 2);
    CHECK(c.coeff(2) == q("1/2"));
    const auto single = taylor_window(p, 5, 0);
    CHECK(single.order() == 0);
    CHECK(single.coeff(0) == 7);
    CHECK_THROWS_AS(taylor_window(partition_sequence(10), 8, 5), RangeError);
  }

  TEST_CASE("series algebra") {
    const TruncatedSeries e({1, 1, q("1/2")});
    CHECK(derivative(e) == TruncatedSeries({1, 1}));
    CHECK(product(TruncatedSeries({1, 1}), TruncatedSeries({1, -1})) == TruncatedSeries({1, 0}));
    CHECK(series_algebra(SeriesOp::derivative, e) == derivative(e));
  }
}
