#include <doctest.h>

#include "helpers.hpp"
#include "hypercert/checks/oracles.hpp"
#include "hypercert/error.hpp"
#include "hypercert/jensen.hpp"

using namespace hypercert;
using namespace hypercert::testing;

TEST_SUITE("jensen") {
  TEST_CASE("jensen polynomials") {
    const auto one = builtin_sequence(parse_builtin("constant"), 1100);
    CHECK(jensen_poly(one, 3, 0) == Polynomial{1, 3, 3, 1});
    CHECK(jensen_poly(partitions(30), 2, 25) == Polynomial{1958, 4872, 3010});
    CHECK_THROWS_AS(jensen_poly(partitions(30), 0, 0), ContractError);
    CHECK_THROWS_AS(jensen_poly(partition_sequence(10), 3, 9), RangeError);
  }

  TEST_CASE("appell polynomials") {
    const auto one = builtin_sequence(parse_builtin("constant"), 10);
    CHECK(appell_poly(one, 2, 0) == Polynomial{1, 2, 1} * q("1/2"));
    const auto& p = partitions(40);
    for (unsigned d = 2; d <= 6; ++d) {
      for (Index n = 0; n <= 20; ++n) CHECK(appell_poly(p, d, n).derivative() == appell_poly(p, d - 1, n));
    }
  }

  TEST_CASE("derivative lowers degree and shifts") {
    const auto& p = partitions(40);
    for (unsigned d = 2; d <= 8; ++d) {
      for (Index n = 0; n <= 20; ++n) {
        CHECK(jensen_poly(p, d, n).derivative() == Rational(d) * jensen_poly(p, d - 1, n + 1));
      }
    }
  }

  TEST_CASE("window reports") {
    const auto& p = partitions(200);
    const auto r3 = jensen_window_report(p, 3, 90, 100);
    REQUIRE(r3.verdicts.size() == 11);
    // Below 94 the cubic alternates: even shifts are real-rooted, odd are not.
    for (const auto& v : r3.verdicts) CHECK(v.hyperbolic == (v.shift >= 94 || v.shift % 2 == 0));
    REQUIRE(r3.onset);
    CHECK(*r3.onset == 94);

    const auto r2 = jensen_window_report(p, 2, 20, 30);
    REQUIRE(r2.onset);
    CHECK(*r2.onset == 25);

    const auto one = builtin_sequence(parse_builtin("constant"), 40);
    for (unsigned d : {1u, 4u, 7u}) {
      const auto r = jensen_window_report(one, d, 0, 20);
      CHECK(r.onset == Index{0});
    }
    CHECK(to_csv(r2).rfind("shift,hyperbolic,sign_profile\n", 0) == 0);
  }

  TEST_CASE("scaled evaluation approaches the exponential") {
    const auto one = builtin_sequence(parse_builtin("constant"), 1000);
    const Rational at100 = scaled_jensen_eval(one, 100, 0, 1);
    const Rational at1000 = scaled_jensen_eval(one, 1000, 0, 1);
    CHECK(at100 == pow(Rational(101, 100), 100));
    CHECK(at1000 == pow(Rational(1001, 1000), 1000));
    const Rational e_low = checks::e_partial_sum(20);
    CHECK(at100 < at1000);
    CHECK(at1000 < e_low);
    CHECK(scaled_jensen_eval(partitions(60), 50, 0, 0) == 1);
  }
}
