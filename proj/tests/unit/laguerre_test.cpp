#include <doctest.h>

#include "helpers.hpp"
#include "hypercert/checks/oracles.hpp"
#include "hypercert/error.hpp"
#include "hypercert/laguerre.hpp"
#include "hypercert/series.hpp"

using namespace hypercert;
using namespace hypercert::testing;

TEST_SUITE("laguerre") {
  TEST_CASE("values at zero") {
    const auto& p = partitions(100);
    CHECK(laguerre_at_zero(p, 1, 24) == -2936);
    CHECK(laguerre_at_zero(p, 1, 25) == 40516);
    CHECK(laguerre_at_zero(p, 0, 10) == 1764);
  }

  TEST_CASE("series form matches the sequence form") {
    const auto& p = partitions(100);
    for (unsigned k = 0; k <= 4; ++k) {
      for (Index n = 0; n <= 40; n += 3) {
        const auto s = taylor_window(p, n, 2 * k);
        CHECK(laguerre_series(s, k).coeff(0) == laguerre_at_zero(p, k, n));
      }
    }
  }

  TEST_CASE("operator on a polynomial") {
    const Polynomial f{1, 2, 1};
    CHECK(laguerre_poly(f, 1) == Polynomial{2, 4, 2});
    CHECK(laguerre_poly(f, 0) == f * f);
    const TruncatedSeries s({1, 2, 1, 0, 0});
    CHECK(laguerre_series(s, 1) == TruncatedSeries({2, 4, 2}));
    CHECK_THROWS_AS(laguerre_series(TruncatedSeries({1, 2, 1}), 2), ContractError);
  }

  TEST_CASE("iterated operator") {
    const auto& p = partitions(100);
    CHECK(laguerre_iterate_at_zero(p, 1, 2, 0) == 0);
    for (Index n = 0; n <= 40; ++n) {
      CHECK(laguerre_iterate_at_zero(p, 1, 2, n) == checks::iterated_laguerre_closed_form(p.window(n, n + 4)));
      CHECK(laguerre_iterate_at_zero(p, 3, 1, n) == laguerre_at_zero(p, 3, n));
    }
    CHECK_THROWS_AS(laguerre_iterate_at_zero(partition_sequence(100), 1, 2, 97), RangeError);
  }

  TEST_CASE("expansion identity") {
    const auto lin = laguerre_expansion_check(Polynomial{1, 1}, q("3/7"));
    CHECK(lin.passed);
    REQUIRE(lin.even_coefficients.size() >= 2);
    CHECK(lin.even_coefficients[0] == pow(q("10/7"), 2));
    CHECK(lin.even_coefficients[1] == 1);
    for (std::size_t k = 2; k < lin.even_coefficients.size(); ++k) CHECK(lin.even_coefficients[k] == 0);

    const auto sq = laguerre_expansion_check(Polynomial{0, 0, 1}, 1);
    CHECK(sq.passed);
    REQUIRE(sq.even_coefficients.size() >= 3);
    CHECK(sq.even_coefficients[0] == 1);
    CHECK(sq.even_coefficients[1] == 2);
    CHECK(sq.even_coefficients[2] == 1);
  }

  TEST_CASE("csv") {
    const std::vector<LaguerreValue> v{{40516, 1, 25, LaguerreValue::Source::sequence_form}};
    CHECK(to_csv(v) == "n,k,value,sign\n25,1,40516,1\n");
  }
}
