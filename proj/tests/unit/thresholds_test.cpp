#include <doctest.h>

#include <nlohmann/json.hpp>

#include "helpers.hpp"
#include "hypercert/error.hpp"
#include "hypercert/thresholds.hpp"

using namespace hypercert;
using namespace hypercert::testing;

TEST_SUITE("thresholds") {
  TEST_CASE("predicate defaults") {
    const auto t = PredicateSpec::turan(2, 1);
    CHECK(t.anchor == Anchor::centered);
    CHECK(t.strict == Strictness::gt);
    CHECK(PredicateSpec::laguerre_zero(3).strict == Strictness::ge);
    CHECK(t.to_string() == "turan(j=2,k=1,anchor=centered,strict=gt)");
  }

  TEST_CASE("required indices") {
    CHECK(required_last_index(PredicateSpec::turan(3, 2, Anchor::start), 100) == 106);
    CHECK(required_last_index(PredicateSpec::turan(3, 2, Anchor::backward), 100) == 100);
    CHECK(required_last_index(PredicateSpec::laguerre_zero(4), 100) == 108);
    CHECK(required_last_index(PredicateSpec::jensen_hyperbolic(5), 100) == 105);
    CHECK(predicate_domain_min(PredicateSpec::turan(2, 3, Anchor::centered), 0) == 3);
  }

  TEST_CASE("single searches") {
    const auto& p = partitions(1100);
    const auto t2 = threshold_search(PredicateSpec::turan(2, 1, Anchor::centered, Strictness::gt), p, 1000);
    REQUIRE(t2.onset);
    CHECK(*t2.onset == 26);
    REQUIRE(t2.failure_witness);
    CHECK(t2.failure_witness->index == 25);
    CHECK(t2.failure_witness->value == Rational(-2936));
    CHECK(t2.status == ThresholdReport::Status::verified_window);

    const auto l1 = threshold_search(PredicateSpec::laguerre_zero(1, Strictness::ge), p, 500);
    CHECK(l1.onset == Index{25});
    const auto j2 = threshold_search(PredicateSpec::jensen_hyperbolic(2), p, 200);
    CHECK(j2.onset == Index{25});
    const auto t1 = threshold_search(PredicateSpec::turan(1, 1, Anchor::backward, Strictness::gt), p, 100);
    CHECK(t1.onset == Index{2});
    const auto t3 = threshold_search(PredicateSpec::turan(3, 1), p, 300);
    CHECK(t3.onset == Index{94});
  }

  TEST_CASE("statuses") {
    const auto one = builtin_sequence(parse_builtin("constant"), 100);
    const auto all = threshold_search(PredicateSpec::jensen_hyperbolic(3), one, 50);
    CHECK(all.status == ThresholdReport::Status::holds_from_start);
    CHECK_FALSE(all.failure_witness);

    const auto halving = builtin_sequence(parse_builtin("geometric(1/2)"), 100);
    const auto none = threshold_search(PredicateSpec::turan(1, 1), halving, 50);
    CHECK(none.status == ThresholdReport::Status::no_onset_found);
    CHECK_FALSE(none.onset);
    REQUIRE(none.failure_witness);
    CHECK(none.failure_witness->index == 50);
  }

  TEST_CASE("contract errors") {
    const auto p = partition_sequence(100);
    try {
      threshold_search(PredicateSpec::laguerre_zero(3), p, 100);
      FAIL("expected RangeError");
    } catch (const RangeError& e) {
      CHECK(e.required_last_index() == std::optional<std::int64_t>(106));
    }
    CHECK_THROWS_AS(threshold_search(PredicateSpec::turan(2, 3), p, 1), ContractError);
  }

  TEST_CASE("level chain equals individual searches") {
    const auto& p = partitions(1100);
    const auto levels = turan_level_thresholds(p, 2, 3, Anchor::centered, Strictness::gt, 700);
    REQUIRE(levels.size() == 3);
    for (unsigned k = 1; k <= 3; ++k) {
      const auto single = threshold_search(PredicateSpec::turan(2, k), p, 700);
      CHECK(levels[k - 1].onset == single.onset);
    }
  }

  TEST_CASE("reference tables") {
    CHECK(table1_reference(1, 1) == Index{2});
    CHECK(table1_reference(4, 4) == Index{3005});
    CHECK_FALSE(table1_reference(5, 1));
    CHECK(table2_reference(1) == Index{25});
    CHECK(table2_reference(2) == Index{184});
    CHECK(table2_reference(5) == Index{1923});
    CHECK(table2_reference(10) == Index{10382});
    CHECK_FALSE(table2_reference(11));
  }

  TEST_CASE("low rows of the first table") {
    const auto& p = partitions(1100);
    const auto t = reproduce_table1(2, 4, 1500, partition_sequence(table1_required_last_index(2, 4, 1500)));
    const std::vector<std::vector<Index>> want{{2, 8, 26, 68}, {26, 222, 640, 1292}};
    for (unsigned j = 1; j <= 2; ++j) {
      for (unsigned k = 1; k <= 4; ++k) CHECK(t.cell(j, k).report.onset == want[j - 1][k - 1]);
    }
    CHECK(t.all_matched());
    CHECK(p.at(0) == 1);
  }

  TEST_CASE("start anchor row three") {
    const auto g = partition_sequence(table1_required_last_index(3, 2, 700));
    const auto t = reproduce_table1(3, 2, 700, g);
    const auto& c = t.cell(3, 2);
    CHECK(c.report.onset == Index{522});
    CHECK(c.anchor_onsets.at(Anchor::start) == Index{522});
    CHECK(c.matching_anchors == std::vector<Anchor>{Anchor::start});
    CHECK(t.cell(3, 1).report.onset == Index{94});
  }

  TEST_CASE("first rows of the second table") {
    const auto g = partition_sequence(table2_required_last_index(3, 800));
    const auto t = reproduce_table2(3, 800, g);
    CHECK(t.all_matched());
    CHECK(t.rows[1].onset == Index{184});
    CHECK(to_csv(t).rfind("j,strict,onset,reference,match,status,witness_index,witness_value\n", 0) == 0);
    CHECK(to_json(t).is_object());
  }

  TEST_CASE("asymptotic ratios") {
    CHECK_FALSE(asymptotic_ratio(1, 1, 2));
    const auto r = asymptotic_ratio(2, 2, 222);
    REQUIRE(r);
    CHECK(*r == doctest::Approx(11.876).epsilon(1e-3));
  }
}
