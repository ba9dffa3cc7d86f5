#include <doctest.h>

#include "helpers.hpp"
#include "hypercert/error.hpp"
#include "hypercert/turan.hpp"

using namespace hypercert;
using namespace hypercert::testing;

TEST_SUITE("turan") {
  TEST_CASE("anchors") {
    CHECK(default_anchor(1) == Anchor::backward);
    CHECK(default_anchor(2) == Anchor::centered);
    CHECK(default_anchor(3) == Anchor::start);
    CHECK(default_anchor(9) == Anchor::start);
    CHECK(anchor_reach_back(Anchor::backward, 4) == 4);
    CHECK(anchor_reach_back(Anchor::centered, 4) == 1);
    CHECK(anchor_reach_back(Anchor::start, 4) == 0);
    CHECK(parse_anchor("centered") == Anchor::centered);
    CHECK_THROWS_AS(parse_anchor("middle"), ContractError);
  }

  TEST_CASE("order one and two values") {
    const auto& p = partitions(200);
    CHECK(turan_value(p, 2, 26, Anchor::centered) == 40516);
    CHECK(turan_value(p, 2, 25, Anchor::centered) == -2936);
    CHECK(turan_value(p, 1, 2, Anchor::backward) == 1);
    CHECK(turan_value(p, 1, 1, Anchor::backward) == 0);
  }

  TEST_CASE("order three onset under the start anchor") {
    const auto& p = partitions(200);
    CHECK(sign(turan_value(p, 3, 94, Anchor::start)) > 0);
    CHECK(sign(turan_value(p, 3, 93, Anchor::start)) <= 0);
  }

  TEST_CASE("order three routes differ by the factor 27") {
    const auto& p = partitions(200);
    for (Index i = 0; i <= 150; i += 7) {
      const auto w = p.window(i, i + 3);
      CHECK(turan_hankel_route(w) == 27 * turan_closed_form3(w));
    }
  }

  TEST_CASE("quartic discriminant equals the hankel route") {
    const auto& p = partitions(200);
    for (Index i = 0; i <= 150; i += 5) {
      const auto w = p.window(i, i + 4);
      CHECK(turan_quartic_discriminant(w) == turan_hankel_route(w));
    }
    const std::vector<Rational> zero_tail{3, q("-1/2"), 2, 7, 0};
    CHECK(turan_quartic_discriminant(zero_tail) == turan_hankel_route(zero_tail));
  }

  TEST_CASE("iterates") {
    const auto& p = partitions(200);
    const auto d2 = turan_iterate(p, 1, 2, Anchor::backward);
    CHECK(d2.values.at(8) == 3);
    CHECK(d2.values.at(7) == 0);
    CHECK(d2.first_index() == 2);

    const auto binom = builtin_sequence(parse_builtin("binomial_row(6)"), 6);
    const auto three = turan_iterate(binom, 2, 3, Anchor::centered);
    for (const auto& v : three.values.terms()) CHECK(sign(v) >= 0);

    const auto short_seq = partition_sequence(5);
    CHECK_THROWS_AS(turan_iterate(short_seq, 3, 3, Anchor::start), RangeError);
  }

  TEST_CASE("last_needed truncates without changing values") {
    const auto& p = partitions(300);
    const auto full = turan_iterate(p, 2, 3, Anchor::centered);
    const auto cut = turan_iterate(p, 2, 3, Anchor::centered, WorkerPool::serial(), 100);
    CHECK(cut.last_index() == 100);
    for (Index i = cut.first_index(); i <= 100; ++i) CHECK(cut.values.at(i) == full.values.at(i));
  }

  TEST_CASE("parallel and serial agree") {
    const auto& p = partitions(300);
    const WorkerPool four(4);
    CHECK(turan_iterate(p, 4, 2, Anchor::start, four).values == turan_iterate(p, 4, 2, Anchor::start).values);
  }

  TEST_CASE("csv") {
    const auto it = turan_iterate(partitions(20), 1, 1, Anchor::backward, WorkerPool::serial(), 3);
    CHECK(to_csv(it) == "index,value,sign\n1,0,0\n2,1,1\n3,1,1\n");
  }
}
