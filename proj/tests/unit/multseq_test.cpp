#include <doctest.h>

#include "helpers.hpp"
#include "hypercert/error.hpp"
#include "hypercert/multseq.hpp"

using namespace hypercert;
using namespace hypercert::testing;

TEST_SUITE("multseq") {
  TEST_CASE("gamma operator") {
    const auto one = builtin_sequence(parse_builtin("constant"), 10);
    CHECK(gamma_apply(one, 0, Polynomial{3, -1, 4}) == Polynomial{3, -1, 4});
    CHECK(gamma_apply(partitions(40), 25, Polynomial{1, 2, 1}) == Polynomial{1958, 4872, 3010});
    const auto flip = builtin_sequence(parse_builtin("signflip"), 10);
    CHECK(gamma_apply(flip, 0, Polynomial{1, 1, 1}) == Polynomial{1, -1, 1});
  }

  TEST_CASE("schur-szego composition") {
    CHECK(schur_szego(Polynomial{1, 2, 1}, Polynomial{1, 2, 1}) == Polynomial{1, 2, 1});
    CHECK(schur_szego(Polynomial{1, 0, -1}, Polynomial{1, 2, 1}) == Polynomial{1, 0, -1});
    CHECK_THROWS_AS(schur_szego(Polynomial{1, 1}, Polynomial{1, 2, 1}), ContractError);
  }

  TEST_CASE("hadamard products") {
    const auto& p = partitions(30);
    const auto p30 = partition_sequence(30);
    CHECK(hadamard_product(p30, builtin_sequence(parse_builtin("constant"), 30)).terms().size() == 31);
    CHECK(hadamard_product(p30, builtin_sequence(parse_builtin("constant"), 30)).terms()[30] == p.at(30));
    const auto alt = hadamard_product(p30, builtin_sequence(parse_builtin("signflip"), 30));
    for (Index i = 0; i <= 30; ++i) CHECK(alt.at(i) == (i % 2 == 0 ? p.at(i) : -p.at(i)));
    const auto sq = hadamard_product(p30, p30);
    for (Index i = 0; i <= 30; ++i) CHECK(sq.at(i) == p.at(i) * p.at(i));
    CHECK_THROWS_AS(hadamard_product(p30, seq_of({1, 2}, 40)), ContractError);
  }

  TEST_CASE("multiplier type names") {
    CHECK(parse_multiplier_type("I") == MultiplierType::type_one);
    CHECK(parse_multiplier_type("II") == MultiplierType::type_two);
    CHECK(to_string(MultiplierType::type_two) == "II");
    CHECK_THROWS_AS(parse_multiplier_type("III"), ContractError);
  }

  TEST_CASE("witness inputs") {
    const auto a = witness_inputs(4, 50, 11, MultiplierType::type_one);
    const auto b = witness_inputs(4, 50, 11, MultiplierType::type_one);
    CHECK(a == b);
    CHECK(a.front() == Polynomial{1, 4, 6, 4, 1});
    for (const auto& f : a) {
      CHECK(f.degree() >= 1);
      CHECK(f.degree() <= 4);
    }
    for (const auto& f : witness_inputs(4, 50, 11, MultiplierType::type_two)) {
      const auto pattern = root_sign_profile(f).pattern;
      CHECK((pattern == SignPattern::all_nonpositive || pattern == SignPattern::all_nonnegative));
    }
  }

  TEST_CASE("witness test") {
    const auto& p = partitions(200);
    CHECK(order_d_witness_test(p, 3, 94, 200, 1).verdict == WitnessReport::Verdict::no_counterexample);
    const auto fail = order_d_witness_test(p, 3, 50, 200, 1);
    CHECK(fail.verdict == WitnessReport::Verdict::counterexample_found);
    REQUIRE_FALSE(fail.failures.empty());
    CHECK(fail.failures.front().trial == 0);
    CHECK(fail.failures.front().output == gamma_apply(p, 50, Polynomial{1, 3, 3, 1}));
    const auto one = builtin_sequence(parse_builtin("constant"), 10);
    CHECK(order_d_witness_test(one, 5, 0, 200, 1).verdict == WitnessReport::Verdict::no_counterexample);
  }

  TEST_CASE("window structure") {
    const auto& p = partitions(100);
    const auto clean = window_structure_check(p, 0, 100);
    CHECK(clean.pattern == WindowPattern::constant_sign);
    CHECK(clean.clean());

    const auto gap = window_structure_check(seq_of({1, 0, 1}), 0, 2);
    CHECK(gap.interior_zeros == std::vector<Index>{1});
    CHECK_FALSE(gap.clean());

    const auto alt = window_structure_check(seq_of({1, -2, 4, -8}), 0, 3);
    CHECK(alt.pattern == WindowPattern::alternating_sign);
    CHECK(alt.clean());

    const auto mixed = window_structure_check(seq_of({1, 1, -1, 1}), 0, 3);
    CHECK(mixed.pattern == WindowPattern::mixed);
    CHECK(mixed.sign_breaks.size() == 1);

    CHECK(window_structure_check(seq_of({0, 0}), 0, 1).pattern == WindowPattern::all_zero);
  }
}
