#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "helpers.hpp"
#include "hypercert/checks/oracles.hpp"
#include "hypercert/error.hpp"

using namespace hypercert;
using namespace hypercert::testing;

TEST_SUITE("seqcore") {
  TEST_CASE("partition values") {
    const auto p = partition_sequence(100);
    for (Index n = 0; n <= 5; ++n) CHECK(p.at(n) == std::vector<long>{1, 1, 2, 3, 5, 7}[n]);
    CHECK(p.at(25) == 1958);
    CHECK(p.at(100) == Rational(Integer("190569292")));
    CHECK(p.offset() == 0);
    CHECK(p.all_integers());
  }

  TEST_CASE("partitions agree with enumeration and a coin-change table") {
    const auto p = partition_sequence(60);
    for (unsigned n = 0; n <= 20; ++n) CHECK(p.at(n) == Rational(checks::count_partitions_enumerated(n)));
    for (unsigned n = 0; n <= 60; ++n) CHECK(p.at(n) == Rational(checks::count_partitions_dp(n)));
  }

  TEST_CASE("plane partitions") {
    const auto pp = plane_partition_sequence(6);
    const std::vector<long> expected{1, 1, 3, 6, 13, 24};
    for (Index n = 0; n <= 5; ++n) CHECK(pp.at(n) == expected[n]);
    for (unsigned n = 0; n <= 6; ++n) CHECK(pp.at(n) == Rational(checks::count_plane_partitions_enumerated(n)));
    CHECK(sigma2(4) == 21);
    CHECK(sigma2(1) == 1);
    CHECK(sigma2(2) == 5);
  }

  TEST_CASE("builtins") {
    const auto c = builtin_sequence(parse_builtin("constant"), 3);
    for (Index i = 0; i <= 3; ++i) CHECK(c.at(i) == 1);
    const auto b = builtin_sequence(parse_builtin("binomial_row(2)"), 3);
    CHECK(b.at(0) == 1);
    CHECK(b.at(1) == 2);
    CHECK(b.at(2) == 1);
    CHECK(b.at(3) == 0);
    const auto g = builtin_sequence(parse_builtin("geometric(2)"), 3);
    CHECK(g.at(3) == 8);
    const auto s = builtin_sequence(parse_builtin("signflip"), 3);
    CHECK(s.at(1) == -1);
    CHECK_THROWS_AS(builtin_sequence(parse_builtin("nosuch"), 3), ContractError);
    CHECK_THROWS_AS(builtin_sequence(parse_builtin("geometric"), 3), ContractError);
  }

  TEST_CASE("file format") {
    std::istringstream plain("0 1\n1 1\n2 2\n");
    const auto a = parse_sequence(plain, "mem");
    CHECK(a.offset() == 0);
    CHECK(a.size() == 3);
    CHECK(a.at(2) == 2);

    std::istringstream shifted("# offset 5\n5 1\n6 2\n7 3/4\n");
    const auto b = parse_sequence(shifted, "mem");
    CHECK(b.offset() == 5);
    CHECK(b.at(7) == q("3/4"));

    std::istringstream gap("# offset 2\n2 1\n4 3\n");
    CHECK_THROWS_AS(parse_sequence(gap, "mem"), ParseError);

    std::istringstream round(format_sequence(b));
    CHECK(parse_sequence(round, "again") == b);
  }

  TEST_CASE("range errors carry the needed index") {
    const auto p = partition_sequence(10);
    CHECK_THROWS_AS(p.at(11), RangeError);
    try {
      p.require_range(0, 20, "probe");
      FAIL("expected RangeError");
    } catch (const RangeError& e) {
      REQUIRE(e.required_last_index());
      CHECK(*e.required_last_index() == 20);
    }
  }

  TEST_CASE("cache stores and reuses") {
    const auto dir = std::filesystem::temp_directory_path() / "hypercert-unit-cache";
    std::filesystem::remove_all(dir);
    SequenceCache cache(dir);
    int calls = 0;
    auto gen = [&](Index n) {
      ++calls;
      return partition_sequence(n);
    };
    const auto first = cache.get_or_compute("partition", 50, gen);
    const auto second = cache.get_or_compute("partition", 50, gen);
    CHECK(calls == 1);
    CHECK(first == second);
    CHECK(second.at(50) == 204226);
    std::filesystem::remove_all(dir);
  }
}
