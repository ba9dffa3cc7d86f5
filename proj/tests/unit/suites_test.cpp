#include <doctest.h>

#include "hypercert/checks/suites.hpp"
#include "hypercert/error.hpp"

using namespace hypercert;

TEST_SUITE("suites") {
  TEST_CASE("every registered invariant suite passes") {
    const WorkerPool pool(0);
    checks::SuiteContext ctx;
    ctx.pool = &pool;
    for (const auto& info : checks::suite_registry()) {
      const auto r = info.run(ctx);
      INFO(info.module << "/" << info.name << ": " << r.first_violation);
      CHECK(r.cases > 0);
      CHECK(r.violations == 0);
    }
  }

  TEST_CASE("filters") {
    checks::SuiteContext ctx;
    const auto turan = checks::run_suites({"turan"}, ctx);
    CHECK(turan.size() == 5);
    CHECK_THROWS_AS(checks::run_suites({"nonexistent"}, ctx), ContractError);
  }
}
