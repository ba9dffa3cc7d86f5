#include <doctest.h>

#include "helpers.hpp"
#include "hypercert/checks/oracles.hpp"
#include "hypercert/polynomial.hpp"
#include "hypercert/rootcert.hpp"

using namespace hypercert;
using namespace hypercert::testing;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_SUITE("rootcert") {
  TEST_CASE("power sums") {
    CHECK(newton_power_sums(Polynomial{2, -3, 1}, 2) == ints({2, 3, 5}));
    CHECK(newton_power_sums(Polynomial{1, 0, 1}, 2) == ints({2, 0, -2}));
    CHECK(newton_power_sums(pow(Polynomial{-1, 1}, 3), 2) == ints({3, 3, 3}));
  }

  TEST_CASE("hankel minors") {
    CHECK(hankel_minors(Polynomial{2, -3, 1}) == ints({2, 1}));
    CHECK(hankel_minors(Polynomial{1, 0, 1}).back() == -4);
    CHECK(hankel_minors(Polynomial{10, -15, 5}) == ints({2, 1}));
    const std::vector<Rational> roots{q("1/2"), 3, -2, q("-7/3")};
    CHECK(hankel_minors(checks::polynomial_from_roots(roots, 6)) == checks::hankel_minors_from_roots(roots));
  }

  TEST_CASE("bareiss matches cofactor expansion") {
    const std::vector<std::vector<Integer>> m{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    std::vector<std::vector<Rational>> mr;
    for (const auto& row : m) mr.emplace_back(row.begin(), row.end());
    CHECK(Rational(bareiss_determinant(m)) == checks::cofactor_determinant(mr));
    CHECK(bareiss_determinant(m) == 4);
  }

  TEST_CASE("sturm counts") {
    const auto all = [](const Polynomial& f) {
      return sturm_count(f, ExtendedRational::negative_infinity(), ExtendedRational::positive_infinity());
    };
    CHECK(all(Polynomial{0, -1, 0, 1}) == 3);
    CHECK(all(Polynomial{1, 0, 1}) == 0);
    const Polynomial cubic = checks::polynomial_from_roots(ints({1, 2, 3}));
    CHECK(sturm_count(cubic, q("3/2"), q("7/2")) == 2);
  }

  TEST_CASE("certificates") {
    const auto yes = certify_hyperbolic(Polynomial{1958, 4872, 3010}, CertMethod::both);
    CHECK(yes.hyperbolic);
    CHECK(yes.distinct_real_roots == 2);
    CHECK(yes.hankel == HankelVerdict::positive_definite);
    const auto no = certify_hyperbolic(Polynomial{1575, 3916, 2436}, CertMethod::both);
    CHECK_FALSE(no.hyperbolic);
    for (auto m : {CertMethod::sturm, CertMethod::hankel, CertMethod::both}) {
      CHECK_FALSE(certify_hyperbolic(Polynomial{1, 0, 1}, m).hyperbolic);
    }
    // Repeated roots: the Hankel test is inconclusive and Sturm decides.
    const auto rep = certify_hyperbolic(pow(Polynomial{1, 1}, 2) * Polynomial{-3, 1}, CertMethod::both);
    CHECK(rep.hyperbolic);
    CHECK_FALSE(rep.simple_roots);
  }

  TEST_CASE("root sign profiles") {
    CHECK(root_sign_profile(pow(Polynomial{1, 1}, 3)).pattern == SignPattern::all_nonpositive);
    CHECK(root_sign_profile(Polynomial{1, 0, -1}).pattern == SignPattern::mixed);
    CHECK(root_sign_profile(Polynomial{0, 0, 2, 1}).pattern == SignPattern::all_nonpositive);
    CHECK(root_sign_profile(checks::polynomial_from_roots(ints({1, 4}))).pattern == SignPattern::all_nonnegative);
    CHECK(root_sign_profile(Polynomial{1, 0, 1}).pattern == SignPattern::undetermined);
  }
}
