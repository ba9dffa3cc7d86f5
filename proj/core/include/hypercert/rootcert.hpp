#pragma once

// Real-rootedness certificates for exact polynomials.
//
// Two independent routes:
//   * Sturm chains on the square-free part count distinct real roots and are
//     the authoritative hyperbolicity oracle (multiplicities included).
//   * Hermite's criterion: the Hankel matrix of root power sums S_0..S_{2d-2}
//     is positive definite iff all roots are real and simple. Its leading
//     minors D_1..D_d carry the Turan-inequality semantics.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "hypercert/numeric.hpp"
#include "hypercert/polynomial.hpp"

namespace hypercert {

/// S_0..S_{m_max}, S_m = sum of m-th powers of the roots with multiplicity,
/// from Newton's identities. Throws ContractError on the zero polynomial.
std::vector<Rational> newton_power_sums(const Polynomial& f, std::size_t m_max);

/// Determinant of a square integer matrix by Bareiss fraction-free elimination
/// (row pivoting on zero pivots). Every intermediate division is exact.
Integer bareiss_determinant(std::vector<std::vector<Integer>> matrix);

/// D_1..D_d, leading principal minors of the Hankel matrix of power sums.
/// Depends only on the roots, so any nonzero rescaling of f gives the same list.
std::vector<Rational> hankel_minors(const Polynomial& f);

/// lc^(2d-2) * D_d for integer coefficients c_0..c_d (c_d != 0): the top Hankel
/// minor with the leading-coefficient denominators cleared. Equals
/// lc^(2d-2) * prod_{i<j} (r_i - r_j)^2, an integer polynomial in the
/// coefficients that is homogeneous of degree 2d-2.
Integer cleared_top_minor(std::span<const Integer> coefficients);

/// Sturm chain of the square-free part of f (first entry is that part).
std::vector<Polynomial> sturm_chain(const Polynomial& f);

/// Number of distinct real roots of f in (a, b]. Requires a < b; endpoints may be infinite.
std::size_t sturm_count(const Polynomial& f, const ExtendedRational& a, const ExtendedRational& b);

enum class CertMethod { sturm, hankel, both };

enum class SignPattern { all_nonpositive, all_nonnegative, mixed, undetermined };

/// Outcome of Hermite's test on the Hankel minors.
enum class HankelVerdict {
  not_run,
  positive_definite,      ///< all D_j > 0: real and simple roots
  not_positive_definite,  ///< all D_j != 0, some negative: non-real roots exist
  undetermined,           ///< some D_j = 0 (repeated roots); Sturm decides
};

struct SignProfile {
  SignPattern pattern = SignPattern::undetermined;
  std::string witness;
};

struct RootCertificate {
  CertMethod method = CertMethod::sturm;
  bool hyperbolic = false;
  std::int64_t degree = 0;
  std::size_t distinct_real_roots = 0;
  /// True when every root is simple (f is square-free).
  bool simple_roots = false;
  HankelVerdict hankel = HankelVerdict::not_run;
  std::optional<bool> sturm_hyperbolic;
  std::optional<std::vector<Rational>> power_sums;
  std::optional<std::vector<Rational>> minors;
  SignProfile sign;
};

/// Throws ContractError on the zero polynomial and IntegrityError if, under
/// CertMethod::both, the two routes disagree on a square-free input.
RootCertificate certify_hyperbolic(const Polynomial& f, CertMethod method);

/// Sturm verdict only, skipping power sums and sign analysis.
bool is_hyperbolic(const Polynomial& f);

SignProfile root_sign_profile(const Polynomial& f);

std::string to_string(CertMethod m);
std::string to_string(SignPattern p);
std::string to_string(HankelVerdict v);
CertMethod parse_cert_method(std::string_view text);

nlohmann::json to_json(const RootCertificate& cert);

}  // namespace hypercert
