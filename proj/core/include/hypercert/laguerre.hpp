#pragma once

// Laguerre operators L_k, defined by
//   phi(x + iy) phi(x - iy) = sum_k L_k(phi)(x) y^(2k)
// and given explicitly by the generalized Leibniz rule
//   L_k(phi) = sum_{j=0}^{2k} (-1)^(j+k) / (2k)! * C(2k, j) phi^(j) phi^(2k-j).
//
// The rigorous contract is at x = 0 for phi_gamma^(n) (only finitely many
// Taylor coefficients enter) and anywhere for polynomials.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypercert/polynomial.hpp"
#include "hypercert/sequence.hpp"
#include "hypercert/series.hpp"

namespace hypercert {

/// L_k(phi_gamma^(n))(0) = sum_{j=0}^{2k} (-1)^(j+k)/(2k)! C(2k,j) gamma_{n+j} gamma_{n+2k-j}.
Rational laguerre_at_zero(const Sequence& gamma, unsigned k, Index n);

/// L_k on a truncated series. The result has order order(s) - 2k; throws
/// ContractError naming the required minimum order when order(s) < 2k.
TruncatedSeries laguerre_series(const TruncatedSeries& s, unsigned k);

/// L_j^(k)(phi_gamma^(n))(0): k applications of L_j to the order-2jk Taylor
/// window at n, then the constant term.
Rational laguerre_iterate_at_zero(const Sequence& gamma, unsigned j, unsigned k, Index n);

/// Truncation order needed for L_j^(k) at 0.
inline std::size_t laguerre_required_order(unsigned j, unsigned k) {
  return 2 * static_cast<std::size_t>(j) * k;
}

/// L_k(f) as a polynomial, by the Leibniz form.
Polynomial laguerre_poly(const Polynomial& f, unsigned k);

struct ExpansionCheck {
  bool passed = false;
  /// y^(2k) coefficients of f(x+iy) f(x-iy), k = 0..deg f.
  std::vector<Rational> even_coefficients;
  /// Empty when passed; otherwise the first mismatch.
  std::string first_mismatch;
};

/// Expands f(x+iy) and f(x-iy) as real/imaginary polynomials in y (real
/// arithmetic only), multiplies them, and checks that the imaginary part and
/// all odd powers of y vanish and that the y^(2k) coefficient equals L_k(f)(x)
/// for 0 <= k <= deg f.
ExpansionCheck laguerre_expansion_check(const Polynomial& f, const Rational& x);

struct LaguerreValue {
  enum class Source { sequence_form, series_form };

  Rational value;
  unsigned k = 0;
  Index shift = 0;
  Source source = Source::sequence_form;
};

/// Columns: n,k,value,sign.
std::string to_csv(std::span<const LaguerreValue> values);

}  // namespace hypercert
