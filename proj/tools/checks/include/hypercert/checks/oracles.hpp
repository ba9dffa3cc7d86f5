#pragma once

// Slow, independent reference computations used to validate the core library.
// Nothing here shares code paths with the routines it checks.

#include <span>
#include <vector>

#include "hypercert/numeric.hpp"
#include "hypercert/polynomial.hpp"

namespace hypercert::checks {

/// Visits every partition of n (as a nonincreasing part list) and counts them.
Integer count_partitions_enumerated(unsigned n);

/// Coin-change table over part sizes 1..n.
Integer count_partitions_dp(unsigned n);

/// Builds every plane partition of n row by row and counts them.
Integer count_plane_partitions_enumerated(unsigned n);

/// lead * prod (x - r).
Polynomial polynomial_from_roots(std::span<const Rational> roots, const Rational& lead = 1);

/// Monic gcd by the schoolbook Euclidean algorithm over the rationals.
Polynomial euclid_gcd(const Polynomial& a, const Polynomial& b);

/// Determinant by cofactor expansion (small matrices only).
Rational cofactor_determinant(const std::vector<std::vector<Rational>>& m);

/// Leading principal Hankel minors of the power sums of the given roots,
/// D_j = det(sum_i r_i^(a+b))_{a,b<j}, for j = 1..roots.size().
std::vector<Rational> hankel_minors_from_roots(std::span<const Rational> roots);

/// sum_k C(k,m) (-1)^m g_{i-m} for the k-fold backward difference.
Rational backward_difference(std::span<const Rational> g, std::size_t i, unsigned k);

/// (g1 g2 - g0 g3)^2 - (g1^2 - g0 g2)(g2^2 - g0 g4) on five consecutive terms.
Rational iterated_laguerre_closed_form(std::span<const Rational> g);

/// sum_{k=0}^{terms} 1/k!, a rational approximation of e from below.
Rational e_partial_sum(unsigned terms);

}  // namespace hypercert::checks
