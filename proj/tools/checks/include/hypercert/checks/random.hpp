#pragma once

// Seeded generators for randomized property checks.

#include <cstdint>
#include <random>
#include <vector>

#include "hypercert/polynomial.hpp"
#include "hypercert/sequence.hpp"

namespace hypercert::checks {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  long nonzero_integer(long bound);
  bool coin() { return integer(0, 1) == 1; }

  /// num/den with num in [-bound, bound], den in [1, max_den].
  Rational rational(long bound, long max_den = 1);
  Rational positive_rational(long bound, long max_den = 1);

  /// `count` distinct rationals from the grid of rational(bound, max_den).
  std::vector<Rational> distinct_rationals(std::size_t count, long bound, long max_den);

  /// Integer coefficients in [-bound, bound] with a nonzero leading term.
  Polynomial polynomial(unsigned degree, long bound);

  /// Integer terms in [-bound, bound] (nonzero when `nonzero`) at indices offset..offset+length-1.
  Sequence sequence(std::size_t length, long bound, Index offset = 0, bool nonzero = false);
  /// Positive integer terms in [1, bound].
  Sequence positive_sequence(std::size_t length, long bound, Index offset = 0);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hypercert::checks
