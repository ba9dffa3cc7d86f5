#pragma once

#include <string>
#include <vector>

#include "hypercert/numeric.hpp"
#include "hypercert/sequence.hpp"

namespace hypercert::testing {

inline Rational q(const char* text) { return parse_rational(text); }

inline Sequence seq_of(std::vector<long> values, Index offset = 0) {
  std::vector<Rational> terms(values.begin(), values.end());
  return Sequence(std::move(terms), offset, "test");
}

/// p(0..n) computed once per binary.
inline const Sequence& partitions(Index n_max) {
  static Sequence cached = partition_sequence(1200);
  if (cached.last_index() < n_max) cached = partition_sequence(n_max);
  return cached;
}

}  // namespace hypercert::testing
