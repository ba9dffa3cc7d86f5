#pragma once

// Jensen and Appell polynomials of a sequence.

#include <optional>
#include <string>
#include <vector>

#include "hypercert/parallel.hpp"
#include "hypercert/polynomial.hpp"
#include "hypercert/rootcert.hpp"
#include "hypercert/sequence.hpp"

namespace hypercert {

/// J^{d,n}(x) = sum_{k=0}^{d} C(d,k) gamma_{n+k} x^k. Requires d >= 1.
Polynomial jensen_poly(const Sequence& gamma, unsigned d, Index n);

/// P^{d,n}(x) = x^d J^{d,n}(1/x) / d!, so that d/dx P^{d,n} = P^{d-1,n}.
Polynomial appell_poly(const Sequence& gamma, unsigned d, Index n);

/// J^{d,n}(x/d). Tends to phi_gamma^(n)(x) as d grows.
Rational scaled_jensen_eval(const Sequence& gamma, unsigned d, Index n, const Rational& x);

struct JensenVerdict {
  Index shift = 0;
  bool hyperbolic = false;
  SignProfile sign;
};

struct JensenWindowReport {
  unsigned degree = 0;
  Index n_lo = 0;
  Index n_hi = 0;
  std::vector<JensenVerdict> verdicts;  ///< ordered by shift
  /// Least shift in [n_lo, n_hi] from which every verdict is hyperbolic.
  /// Window-relative only: no claim is made beyond n_hi.
  std::optional<Index> onset;
};

/// Certifies J^{d,n} (Sturm) for every n in [n_lo, n_hi]; shifts are evaluated
/// on `pool` and assembled in shift order.
JensenWindowReport jensen_window_report(const Sequence& gamma, unsigned d, Index n_lo, Index n_hi,
                                        const WorkerPool& pool = WorkerPool::serial());

/// Columns: shift,hyperbolic,sign_profile.
std::string to_csv(const JensenWindowReport& report);

}  // namespace hypercert
