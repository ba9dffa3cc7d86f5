#pragma once

// Order-j Turan operators T_j, their iterates T_j^(k), and the induced
// sequence operator gamma -> {T_j^(k)(i)}_i.
//
// T_j(i) is evaluated on a window of j+1 consecutive terms. Which window an
// index refers to is the anchor convention:
//   backward  gamma_{i-j} .. gamma_i
//   centered  gamma_{i-1} .. gamma_{i+j-1}
//   start     gamma_i     .. gamma_{i+j}
// Values on a window w_0..w_j:
//   j = 1   w_1 - w_0
//   j = 2   w_1^2 - w_0 w_2
//   j = 3   4(w_1^2 - w_0 w_2)(w_2^2 - w_1 w_3) - (w_1 w_2 - w_0 w_3)^2
//   j >= 4  lc^(2j-2) D_j for the Jensen polynomial sum C(j,k) w_k x^k, where
//           D_j is the top Hankel minor of its root power sums and lc = w_j.
//           This is the discriminant of that polynomial; j = 4 evaluates the
//           quartic discriminant directly.
// For j = 3 the Hankel route gives exactly 27 times the closed form; with
// cross_check on, the signs are compared wherever both lower order-2 values on
// the window are positive.

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "hypercert/numeric.hpp"
#include "hypercert/parallel.hpp"
#include "hypercert/sequence.hpp"

namespace hypercert {

enum class Anchor { backward, centered, start };

std::string to_string(Anchor a);
Anchor parse_anchor(std::string_view text);

/// backward for j = 1, centered for j = 2, start for j >= 3.
Anchor default_anchor(unsigned j);

/// How far the window for index i reaches below i: the window is
/// [i - reach, i - reach + j].
Index anchor_reach_back(Anchor a, unsigned j);

struct TuranOptions {
  /// For j = 3, also evaluate the Hankel route and compare signs when both
  /// order-2 values on the window are strictly positive.
  bool cross_check = true;
};

/// T_j on an explicit window of j+1 terms.
Rational turan_window_value(std::span<const Rational> window, const TuranOptions& options = {});

Rational turan_closed_form3(std::span<const Rational> window);

/// lc^(2j-2) D_j of the Jensen polynomial built on the window (any j >= 1).
/// Windows whose last term is zero are handled by interpolating in that term,
/// since the value is a polynomial in the window entries.
Rational turan_hankel_route(std::span<const Rational> window);

/// Discriminant of sum C(4,k) w_k x^k; equal to turan_hankel_route on 5 terms
/// and used for j = 4 because its intermediates are half the degree.
Rational turan_quartic_discriminant(std::span<const Rational> window);

Rational turan_value(const Sequence& gamma, unsigned j, Index i, Anchor anchor,
                     const TuranOptions& options = {});

/// The raw rational Hankel minor D_j of the anchored Jensen polynomial, with
/// no denominator clearing. Reference only; not used for T_j values.
Rational turan_hankel_minor(const Sequence& gamma, unsigned j, Index i, Anchor anchor);

/// A sequence produced by T_j^(k), indexed in the original coordinates.
struct IteratedSequence {
  Sequence values;
  unsigned order = 0;       ///< j
  unsigned iterations = 0;  ///< k
  Anchor anchor = Anchor::start;

  Index first_index() const { return values.offset(); }
  Index last_index() const { return values.last_index(); }
};

/// One application of T_j to every index whose window fits in `seq`. When
/// `last_needed` is set the output stops there.
Sequence turan_apply(const Sequence& seq, unsigned j, Anchor anchor,
                     const WorkerPool& pool = WorkerPool::serial(),
                     std::optional<Index> last_needed = std::nullopt,
                     const TuranOptions& options = {});

/// T_j^(k): k applications of T_j with the same anchor. Each application
/// narrows the valid domain by the window reach at each end. With
/// `last_needed`, earlier levels are computed only as far as the final level
/// up to that index requires. Throws RangeError if the result would be empty.
IteratedSequence turan_iterate(const Sequence& gamma, unsigned j, unsigned k, Anchor anchor,
                               const WorkerPool& pool = WorkerPool::serial(),
                               std::optional<Index> last_needed = std::nullopt,
                               const TuranOptions& options = {});

/// Columns: index,value,sign.
std::string to_csv(const IteratedSequence& seq);

}  // namespace hypercert
