#pragma once

// Truncated Taylor series a_0 + a_1 x + ... + a_M x^M with an explicit order M.

#include <optional>
#include <span>
#include <vector>

#include "hypercert/numeric.hpp"
#include "hypercert/sequence.hpp"

namespace hypercert {

class TruncatedSeries {
 public:
  /// Order is coefficients.size() - 1; at least one coefficient is required.
  /// `base_shift` records the n for which this series stands for phi^(n).
  explicit TruncatedSeries(std::vector<Rational> coefficients, Index base_shift = 0);

  std::size_t order() const { return coeffs_.size() - 1; }
  Index base_shift() const { return base_shift_; }

  /// Throws ContractError for k > order(): coefficients past the order are unknown.
  const Rational& coeff(std::size_t k) const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// k-th derivative at zero, k! * a_k.
  Rational derivative_at_zero(std::size_t k) const;

  /// Keeps coefficients up to `order` (which must not exceed order()).
  TruncatedSeries truncated(std::size_t order) const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
  Index base_shift_ = 0;
};

/// Taylor coefficients of phi_gamma^(n): a_k = gamma_{n+k} / k!, 0 <= k <= order.
TruncatedSeries taylor_window(const Sequence& gamma, Index n, std::size_t order);

/// Cauchy product; order min(order(s), order(t)).
TruncatedSeries product(const TruncatedSeries& s, const TruncatedSeries& t);

/// d/dx; order(s) - 1. Throws ContractError on an order-0 series.
TruncatedSeries derivative(const TruncatedSeries& s);

enum class SeriesOp { product, derivative };

/// Dispatching front end: product needs both operands, derivative exactly one.
TruncatedSeries series_algebra(SeriesOp op, const TruncatedSeries& s,
                               const std::optional<TruncatedSeries>& t = std::nullopt);

}  // namespace hypercert
