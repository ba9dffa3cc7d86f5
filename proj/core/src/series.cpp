#include "hypercert/series.hpp"

#include <algorithm>

#include "hypercert/error.hpp"

namespace hypercert {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients, Index base_shift)
    : coeffs_(std::move(coefficients)), base_shift_(base_shift) {
  if (coeffs_.empty()) throw ContractError("a truncated series needs at least one coefficient");
  for (auto& c : coeffs_) c.canonicalize();
}

const Rational& TruncatedSeries::coeff(std::size_t k) const {
  if (k > order()) {
    throw ContractError("coefficient " + std::to_string(k) + " requested from a series of order " +
                        std::to_string(order()));
  }
  return coeffs_[k];
}

Rational TruncatedSeries::derivative_at_zero(std::size_t k) const {
  return coeff(k) * factorial(static_cast<unsigned>(k));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw ContractError("cannot raise series order from " + std::to_string(this->order()) +
                        " to " + std::to_string(order));
  }
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1),
                         base_shift_);
}

TruncatedSeries taylor_window(const Sequence& gamma, Index n, std::size_t order) {
  gamma.require_range(n, n + static_cast<Index>(order), "taylor_window");
  std::vector<Rational> a(order + 1);
  Integer k_factorial = 1;
  for (std::size_t k = 0; k <= order; ++k) {
    if (k > 0) k_factorial *= static_cast<unsigned long>(k);
    a[k] = gamma.at(n + static_cast<Index>(k)) / k_factorial;
  }
  return TruncatedSeries(std::move(a), n);
}

TruncatedSeries product(const TruncatedSeries& s, const TruncatedSeries& t) {
  const std::size_t order = std::min(s.order(), t.order());
  std::vector<Rational> c(order + 1);
  const auto a = s.coefficients();
  const auto b = t.coefficients();
  for (std::size_t m = 0; m <= order; ++m) {
    Rational acc = 0;
    for (std::size_t i = 0; i <= m; ++i) acc += a[i] * b[m - i];
    c[m] = std::move(acc);
  }
  return TruncatedSeries(std::move(c), s.base_shift());
}

TruncatedSeries derivative(const TruncatedSeries& s) {
  if (s.order() == 0) throw ContractError("derivative of an order-0 series has no coefficients");
  std::vector<Rational> c(s.order());
  const auto a = s.coefficients();
  for (std::size_t m = 0; m < c.size(); ++m) c[m] = a[m + 1] * static_cast<unsigned long>(m + 1);
  return TruncatedSeries(std::move(c), s.base_shift());
}

TruncatedSeries series_algebra(SeriesOp op, const TruncatedSeries& s,
                               const std::optional<TruncatedSeries>& t) {
  switch (op) {
    case SeriesOp::product:
      if (!t) throw ContractError("series product needs two operands");
      return product(s, *t);
    case SeriesOp::derivative:
      if (t) throw ContractError("series derivative takes a single operand");
      return derivative(s);
  }
  throw ContractError("unknown series operation");
}

}  // namespace hypercert
