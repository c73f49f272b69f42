#pragma once

#include "covdeg/exact.hpp"
#include "covdeg/polynomial.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace covdeg {

/// Power series known exactly through z^order. Holds order + 1 coefficients,
/// each of which is the true coefficient of the underlying series.
class TruncatedSeries {
public:
  /// Throws DomainError for an empty coefficient list.
  explicit TruncatedSeries(std::vector<ExactRational> coefficients);

  /// p mod z^(order+1), zero-padded.
  static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const ExactRational& operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const ExactRational> coefficients() const { return coeffs_; }

  TruncatedSeries truncated(std::size_t order) const;
  Polynomial to_polynomial() const { return Polynomial(coeffs_); }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
  std::vector<ExactRational> coeffs_;
};

/// Parallel and serial Cauchy products. Output index k runs over [0, order];
/// both produce identical results.
namespace serial {
std::vector<ExactRational> cauchy_product(std::span<const ExactRational> a, std::span<const ExactRational> b,
                                          std::size_t order);
}
namespace parallel {
std::vector<ExactRational> cauchy_product(std::span<const ExactRational> a, std::span<const ExactRational> b,
                                          std::size_t order);
}

/// Truncated to min(order a, order b).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);

/// 1/f through the order of f. Throws DomainError when f(0) == 0.
TruncatedSeries series_invert(const TruncatedSeries& f);

/// num/den expanded through z^order; den(0) must be nonzero.
TruncatedSeries series_quotient(const Polynomial& num, const Polynomial& den, std::size_t order);

} // namespace covdeg
