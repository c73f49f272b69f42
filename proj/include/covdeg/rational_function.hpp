#pragma once

#include "covdeg/exact.hpp"
#include "covdeg/polynomial.hpp"
#include "covdeg/series.hpp"

namespace covdeg {

/// Reduced quotient of polynomials with denominator constant term 1.
/// Only rf_normalize constructs one, so the invariants always hold.
class RationalFunction {
public:
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  TruncatedSeries expand(std::size_t order) const { return series_quotient(num_, den_, order); }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
  friend RationalFunction rf_normalize(Polynomial num, Polynomial den);
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

/// Cancels the gcd and scales so den(0) == 1. Throws DomainError when
/// den == 0 or den(0) == 0.
RationalFunction rf_normalize(Polynomial num, Polynomial den);

/// Exact value at x; throws DomainError at a pole.
ExactRational rf_eval(const RationalFunction& f, const ExactRational& x);

} // namespace covdeg
