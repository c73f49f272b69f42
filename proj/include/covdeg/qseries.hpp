#pragma once

/**
 * @file qseries.hpp
 * @brief The summands of the covariant Poincaré series.
 *
 * For a binary d-form the series is a sum over 0 <= j < d/2 of multisections
 * of
 *
 *     T_j(z) = (-1)^j z^{j(j+1)} (1 + z) / ((z^2; z^2)_j (z^2; z^2)_{d-j}),
 *
 * where (z^2; z^2)_j = (1 - z^2)(1 - z^4)...(1 - z^{2j}). This header builds
 * the q-Pochhammer products, exact T_j expansions at z = 0, and the closed
 * forms for the first two coefficients of both at z = 1.
 */

#include "covdeg/exact.hpp"
#include "covdeg/polynomial.hpp"
#include "covdeg/series.hpp"

#include <cstddef>

namespace covdeg {

/// Indices (d, j) of one summand. Valid when d >= 1 and 0 <= j < d/2.
struct TermSpec {
  int d = 1;
  int j = 0;

  /// Throws DomainError when the indices are out of range.
  void validate() const;
};

/// (z^2; z^2)_j, a polynomial of degree j(j+1) with leading coefficient (-1)^j.
Polynomial q_pochhammer(int j);

Polynomial term_numerator(const TermSpec& spec);
Polynomial term_denominator(const TermSpec& spec);

/// Exact coefficients of T_j through z^order: numerator times the inverted
/// denominator series.
TruncatedSeries term_series(const TermSpec& spec, std::size_t order);

/// Coefficients of (1-z)^j and (1-z)^{j+1} in (z^2; z^2)_j.
struct PochhammerHead {
  ExactRational leading;
  ExactRational subleading;
};

/// leading = 2^j j!, subleading = -2^{j-1} j! j^2 (zero for j = 0).
PochhammerHead pochhammer_head_at_one(int j);

/// Coefficients of (1-z)^{-d} and (1-z)^{-(d-1)} in T_j at z = 1.
struct TermLaurentHead {
  ExactRational lead;
  ExactRational sub;
};

/// lead = (-1)^j / (2^{d-1} j! (d-j)!), sub = lead (d+1)(d/2 - j - 1/2).
TermLaurentHead term_laurent_head(const TermSpec& spec);

} // namespace covdeg
