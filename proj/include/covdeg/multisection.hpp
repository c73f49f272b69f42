#pragma once

#include "covdeg/exact.hpp"
#include "covdeg/rational_function.hpp"
#include "covdeg/series.hpp"

namespace covdeg {

/// The multisection operator phi_n on series: output coefficient k is input
/// coefficient n*k, for k up to floor(order / n). phi_n(f)(z^n) averages f
/// over the n-th roots of unity.
TruncatedSeries phi_series(const TruncatedSeries& f, int n);

/// First two Laurent coefficients of phi_n(1/(1-z)^h) at w = 1: the
/// coefficients of (1-w)^{-h} and (1-w)^{-(h-1)}.
struct AlphaHead {
  int n = 1;
  int h = 1;
  ExactRational alpha_h;
  ExactRational alpha_h_minus_1;
};

/// alpha_h = n^{h-1}; alpha_{h-1} = -h(n-1)n^{h-2}/2 for h >= 2. For h = 1
/// the image is exactly 1/(1-w), so alpha_0 = 0.
AlphaHead phi_alpha_head(int n, int h);

/// |(1/n) sum_j f(zeta_n^j x) - phi_n(f)(x^n)| in double precision, where the
/// right side sums the exact multisected series of f. Throws DomainError if
/// any rotated sample point hits a pole.
double phi_numeric_check(const RationalFunction& f, int n, double sample);

} // namespace covdeg
