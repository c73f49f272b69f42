#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

namespace covdeg {

/// sqrt(6 pi) / 2, the limit of sqrt(d) * int_0^inf (sin x / x)^d dx.
inline const double kSincPowerLimit = std::sqrt(6.0 * std::numbers::pi) / 2.0;
/// sqrt(6 / pi), the limit of deg(C_d) * d^{3/2}.
inline const double kDegreeLimit = std::sqrt(6.0 / std::numbers::pi);

struct AsymptoticSample {
  int d = 0;
  double value = 0.0;
  double target = 0.0;
  double rel_error = 0.0;
};

/// int_0^inf (sin x / x)^d dx to absolute accuracy tol, by adaptive
/// Gauss-Kronrod on [0, pi/2] and on pi-length panels out to a cutoff X.
/// The tail past X is bounded by X^{1-d}/(d-1); for even d its mean term
/// C(d, d/2) 2^{-d} X^{1-d}/(d-1) is added exactly and the oscillating
/// remainder is bounded by 2 X^{-d}. Throws AccuracyError when the
/// refinement budget runs out, DomainError for d < 1 or tol < 1e-12.
double integral_sinc_pow(int d, double tol);

/// sqrt(d) * I_d with I_d = pi c_d / (2 (d-1)!) evaluated exactly and then
/// rounded, against kSincPowerLimit. Every d must be >= 2.
std::vector<AsymptoticSample> asymptotic_scan(std::span<const int> d_values);

/// deg(C_d) * d^{3/2} against kDegreeLimit. Needs d >= 2.
AsymptoticSample deg_asymptotic_ratio(int d);

} // namespace covdeg
