#pragma once

#include "covdeg/exact.hpp"

#include <string>

namespace covdeg {

/// Leading and subleading Laurent coefficients of P(C_d, z) at z = 1 from
/// the closed form; psi is degree/2. For d = 1 that value is not the true
/// coefficient (which is 0), and `degenerate` is set.
struct DegreePair {
  int d = 0;
  ExactRational degree;
  ExactRational psi;
  bool degenerate = false;
};

/// An exact rational multiple of pi, kept symbolic.
struct PiMultiple {
  ExactRational coefficient;

  double value() const;
  /// "p/q*pi"
  std::string to_string() const;

  friend bool operator==(const PiMultiple&, const PiMultiple&) = default;
};

/// (1/d!) sum_{0 <= j < d/2} (-1)^j C(d,j) (d/2 - j)^{d-1}
ExactRational deg_covariants(int d);
/// deg_covariants(d) / 2
ExactRational psi_covariants(int d);
DegreePair degree_pair(int d);

/// c_d = d! deg(C_d) = sum_{0 <= j < d/2} (-1)^j C(d,j) (d/2 - j)^{d-1}
ExactRational c_constant(int d);

/// sum_{j=0}^{d} (-1)^j C(d,j) sign(d/2 - j) (d/2 - j)^{d-1}, which equals 2 c_d.
ExactRational signed_full_sum(int d);

/// Hilbert's constant for the invariant algebra, evaluated as printed:
/// -(1/(4 d!)) S for odd d and -(1/(2 d!)) S for even d, where
/// S = sum_{0 <= e < d/2} (-1)^e C(d,e) (d/2 - e)^{d-3}. Needs d >= 3.
ExactRational deg_invariants_hilbert(int d);

/// Wolstenholme's closed form for int_0^inf sin^p x / x^s dx:
///   (-1)^{(p-s)/2} / (s-1)! * pi / 2^p * sum_{p-2j>0} (-1)^j C(p,j) (p-2j)^{s-1}.
/// Needs p >= s >= 1 and p - s even.
PiMultiple wolstenholme_integral(int p, int s);

} // namespace covdeg
