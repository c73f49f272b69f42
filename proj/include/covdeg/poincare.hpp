#pragma once

/**
 * @file poincare.hpp
 * @brief Poincaré series of the algebra of covariants of a binary d-form.
 *
 * covariant_series() sums the multisections phi_{d-2j}(T_j) exactly as
 * truncated series. poincare_series() then recovers the rational function
 * by Padé reconstruction with guard terms, and laurent_at_one() and
 * gorenstein_check() read off the degree data and the functional equation.
 */

#include "covdeg/exact.hpp"
#include "covdeg/rational_function.hpp"
#include "covdeg/series.hpp"

#include <cstddef>
#include <vector>

namespace covdeg {

namespace serial {
TruncatedSeries covariant_series(int d, std::size_t order);
}
namespace parallel {
/// Terms j are expanded and multisected concurrently, then summed in j order.
TruncatedSeries covariant_series(int d, std::size_t order);
}

/// dim (C_d)_i for i = 0..order. Coefficient 0 is always 1.
TruncatedSeries covariant_series(int d, std::size_t order);

/// Padé reconstruction A/B with deg A <= num_bound, deg B <= den_bound,
/// B(0) = 1 and A = B f mod z^{num_bound + den_bound + 1}, additionally
/// required to reproduce the next `guard` coefficients of f. Needs
/// order(f) >= num_bound + den_bound + guard and f(0) == 1 (DomainError
/// otherwise); throws ReconstructionError when no such A/B exists.
RationalFunction reconstruct_rational(const TruncatedSeries& f, std::size_t num_bound, std::size_t den_bound,
                                      std::size_t guard);

/// f = sum_i coefficients[i] (1-z)^{-(pole_order - i)} + ...
struct LaurentHead {
  int pole_order = 0;
  std::vector<ExactRational> coefficients;
};

/// First `terms` Laurent coefficients at z = 1. Throws DomainError when f
/// has no pole there.
LaurentHead laurent_at_one(const RationalFunction& f, std::size_t terms);

struct GorensteinReport {
  int d = 0;
  long q = 0;             ///< deg(den) - deg(num)
  bool equation_holds = false;
  long expected_q = 0;    ///< d + 1
};

/// Checks f(1/z) = (-1)^d z^q f(z) with q = deg(den) - deg(num), as an exact
/// polynomial identity.
GorensteinReport gorenstein_check(const RationalFunction& f, int d);

/// Exact check of f(1/z) = sign * z^q * f(z) for an arbitrary integer q.
bool satisfies_functional_equation(const RationalFunction& f, int sign, long q);

/// Reconstructed P(C_d, z) together with the bounds that produced it.
struct PoincareSeries {
  int d = 0;
  RationalFunction series;
  std::size_t num_bound = 0;
  std::size_t den_bound = 0;
  std::size_t order_used = 0;
  int attempts = 0;
};

/// Starting denominator bound d(d+1)/2 + d.
std::size_t initial_denominator_bound(int d);
/// Sum over terms of j(j+1) + (d-j)(d-j+1): no reduced denominator is larger.
std::size_t denominator_degree_limit(int d);

/// Reconstructs P(C_d, z), doubling the denominator bound from
/// initial_denominator_bound(d) until the guard terms agree. The numerator
/// bound is den_bound - (d+1), plus 2 on retries. Throws ReconstructionError
/// once the bound passes denominator_degree_limit(d).
PoincareSeries poincare_series(int d, std::size_t guard = 10);

} // namespace covdeg
