#include "covdeg/closed_forms.hpp"

#include "covdeg/error.hpp"

#include <numbers>

namespace covdeg {

namespace {

void require_positive(int d, const char* who) {
  if (d < 1)
    throw DomainError(std::string(who) + ": d must be positive");
}

// (m/2)^e as an exact rational, m may be negative.
ExactRational half_power(long m, unsigned e) { return pow(ExactRational(m) / ExactRational(2), e); }

// sum_{0 <= j < d/2} (-1)^j C(d,j) (d/2 - j)^e
ExactRational half_sum(int d, unsigned e) {
  ExactRational acc;
  for (int j = 0; 2 * j < d; ++j) {
    ExactRational term = ExactRational(binomial(static_cast<unsigned>(d), static_cast<unsigned>(j))) * half_power(d - 2 * j, e);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

} // namespace

double PiMultiple::value() const { return coefficient.to_double() * std::numbers::pi; }

std::string PiMultiple::to_string() const { return coefficient.to_string() + "*pi"; }

ExactRational c_constant(int d) {
  require_positive(d, "c_constant");
  return half_sum(d, static_cast<unsigned>(d - 1));
}

ExactRational deg_covariants(int d) {
  require_positive(d, "deg_covariants");
  return c_constant(d) / ExactRational(factorial(static_cast<unsigned>(d)));
}

ExactRational psi_covariants(int d) { return deg_covariants(d) / ExactRational(2); }

DegreePair degree_pair(int d) {
  const ExactRational degree = deg_covariants(d);
  return DegreePair{d, degree, degree / ExactRational(2), d == 1};
}

ExactRational signed_full_sum(int d) {
  require_positive(d, "signed_full_sum");
  ExactRational acc;
  for (int j = 0; j <= d; ++j) {
    const int twice_offset = d - 2 * j;
    if (twice_offset == 0)
      continue;
    ExactRational term = ExactRational(binomial(static_cast<unsigned>(d), static_cast<unsigned>(j))) *
                         half_power(twice_offset, static_cast<unsigned>(d - 1));
    const bool negative = (j % 2 == 1) != (twice_offset < 0);
    if (negative)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

ExactRational deg_invariants_hilbert(int d) {
  if (d < 3)
    throw DomainError("deg_invariants_hilbert: needs d >= 3");
  const ExactRational prefactor = ExactRational(d % 2 == 1 ? 4 : 2) * ExactRational(factorial(static_cast<unsigned>(d)));
  return -(half_sum(d, static_cast<unsigned>(d - 3)) / prefactor);
}

PiMultiple wolstenholme_integral(int p, int s) {
  if (s < 1 || p < s)
    throw DomainError("wolstenholme_integral: needs p >= s >= 1");
  if ((p - s) % 2 != 0)
    throw DomainError("wolstenholme_integral: p - s must be even");
  ExactRational acc;
  for (int j = 0; p - 2 * j > 0; ++j) {
    ExactRational term = ExactRational(binomial(static_cast<unsigned>(p), static_cast<unsigned>(j))) *
                         pow(ExactRational(p - 2 * j), static_cast<unsigned>(s - 1));
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  const ExactRational sign = ((p - s) / 2) % 2 == 0 ? 1 : -1;
  const ExactRational scale =
      sign / (ExactRational(factorial(static_cast<unsigned>(s - 1))) * pow(ExactRational(2), static_cast<unsigned>(p)));
  return PiMultiple{scale * acc};
}

} // namespace covdeg
