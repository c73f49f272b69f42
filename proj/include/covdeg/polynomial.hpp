#pragma once

#include "covdeg/exact.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace covdeg {

/// Dense univariate polynomial over the rationals. Index = exponent; trailing
/// zeros are always trimmed, so the zero polynomial has no coefficients.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<ExactRational> coefficients);
  Polynomial(std::initializer_list<ExactRational> coefficients);

  static Polynomial constant(const ExactRational& c);
  /// c * z^power
  static Polynomial monomial(const ExactRational& c, std::size_t power);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of z^i; zero past the degree.
  ExactRational coeff(std::size_t i) const;
  std::span<const ExactRational> coefficients() const { return coeffs_; }
  const ExactRational& leading() const;

  /// Smallest exponent with a nonzero coefficient (the z-adic valuation).
  std::size_t valuation() const;

  ExactRational operator()(const ExactRational& x) const;

  /// z^k * p
  Polynomial shifted(std::size_t k) const;
  /// p / z^k; the k lowest coefficients must be zero.
  Polynomial unshifted(std::size_t k) const;
  /// p mod z^n
  Polynomial truncated(std::size_t n) const;
  /// z^deg(p) * p(1/z)
  Polynomial reversed() const;
  /// p(1 - u) as a polynomial in u.
  Polynomial at_one_minus() const;
  Polynomial scaled(const ExactRational& c) const;
  /// Scaled so the leading coefficient is 1; the zero polynomial stays zero.
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const { return scaled(ExactRational(-1)); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  void trim();

  std::vector<ExactRational> coeffs_;
};

Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

/// Euclidean division a = q*b + r with deg r < deg b. Throws DomainError for b == 0.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor; gcd(0, 0) == 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

} // namespace covdeg
