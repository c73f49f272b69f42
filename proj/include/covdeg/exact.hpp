#pragma once

/**
 * @file exact.hpp
 * @brief Exact rational scalars.
 *
 * ExactRational is a thin value type over GMP's mpq_class. It is always kept
 * canonical: lowest terms, positive denominator, zero as 0/1. The textual
 * form is "p/q", or "p" when q == 1, base 10 and without whitespace.
 */

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace covdeg {

using BigInt = mpz_class;

class ExactRational {
public:
  ExactRational() = default;

  template <std::signed_integral T>
  ExactRational(T value) : value_(static_cast<long>(value)) {}

  template <std::unsigned_integral T>
  ExactRational(T value) : value_(static_cast<unsigned long>(value)) {}

  ExactRational(const BigInt& value) : value_(value) {}

  /// Throws DomainError when den == 0.
  ExactRational(const BigInt& num, const BigInt& den);

  /// Parses the canonical "p/q" or "p" form. Non-canonical input such as
  /// "2/4" is accepted and reduced; anything else throws DomainError.
  static ExactRational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  double to_double() const { return value_.get_d(); }
  std::string to_string() const { return value_.get_str(10); }

  const mpq_class& raw() const { return value_; }

  ExactRational& operator+=(const ExactRational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  ExactRational& operator-=(const ExactRational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  ExactRational& operator*=(const ExactRational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  ExactRational& operator/=(const ExactRational& rhs);

  /// this -= a * b, without a temporary ExactRational.
  void submul(const ExactRational& a, const ExactRational& b);
  /// this += a * b
  void addmul(const ExactRational& a, const ExactRational& b);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }
  ExactRational operator-() const {
    ExactRational out;
    out.value_ = -value_;
    return out;
  }

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

private:
  mpq_class value_{0};
};

/// base^exp for a non-negative exponent; 0^0 == 1.
ExactRational pow(const ExactRational& base, unsigned exp);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

} // namespace covdeg
