#include "covdeg/exact.hpp"

#include "covdeg/error.hpp"

#include <algorithm>
#include <cctype>

namespace covdeg {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

ExactRational::ExactRational(const BigInt& num, const BigInt& den) {
  if (den == 0)
    throw DomainError("ExactRational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-')
    body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num_digits = body.substr(0, slash);
  const std::string_view den_digits = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_digits) || !all_digits(den_digits))
    throw DomainError("ExactRational: malformed rational '" + std::string(text) + "'");

  BigInt num(std::string(num_digits), 10);
  const BigInt den(std::string(den_digits), 10);
  if (text.front() == '-')
    num = -num;
  return ExactRational(num, den);
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.is_zero())
    throw DomainError("ExactRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

void ExactRational::submul(const ExactRational& a, const ExactRational& b) {
  if (a.is_zero() || b.is_zero())
    return;
  value_ -= a.value_ * b.value_;
}

void ExactRational::addmul(const ExactRational& a, const ExactRational& b) {
  if (a.is_zero() || b.is_zero())
    return;
  value_ += a.value_ * b.value_;
}

ExactRational pow(const ExactRational& base, unsigned exp) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exp);
  return ExactRational(num, den);
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

} // namespace covdeg
