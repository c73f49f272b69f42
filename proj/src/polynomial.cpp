#include "covdeg/polynomial.hpp"

#include "covdeg/error.hpp"

#include <algorithm>

namespace covdeg {

Polynomial::Polynomial(std::vector<ExactRational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<ExactRational> coefficients) : coeffs_(coefficients) { trim(); }

Polynomial Polynomial::constant(const ExactRational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const ExactRational& c, std::size_t power) {
  std::vector<ExactRational> v(power + 1);
  v[power] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero())
    coeffs_.pop_back();
}

ExactRational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ExactRational(); }

const ExactRational& Polynomial::leading() const {
  if (coeffs_.empty())
    throw DomainError("Polynomial: zero polynomial has no leading coefficient");
  return coeffs_.back();
}

std::size_t Polynomial::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero())
      return i;
  throw DomainError("Polynomial: valuation of the zero polynomial");
}

ExactRational Polynomial::operator()(const ExactRational& x) const {
  ExactRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::shifted(std::size_t k) const {
  if (is_zero())
    return {};
  std::vector<ExactRational> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(v));
}

Polynomial Polynomial::unshifted(std::size_t k) const {
  if (is_zero())
    return {};
  if (k > valuation())
    throw DomainError("Polynomial: not divisible by the requested power of z");
  return Polynomial(std::vector<ExactRational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

Polynomial Polynomial::truncated(std::size_t n) const {
  if (n >= coeffs_.size())
    return *this;
  return Polynomial(std::vector<ExactRational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
}

Polynomial Polynomial::reversed() const {
  std::vector<ExactRational> v(coeffs_.rbegin(), coeffs_.rend());
  return Polynomial(std::move(v));
}

Polynomial Polynomial::at_one_minus() const {
  // Horner in (1 - u): acc <- acc * (1 - u) + c_i
  std::vector<ExactRational> acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc.emplace_back();
    for (std::size_t k = acc.size() - 1; k > 0; --k)
      acc[k] -= acc[k - 1];
    acc[0] += *it;
  }
  return Polynomial(std::move(acc));
}

Polynomial Polynomial::scaled(const ExactRational& c) const {
  if (c.is_zero())
    return {};
  std::vector<ExactRational> v(coeffs_);
  for (auto& x : v)
    x *= c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
  if (is_zero())
    return {};
  return scaled(ExactRational(1) / leading());
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<ExactRational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero())
      continue;
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k)
      v[i + k].addmul(a.coeffs_[i], b.coeffs_[k]);
  }
  return Polynomial(std::move(v));
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero())
    throw DomainError("poly_divmod: division by the zero polynomial");
  if (a.degree() < b.degree())
    return {Polynomial(), a};

  const auto db = static_cast<std::size_t>(b.degree());
  const ExactRational inv_lead = ExactRational(1) / b.leading();
  std::vector<ExactRational> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<ExactRational> quot(rem.size() - db);
  const auto bc = b.coefficients();

  for (std::size_t k = quot.size(); k-- > 0;) {
    ExactRational q = rem[k + db] * inv_lead;
    if (q.is_zero())
      continue;
    for (std::size_t i = 0; i <= db; ++i)
      rem[k + i].submul(q, bc[i]);
    quot[k] = std::move(q);
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = poly_divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

} // namespace covdeg
