#include "covdeg/rational_function.hpp"

#include "covdeg/error.hpp"

namespace covdeg {

RationalFunction rf_normalize(Polynomial num, Polynomial den) {
  if (den.is_zero())
    throw DomainError("rf_normalize: zero denominator");
  if (den.coeff(0).is_zero())
    throw DomainError("rf_normalize: denominator vanishes at z = 0");
  if (num.is_zero())
    return RationalFunction(Polynomial(), Polynomial::constant(1));

  const Polynomial g = poly_gcd(num, den);
  if (g.degree() > 0) {
    num = poly_divmod(num, g).first;
    den = poly_divmod(den, g).first;
  }
  const ExactRational scale = ExactRational(1) / den.coeff(0);
  return RationalFunction(num.scaled(scale), den.scaled(scale));
}

ExactRational rf_eval(const RationalFunction& f, const ExactRational& x) {
  const ExactRational den = f.denominator()(x);
  if (den.is_zero())
    throw DomainError("rf_eval: pole at z = " + x.to_string());
  return f.numerator()(x) / den;
}

} // namespace covdeg
