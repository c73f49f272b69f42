#include "covdeg/qseries.hpp"

#include "covdeg/error.hpp"

#include <string>

namespace covdeg {

void TermSpec::validate() const {
  if (d < 1 || j < 0 || 2 * j >= d)
    throw DomainError("TermSpec: need d >= 1 and 0 <= j < d/2, got d=" + std::to_string(d) + " j=" + std::to_string(j));
}

Polynomial q_pochhammer(int j) {
  if (j < 0)
    throw DomainError("q_pochhammer: negative index");
  Polynomial acc = Polynomial::constant(1);
  for (int k = 1; k <= j; ++k)
    acc = acc * (Polynomial::constant(1) - Polynomial::monomial(1, static_cast<std::size_t>(2 * k)));
  return acc;
}

Polynomial term_numerator(const TermSpec& spec) {
  spec.validate();
  const auto shift = static_cast<std::size_t>(spec.j * (spec.j + 1));
  const ExactRational sign = spec.j % 2 == 0 ? 1 : -1;
  return Polynomial({sign, sign}).shifted(shift);
}

Polynomial term_denominator(const TermSpec& spec) {
  spec.validate();
  return q_pochhammer(spec.j) * q_pochhammer(spec.d - spec.j);
}

TruncatedSeries term_series(const TermSpec& spec, std::size_t order) {
  const TruncatedSeries inverse = series_invert(TruncatedSeries::from_polynomial(term_denominator(spec), order));
  return series_mul(TruncatedSeries::from_polynomial(term_numerator(spec), order), inverse);
}

PochhammerHead pochhammer_head_at_one(int j) {
  if (j < 0)
    throw DomainError("pochhammer_head_at_one: negative index");
  const unsigned uj = static_cast<unsigned>(j);
  const BigInt jfact = factorial(uj);
  ExactRational leading = ExactRational(pow(ExactRational(2), uj)) * ExactRational(jfact);
  if (j == 0)
    return {leading, ExactRational()};
  ExactRational sub = -(pow(ExactRational(2), uj - 1) * ExactRational(jfact) * ExactRational(j * j));
  return {leading, sub};
}

TermLaurentHead term_laurent_head(const TermSpec& spec) {
  spec.validate();
  const unsigned d = static_cast<unsigned>(spec.d);
  const unsigned j = static_cast<unsigned>(spec.j);
  const ExactRational sign = j % 2 == 0 ? 1 : -1;
  const ExactRational lead =
      sign / (pow(ExactRational(2), d - 1) * ExactRational(factorial(j)) * ExactRational(factorial(d - j)));
  // (d+1)(d/2 - j - 1/2) = (d+1)(d - 2j - 1)/2
  const ExactRational factor = ExactRational(static_cast<long>(d + 1) * (spec.d - 2 * spec.j - 1)) / ExactRational(2);
  return {lead, lead * factor};
}

} // namespace covdeg
