#include "covdeg/poincare.hpp"

#include "covdeg/error.hpp"
#include "covdeg/multisection.hpp"
#include "covdeg/qseries.hpp"

#include <string>

namespace covdeg {

namespace {

void check_degree(int d) {
  if (d < 1)
    throw DomainError("covariant_series: d must be positive, got " + std::to_string(d));
}

TruncatedSeries multisected_term(int d, int j, std::size_t order) {
  const int n = d - 2 * j;
  const TruncatedSeries t = term_series({d, j}, order * static_cast<std::size_t>(n));
  return phi_series(t, n);
}

TruncatedSeries sum_terms(std::vector<TruncatedSeries>& parts, std::size_t order) {
  std::vector<ExactRational> acc(order + 1);
  for (const auto& p : parts)
    for (std::size_t i = 0; i <= order; ++i)
      acc[i] += p[i];
  return TruncatedSeries(std::move(acc));
}

} // namespace

namespace serial {

TruncatedSeries covariant_series(int d, std::size_t order) {
  check_degree(d);
  std::vector<TruncatedSeries> parts;
  for (int j = 0; 2 * j < d; ++j)
    parts.push_back(multisected_term(d, j, order));
  return sum_terms(parts, order);
}

} // namespace serial

namespace parallel {

TruncatedSeries covariant_series(int d, std::size_t order) {
  check_degree(d);
  const int terms = (d + 1) / 2;
  std::vector<TruncatedSeries> parts(static_cast<std::size_t>(terms), TruncatedSeries({ExactRational()}));
  // j = 0 carries the largest expansion; dynamic scheduling hands it out first.
#pragma omp parallel for schedule(dynamic, 1)
  for (int j = 0; j < terms; ++j)
    parts[static_cast<std::size_t>(j)] = multisected_term(d, j, order);
  return sum_terms(parts, order);
}

} // namespace parallel

TruncatedSeries covariant_series(int d, std::size_t order) { return parallel::covariant_series(d, order); }

RationalFunction reconstruct_rational(const TruncatedSeries& f, std::size_t num_bound, std::size_t den_bound,
                                      std::size_t guard) {
  const std::size_t window = num_bound + den_bound + 1;
  if (f.order() + 1 < window + guard)
    throw DomainError("reconstruct_rational: need " + std::to_string(window + guard) + " coefficients, have " +
                      std::to_string(f.order() + 1));
  if (f[0] != ExactRational(1))
    throw DomainError("reconstruct_rational: series must start with 1");

  // Extended Euclid on (z^K, f mod z^K), keeping r_i = t_i f mod z^K, stopped
  // at the first remainder of degree <= num_bound.
  Polynomial r_prev = Polynomial::monomial(1, window);
  Polynomial r = f.truncated(window - 1).to_polynomial();
  Polynomial t_prev;
  Polynomial t = Polynomial::constant(1);
  while (r.degree() > static_cast<int>(num_bound)) {
    auto [q, rem] = poly_divmod(r_prev, r);
    Polynomial t_next = t_prev - q * t;
    if (!rem.is_zero()) {
      const ExactRational scale = ExactRational(1) / rem.leading();
      rem = rem.scaled(scale);
      t_next = t_next.scaled(scale);
    }
    r_prev = std::move(r);
    r = std::move(rem);
    t_prev = std::move(t);
    t = std::move(t_next);
  }

  if (t.degree() > static_cast<int>(den_bound) || t.coeff(0).is_zero())
    throw ReconstructionError("reconstruct_rational: no solution with deg num <= " + std::to_string(num_bound) +
                              ", deg den <= " + std::to_string(den_bound));
  RationalFunction out = rf_normalize(r, t);

  const TruncatedSeries check = out.expand(window - 1 + guard);
  for (std::size_t i = 0; i <= check.order(); ++i)
    if (check[i] != f[i])
      throw ReconstructionError("reconstruct_rational: coefficient " + std::to_string(i) +
                                " not reproduced (guard mismatch)");
  return out;
}

LaurentHead laurent_at_one(const RationalFunction& f, std::size_t terms) {
  // z = 1 - u: f = u^{-(vb - va)} (A~/u^va) / (B~/u^vb) with both quotients regular.
  const Polynomial num = f.numerator().at_one_minus();
  const Polynomial den = f.denominator().at_one_minus();
  if (num.is_zero())
    throw DomainError("laurent_at_one: zero function");
  const std::size_t va = num.valuation();
  const std::size_t vb = den.valuation();
  if (vb <= va)
    throw DomainError("laurent_at_one: no pole at z = 1");

  LaurentHead head;
  head.pole_order = static_cast<int>(vb - va);
  if (terms == 0)
    return head;
  const TruncatedSeries regular = series_quotient(num.unshifted(va), den.unshifted(vb), terms - 1);
  head.coefficients.assign(regular.coefficients().begin(), regular.coefficients().end());
  return head;
}

bool satisfies_functional_equation(const RationalFunction& f, int sign, long q) {
  // Multiply f(1/z) = sign z^q f(z) through by z^{deg A + deg B}:
  //   rev(A) * B * z^{deg B} = sign * z^{q + deg A} * A * rev(B)
  const Polynomial& a = f.numerator();
  const Polynomial& b = f.denominator();
  if (a.is_zero())
    return true;
  Polynomial lhs = a.reversed() * b;
  Polynomial rhs = (a * b.reversed()).scaled(ExactRational(sign));
  long lhs_shift = b.degree();
  long rhs_shift = q + a.degree();
  const long common = std::min(lhs_shift, rhs_shift);
  lhs_shift -= common;
  rhs_shift -= common;
  return lhs.shifted(static_cast<std::size_t>(lhs_shift)) == rhs.shifted(static_cast<std::size_t>(rhs_shift));
}

GorensteinReport gorenstein_check(const RationalFunction& f, int d) {
  GorensteinReport report;
  report.d = d;
  report.q = static_cast<long>(f.denominator().degree()) - f.numerator().degree();
  report.expected_q = d + 1;
  report.equation_holds = satisfies_functional_equation(f, d % 2 == 0 ? 1 : -1, report.q);
  return report;
}

std::size_t initial_denominator_bound(int d) {
  check_degree(d);
  const auto ud = static_cast<std::size_t>(d);
  return ud * (ud + 1) / 2 + ud;
}

std::size_t denominator_degree_limit(int d) {
  check_degree(d);
  std::size_t total = 0;
  for (int j = 0; 2 * j < d; ++j)
    total += static_cast<std::size_t>(j * (j + 1) + (d - j) * (d - j + 1));
  return total;
}

PoincareSeries poincare_series(int d, std::size_t guard) {
  const std::size_t limit = denominator_degree_limit(d);
  const auto expected_gap = static_cast<std::size_t>(d + 1);
  std::size_t den_bound = initial_denominator_bound(d);

  for (int attempt = 1; den_bound <= limit || attempt == 1; ++attempt, den_bound *= 2) {
    std::size_t num_bound = den_bound > expected_gap ? den_bound - expected_gap : 0;
    if (attempt > 1)
      num_bound += 2;
    const std::size_t order = num_bound + den_bound + guard;
    const TruncatedSeries series = covariant_series(d, order);
    try {
      RationalFunction f = reconstruct_rational(series, num_bound, den_bound, guard);
      return PoincareSeries{d, std::move(f), num_bound, den_bound, order, attempt};
    } catch (const ReconstructionError&) {
    }
  }
  throw ReconstructionError("poincare_series: no reconstruction for d=" + std::to_string(d) +
                            " within denominator degree " + std::to_string(limit));
}

} // namespace covdeg
