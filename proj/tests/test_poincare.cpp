#include "oracles.hpp"

#include "covdeg/closed_forms.hpp"
#include "covdeg/error.hpp"
#include "covdeg/partitions.hpp"
#include "covdeg/poincare.hpp"

#include <doctest.h>

using namespace covdeg;

namespace {

ExactRational q(long n, long d = 1) { return ExactRational(BigInt(n), BigInt(d)); }

std::vector<ExactRational> ints(std::initializer_list<long> v) {
  std::vector<ExactRational> c;
  for (long x : v)
    c.emplace_back(x);
  return c;
}

std::vector<ExactRational> coeffs(const TruncatedSeries& s) { return {s.coefficients().begin(), s.coefficients().end()}; }

const Polynomial kOneMinusZ{1, -1};
const Polynomial kOneMinusZ2{1, 0, -1};
const Polynomial kOneMinusZ4{1, 0, 0, 0, -1};

RationalFunction binary_quadratic() { return rf_normalize(Polynomial{1}, kOneMinusZ * kOneMinusZ2); }
RationalFunction binary_cubic() { return rf_normalize(Polynomial{1, 0, 0, 1}, kOneMinusZ * kOneMinusZ2 * kOneMinusZ4); }

} // namespace

TEST_CASE("covariant_series examples") {
  const TruncatedSeries s1 = covariant_series(1, 12);
  for (const auto& c : s1.coefficients())
    CHECK(c == q(1));
  CHECK(coeffs(covariant_series(2, 5)) == ints({1, 1, 2, 2, 3, 3}));
  CHECK(coeffs(covariant_series(3, 4)) == ints({1, 1, 2, 3, 5}));
  CHECK(covariant_series(3, 20) == binary_cubic().expand(20));
  CHECK_THROWS_AS(covariant_series(0, 4), DomainError);
}

TEST_CASE("covariant_series matches the partition oracle") {
  for (int d = 1; d <= 12; ++d) {
    const TruncatedSeries s = covariant_series(d, 30);
    for (int i = 0; i <= 30; ++i)
      CHECK_MESSAGE(s[static_cast<std::size_t>(i)] == ExactRational(dim_covariants(d, i)), "d=" << d << " i=" << i);
  }
}

TEST_CASE("reconstruct_rational examples") {
  const TruncatedSeries ones(ints({1, 1, 1, 1, 1, 1, 1}));
  const RationalFunction geo = reconstruct_rational(ones, 0, 1, 5);
  CHECK(geo.numerator() == Polynomial{1});
  CHECK(geo.denominator() == kOneMinusZ);

  const RationalFunction quad = reconstruct_rational(covariant_series(2, 13), 0, 3, 10);
  CHECK(quad.numerator() == Polynomial{1});
  CHECK(quad.denominator() == Polynomial{1, -1, -1, 1});
}

TEST_CASE("reconstruct_rational rejects a factorial series at every small bound") {
  std::vector<ExactRational> c;
  for (unsigned i = 0; i <= 30; ++i)
    c.emplace_back(factorial(i));
  const TruncatedSeries f(std::move(c));
  for (std::size_t a = 0; a <= 8; ++a)
    for (std::size_t b = 0; b <= 8; ++b)
      CHECK_THROWS_AS(reconstruct_rational(f, a, b, 10), ReconstructionError);
}

TEST_CASE("reconstruct_rational preconditions") {
  CHECK_THROWS_AS(reconstruct_rational(TruncatedSeries(ints({1, 1, 1})), 1, 1, 5), DomainError);
  CHECK_THROWS_AS(reconstruct_rational(TruncatedSeries(ints({2, 1, 1, 1, 1, 1, 1, 1})), 0, 1, 5), DomainError);
}

TEST_CASE("reconstruct_rational finds random rational functions and detects wrong bounds") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    Polynomial num = oracle::random_polynomial(rng, 5);
    Polynomial den = oracle::random_polynomial(rng, 5);
    if (num.coeff(0).is_zero() || den.coeff(0).is_zero() || den.degree() < 1)
      continue;
    num = num.scaled(ExactRational(1) / num.coeff(0));
    den = den.scaled(ExactRational(1) / den.coeff(0));
    const RationalFunction truth = rf_normalize(num, den);
    const std::size_t a = static_cast<std::size_t>(std::max(0, truth.numerator().degree()));
    const std::size_t b = static_cast<std::size_t>(truth.denominator().degree());
    CHECK(reconstruct_rational(truth.expand(a + b + 12), a, b, 10) == truth);
    // generous bounds still land on the reduced answer
    CHECK(reconstruct_rational(truth.expand(a + b + 18), a + 3, b + 3, 10) == truth);
    if (b > 0)
      CHECK_THROWS_AS(reconstruct_rational(truth.expand(a + b + 12), a, b - 1, 10), ReconstructionError);
  }
}

TEST_CASE("laurent_at_one examples") {
  const LaurentHead a = laurent_at_one(rf_normalize(Polynomial{1}, kOneMinusZ), 1);
  CHECK(a.pole_order == 1);
  CHECK(a.coefficients == ints({1}));

  const LaurentHead b = laurent_at_one(binary_quadratic(), 2);
  CHECK(b.pole_order == 2);
  CHECK(b.coefficients == std::vector<ExactRational>{q(1, 2), q(1, 4)});

  const LaurentHead c = laurent_at_one(binary_cubic(), 2);
  CHECK(c.pole_order == 3);
  CHECK(c.coefficients == std::vector<ExactRational>{q(1, 4), q(1, 8)});

  CHECK_THROWS_AS(laurent_at_one(rf_normalize(Polynomial{1, 1}, Polynomial{1}), 2), DomainError);
  CHECK_THROWS_AS(laurent_at_one(rf_normalize(kOneMinusZ, kOneMinusZ2), 2), DomainError);
}

TEST_CASE("laurent_at_one agrees with a direct substitution") {
  // 1/((1-z)^2 (1+z)): u = 1 - z, 1/(2 - u) = 1/2 + u/4 + u^2/8 + ...
  const LaurentHead h = laurent_at_one(rf_normalize(Polynomial{1}, kOneMinusZ * kOneMinusZ2), 4);
  CHECK(h.coefficients == std::vector<ExactRational>{q(1, 2), q(1, 4), q(1, 8), q(1, 16)});
}

TEST_CASE("gorenstein_check examples") {
  const GorensteinReport r2 = gorenstein_check(binary_quadratic(), 2);
  CHECK(r2.equation_holds);
  CHECK(r2.q == 3);
  CHECK(r2.expected_q == 3);

  const GorensteinReport r3 = gorenstein_check(binary_cubic(), 3);
  CHECK(r3.equation_holds);
  CHECK(r3.q == 4);
  CHECK(r3.expected_q == 4);

  const GorensteinReport r1 = gorenstein_check(rf_normalize(Polynomial{1}, kOneMinusZ), 1);
  CHECK(r1.equation_holds);
  CHECK(r1.q == 1);
  CHECK(r1.expected_q == 2);
}

TEST_CASE("functional equation detects the wrong sign or shift") {
  const RationalFunction f = binary_quadratic();
  CHECK(satisfies_functional_equation(f, 1, 3));
  CHECK_FALSE(satisfies_functional_equation(f, -1, 3));
  CHECK_FALSE(satisfies_functional_equation(f, 1, 2));
  CHECK_FALSE(satisfies_functional_equation(f, 1, 4));
  // (1 + 2z)/(1 - z) is not palindromic up to sign
  CHECK_FALSE(gorenstein_check(rf_normalize(Polynomial{1, 2}, kOneMinusZ), 1).equation_holds);
}

TEST_CASE("reconstruction bound schedule") {
  CHECK(initial_denominator_bound(10) == 65);
  CHECK(denominator_degree_limit(10) == 410);
  CHECK(denominator_degree_limit(1) == 2);
  CHECK(initial_denominator_bound(2) == 5);
}

TEST_CASE("reconstructed Poincare series: fidelity, Laurent head, Gorenstein") {
  for (int d = 1; d <= 10; ++d) {
    CAPTURE(d);
    const PoincareSeries p = poincare_series(d);
    CHECK(p.series.expand(p.order_used) == covariant_series(d, p.order_used));
    CHECK(p.series.denominator().coeff(0) == q(1));

    const LaurentHead head = laurent_at_one(p.series, 2);
    const GorensteinReport g = gorenstein_check(p.series, d);
    CHECK(g.equation_holds);
    CHECK(head.coefficients[0] == deg_covariants(d));
    if (d == 1) {
      CHECK(head.pole_order == 1);
      CHECK(head.coefficients[1] == q(0));
      CHECK(g.q == 1);
    } else {
      CHECK(head.pole_order == d);
      CHECK(head.coefficients[1] == psi_covariants(d));
      CHECK(g.q == d + 1);
      CHECK(ExactRational(2) * head.coefficients[1] / head.coefficients[0] == ExactRational(g.q - d));
    }
  }
}

TEST_CASE("P(C_3) in closed form") {
  const PoincareSeries p = poincare_series(3);
  CHECK(p.series == binary_cubic());
  CHECK(p.series.numerator() == Polynomial{1, -1, 1});
}
