#include "covdeg/closed_forms.hpp"
#include "covdeg/error.hpp"

#include <doctest.h>

#include <numbers>

using namespace covdeg;

namespace {

ExactRational q(long n, long d = 1) { return ExactRational(BigInt(n), BigInt(d)); }

} // namespace

TEST_CASE("degree of the covariant algebra, small d") {
  CHECK(deg_covariants(1) == q(1));
  CHECK(deg_covariants(2) == q(1, 2));
  CHECK(deg_covariants(3) == q(1, 4));
  CHECK(deg_covariants(4) == q(1, 6));
  CHECK(deg_covariants(5) == q(23, 192));
  CHECK(deg_covariants(6) == q(11, 120));
  CHECK(psi_covariants(2) == q(1, 4));
  CHECK(psi_covariants(4) == q(1, 12));
  CHECK_THROWS_AS(deg_covariants(0), DomainError);
}

TEST_CASE("degree_pair flags d = 1") {
  const DegreePair p1 = degree_pair(1);
  CHECK(p1.degenerate);
  CHECK(p1.degree == q(1));
  CHECK(p1.psi == q(1, 2));
  const DegreePair p3 = degree_pair(3);
  CHECK_FALSE(p3.degenerate);
  CHECK(p3.psi == q(1, 8));
}

TEST_CASE("c_d examples") {
  CHECK(c_constant(1) == q(1));
  CHECK(c_constant(2) == q(1));
  CHECK(c_constant(3) == q(3, 2));
  CHECK(c_constant(4) == q(4));
}

TEST_CASE("signed full sum is twice c_d") {
  for (int d = 1; d <= 12; ++d)
    CHECK_MESSAGE(signed_full_sum(d) == ExactRational(2) * c_constant(d), "d=" << d);
}

TEST_CASE("deg times d! is c_d") {
  for (int d = 1; d <= 50; ++d)
    CHECK(deg_covariants(d) * ExactRational(factorial(static_cast<unsigned>(d))) == c_constant(d));
}

TEST_CASE("deg is positive") {
  for (int d = 1; d <= 200; ++d)
    CHECK(deg_covariants(d).sign() > 0);
}

TEST_CASE("psi doubles to deg") {
  for (int d = 2; d <= 20; ++d)
    CHECK(ExactRational(2) * psi_covariants(d) == deg_covariants(d));
}

TEST_CASE("Hilbert constant as printed") {
  CHECK(deg_invariants_hilbert(3) == q(1, 12));
  CHECK(deg_invariants_hilbert(4) == q(1, 24));
  CHECK(deg_invariants_hilbert(5) == q(1, 192));
  CHECK_THROWS_AS(deg_invariants_hilbert(2), DomainError);
  CHECK_THROWS_AS(deg_invariants_hilbert(1), DomainError);
}

TEST_CASE("Wolstenholme integral examples") {
  CHECK(wolstenholme_integral(1, 1).coefficient == q(1, 2));
  CHECK(wolstenholme_integral(2, 2).coefficient == q(1, 2));
  CHECK(wolstenholme_integral(3, 3).coefficient == q(3, 8));
  CHECK(wolstenholme_integral(4, 4).coefficient == q(1, 3));
  CHECK(wolstenholme_integral(3, 1).coefficient == q(1, 4));
  CHECK(wolstenholme_integral(3, 3).to_string() == "3/8*pi");
  CHECK(wolstenholme_integral(1, 1).value() == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  CHECK_THROWS_AS(wolstenholme_integral(2, 3), DomainError);
  CHECK_THROWS_AS(wolstenholme_integral(2, 0), DomainError);
  CHECK_THROWS_AS(wolstenholme_integral(3, 2), DomainError);
}

TEST_CASE("Wolstenholme at p = s recovers pi c_d / (2 (d-1)!)") {
  for (int d = 1; d <= 30; ++d) {
    const ExactRational expected = c_constant(d) / (ExactRational(2) * ExactRational(factorial(static_cast<unsigned>(d - 1))));
    CHECK_MESSAGE(wolstenholme_integral(d, d).coefficient == expected, "d=" << d);
  }
}
