#include "oracles.hpp"

#include "covdeg/closed_forms.hpp"
#include "covdeg/error.hpp"
#include "covdeg/numerics.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace covdeg;

TEST_CASE("integral_sinc_pow examples") {
  const double pi = std::numbers::pi;
  CHECK(integral_sinc_pow(1, 1e-9) == doctest::Approx(pi / 2).epsilon(1e-12));
  CHECK(std::abs(integral_sinc_pow(2, 1e-9) - pi / 2) < 1e-8);
  CHECK(std::abs(integral_sinc_pow(3, 1e-9) - 3 * pi / 8) < 1e-8);
  CHECK(std::abs(integral_sinc_pow(4, 1e-9) - pi / 3) < 1e-8);
}

TEST_CASE("quadrature agrees with the closed form") {
  for (int d = 1; d <= 12; ++d)
    CHECK_MESSAGE(std::abs(integral_sinc_pow(d, 1e-9) - wolstenholme_integral(d, d).value()) <= 1e-8, "d=" << d);
}

TEST_CASE("quadrature agrees with an independent Simpson rule") {
  // the integrand decays like x^-d; for d >= 6 the tail past 60 is below 1e-10
  for (int d = 6; d <= 9; ++d) {
    auto f = [d](double x) { return x == 0.0 ? 1.0 : std::pow(std::sin(x) / x, d); };
    CHECK(std::abs(integral_sinc_pow(d, 1e-9) - oracle::simpson(f, 0.0, 60.0, 200000)) < 1e-8);
  }
}

TEST_CASE("integral_sinc_pow preconditions") {
  CHECK_THROWS_AS(integral_sinc_pow(0, 1e-9), DomainError);
  CHECK_THROWS_AS(integral_sinc_pow(3, 1e-13), DomainError);
  CHECK_THROWS_AS(integral_sinc_pow(3, std::nan("")), DomainError);
}

TEST_CASE("asymptotic_scan examples") {
  const std::vector<int> ds{2, 3};
  const auto s = asymptotic_scan(ds);
  REQUIRE(s.size() == 2);
  CHECK(s[0].value == doctest::Approx(2.2214415).epsilon(1e-7));
  CHECK(s[0].target == doctest::Approx(2.1708038).epsilon(1e-7));
  CHECK(s[0].rel_error == doctest::Approx(0.0233).epsilon(1e-2));
  CHECK(s[1].value == doctest::Approx(std::sqrt(3.0) * 3 * std::numbers::pi / 8).epsilon(1e-12));
  CHECK(s[1].value == doctest::Approx(2.0405243).epsilon(1e-7));
  CHECK(kDegreeLimit == doctest::Approx(1.3819765).epsilon(1e-7));
  CHECK(deg_asymptotic_ratio(4).value == doctest::Approx(1.3333333).epsilon(1e-7));
  const std::vector<int> bad{1};
  CHECK_THROWS_AS(asymptotic_scan(bad), DomainError);
  CHECK_THROWS_AS(deg_asymptotic_ratio(1), DomainError);
}

TEST_CASE("the two scaled quantities differ by a fixed factor") {
  // c_d = d! deg(C_d) gives sqrt(d) I_d = (pi/2) d^{3/2} deg(C_d)
  std::vector<int> ds;
  for (int d = 2; d <= 400; d += 7)
    ds.push_back(d);
  const auto scan = asymptotic_scan(ds);
  for (const auto& s : scan) {
    const double ratio = s.value / deg_asymptotic_ratio(s.d).value;
    CHECK(std::abs(ratio / (std::numbers::pi / 2) - 1.0) < 1e-12);
  }
}

TEST_CASE("relative error falls with d and is under one percent at 400") {
  const std::vector<int> ds{50, 100, 200, 400};
  const auto s = asymptotic_scan(ds);
  for (std::size_t i = 1; i < s.size(); ++i)
    CHECK(s[i].rel_error < s[i - 1].rel_error);
  CHECK(s.back().rel_error < 0.01);
}

TEST_CASE("the integral is positive for odd d") {
  // pairing x and x + pi on each period: the first half-period dominates
  for (int d = 1; d <= 9; d += 2) {
    auto f = [d](double x) { return x == 0.0 ? 1.0 : std::pow(std::sin(x) / x, d); };
    for (int k = 0; k < 20; ++k) {
      const double a = 2 * k * std::numbers::pi;
      const double pos = oracle::simpson(f, a, a + std::numbers::pi, 2000);
      const double neg = oracle::simpson(f, a + std::numbers::pi, a + 2 * std::numbers::pi, 2000);
      CHECK(pos + neg > 0.0);
    }
    CHECK(integral_sinc_pow(d, 1e-9) > 0.0);
  }
}
