#include "oracles.hpp"
#include "report.hpp"

#include "covdeg/partitions.hpp"
#include "covdeg/poincare.hpp"
#include "covdeg/series.hpp"

#include <doctest.h>

using namespace covdeg;

TEST_CASE("parallel Cauchy product equals the serial one") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {1u, 5u, 40u, 120u}) {
    std::vector<ExactRational> a(n), b(n + 3);
    for (auto& x : a)
      x = oracle::random_rational(rng);
    for (auto& x : b)
      x = oracle::random_rational(rng);
    // sparse operand exercises the zero-skipping path
    for (std::size_t i = 0; i < b.size(); i += 3)
      b[i] = ExactRational();
    for (std::size_t order : {std::size_t{0}, n - 1, n + 2, 2 * n})
      CHECK(parallel::cauchy_product(a, b, order) == serial::cauchy_product(a, b, order));
  }
}

TEST_CASE("parallel covariant series equals the serial one") {
  for (int d = 1; d <= 10; ++d)
    CHECK_MESSAGE(parallel::covariant_series(d, 60) == serial::covariant_series(d, 60), "d=" << d);
}

TEST_CASE("parallel dimension range equals the serial one") {
  for (int d = 1; d <= 8; ++d)
    CHECK(parallel::dim_covariants_range(d, 30) == serial::dim_covariants_range(d, 30));
}

TEST_CASE("parallel verify_range equals the serial one") {
  const auto a = serial::verify_range(1, 6, 20);
  const auto b = parallel::verify_range(1, 6, 20);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].d == b[i].d);
    CHECK(a[i].overall() == b[i].overall());
    CHECK(a[i].flags == b[i].flags);
    REQUIRE(a[i].checks.size() == b[i].checks.size());
    for (std::size_t k = 0; k < a[i].checks.size(); ++k) {
      CHECK(a[i].checks[k].name == b[i].checks[k].name);
      CHECK(a[i].checks[k].actual == b[i].checks[k].actual);
    }
  }
}

TEST_CASE("verify_degree passes for small d") {
  for (int d = 1; d <= 6; ++d) {
    const VerificationReport r = verify_degree(d, 20);
    CHECK_MESSAGE(r.overall(), "d=" << d);
    CHECK_FALSE(r.reconstruction_failed);
  }
  CHECK(verify_degree(1, 10).flags == std::vector<std::string>{"d=1 degenerate"});
  CHECK(verify_degree(4, 10).flags.empty());
}
