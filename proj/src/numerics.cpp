#include "covdeg/numerics.hpp"

#include "covdeg/closed_forms.hpp"
#include "covdeg/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>

namespace covdeg {

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGauss = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

double sinc_pow(double x, int d) {
  if (x < 1e-8)
    return 1.0;
  return std::pow(std::sin(x) / x, d);
}

Panel gauss_kronrod(double a, double b, int d) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = sinc_pow(mid, d);
  double kronrod = kKronrod[7] * fc;
  double gauss = kGauss[3] * fc;
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double pair = sinc_pow(mid - dx, d) + sinc_pow(mid + dx, d);
    kronrod += kKronrod[i] * pair;
    if (i % 2 == 1)
      gauss += kGauss[i / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

// Smallest X >= pi/2 with bound(X) <= budget, for a bound decreasing in X.
template <typename Bound>
double cutoff_for(Bound bound, double budget) {
  double lo = std::numbers::pi / 2;
  if (bound(lo) <= budget)
    return lo;
  double hi = lo;
  while (bound(hi) > budget)
    hi *= 2;
  for (int i = 0; i < 200 && hi - lo > 1e-6 * hi; ++i) {
    const double m = 0.5 * (lo + hi);
    (bound(m) > budget ? lo : hi) = m;
  }
  return hi;
}

constexpr std::size_t kMaxPanels = 4'000'000;

} // namespace

double integral_sinc_pow(int d, double tol) {
  if (d < 1)
    throw DomainError("integral_sinc_pow: d must be positive");
  if (!(tol >= 1e-12))
    throw DomainError("integral_sinc_pow: tol must be >= 1e-12");
  if (d == 1)
    return std::numbers::pi / 2;

  const double dd = d;
  const double tail_budget = tol / 2;
  const double plain_cutoff = cutoff_for([&](double x) { return std::pow(x, 1 - dd) / (dd - 1); }, tail_budget);
  const double fourier_cutoff = cutoff_for([&](double x) { return 2 * std::pow(x, -dd); }, tail_budget);
  const double cutoff_x = std::min(plain_cutoff, fourier_cutoff);
  // Mean value of sin^d over a period; zero for odd d.
  const double mean = d % 2 == 0 ? std::exp(std::lgamma(dd + 1) - 2 * std::lgamma(dd / 2 + 1) - dd * std::log(2.0)) : 0.0;
  const double tail = mean * std::pow(cutoff_x, 1 - dd) / (dd - 1);

  std::priority_queue<Panel> work;
  double total = 0.0;
  double error = 0.0;
  auto push = [&](Panel p) {
    total += p.value;
    error += p.error;
    work.push(p);
  };
  push(gauss_kronrod(0.0, std::numbers::pi / 2, d));
  for (double a = std::numbers::pi / 2; a < cutoff_x; a += std::numbers::pi)
    push(gauss_kronrod(a, std::min(a + std::numbers::pi, cutoff_x), d));

  const double quad_budget = tol / 2;
  while (error > quad_budget) {
    if (work.size() >= kMaxPanels)
      throw AccuracyError("integral_sinc_pow: tolerance " + std::to_string(tol) + " not reached for d=" +
                          std::to_string(d));
    const Panel worst = work.top();
    work.pop();
    total -= worst.value;
    error -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    push(gauss_kronrod(worst.a, mid, d));
    push(gauss_kronrod(mid, worst.b, d));
  }

  // Re-sum to drop the drift from the running add/subtract.
  double resummed = 0.0;
  while (!work.empty()) {
    resummed += work.top().value;
    work.pop();
  }
  return resummed + tail;
}

std::vector<AsymptoticSample> asymptotic_scan(std::span<const int> d_values) {
  std::vector<AsymptoticSample> out;
  out.reserve(d_values.size());
  for (int d : d_values) {
    if (d < 2)
      throw DomainError("asymptotic_scan: d must be >= 2");
    // I_d / pi = c_d / (2 (d-1)!)
    const ExactRational ratio =
        c_constant(d) / (ExactRational(2) * ExactRational(factorial(static_cast<unsigned>(d - 1))));
    const double value = std::sqrt(static_cast<double>(d)) * std::numbers::pi * ratio.to_double();
    out.push_back({d, value, kSincPowerLimit, std::abs(value - kSincPowerLimit) / kSincPowerLimit});
  }
  return out;
}

AsymptoticSample deg_asymptotic_ratio(int d) {
  if (d < 2)
    throw DomainError("deg_asymptotic_ratio: d must be >= 2");
  const double value = deg_covariants(d).to_double() * std::pow(static_cast<double>(d), 1.5);
  return {d, value, kDegreeLimit, std::abs(value - kDegreeLimit) / kDegreeLimit};
}

} // namespace covdeg
