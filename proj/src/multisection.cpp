#include "covdeg/multisection.hpp"

#include "covdeg/error.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace covdeg {

namespace {

std::complex<double> eval_complex(const Polynomial& p, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    acc = acc * z + it->to_double();
  return acc;
}

double scale_of(const Polynomial& p) {
  double s = 0.0;
  for (const auto& c : p.coefficients())
    s += std::abs(c.to_double());
  return s;
}

} // namespace

TruncatedSeries phi_series(const TruncatedSeries& f, int n) {
  if (n < 1)
    throw DomainError("phi_series: n must be positive");
  const auto step = static_cast<std::size_t>(n);
  const std::size_t out_order = f.order() / step;
  std::vector<ExactRational> v(out_order + 1);
  for (std::size_t k = 0; k <= out_order; ++k)
    v[k] = f[k * step];
  return TruncatedSeries(std::move(v));
}

AlphaHead phi_alpha_head(int n, int h) {
  if (n < 1 || h < 1)
    throw DomainError("phi_alpha_head: need n >= 1 and h >= 1");
  AlphaHead out{n, h, pow(ExactRational(n), static_cast<unsigned>(h - 1)), ExactRational()};
  if (h >= 2)
    out.alpha_h_minus_1 =
        -(ExactRational(h * (n - 1)) * pow(ExactRational(n), static_cast<unsigned>(h - 2))) / ExactRational(2);
  return out;
}

double phi_numeric_check(const RationalFunction& f, int n, double sample) {
  if (n < 1)
    throw DomainError("phi_numeric_check: n must be positive");
  if (!(sample > 0.0 && sample < 1.0))
    throw DomainError("phi_numeric_check: sample must lie in (0, 1)");

  const double den_scale = scale_of(f.denominator());
  std::complex<double> average = 0.0;
  for (int j = 0; j < n; ++j) {
    const std::complex<double> zeta = std::polar(1.0, 2.0 * std::numbers::pi * j / n);
    const std::complex<double> z = zeta * sample;
    const std::complex<double> den = eval_complex(f.denominator(), z);
    if (std::abs(den) <= 1e-14 * den_scale)
      throw DomainError("phi_numeric_check: rotated sample hits a pole");
    average += eval_complex(f.numerator(), z) / den;
  }
  average /= static_cast<double>(n);

  // Sum the multisected series at w = sample^n, doubling the truncation
  // order until the last block of terms stops contributing.
  const double w = std::pow(sample, n);
  for (std::size_t terms = 64;; terms *= 2) {
    const TruncatedSeries section = phi_series(f.expand(terms * static_cast<std::size_t>(n)), n);
    double sum = 0.0;
    double tail = 0.0;
    double wk = 1.0;
    for (std::size_t k = 0; k <= section.order(); ++k) {
      const double term = section[k].to_double() * wk;
      sum += term;
      if (k + 8 > section.order())
        tail += std::abs(term);
      wk *= w;
    }
    if (tail <= 1e-17 * std::max(1.0, std::abs(sum)) || terms >= 8192)
      return std::abs(average - sum);
  }
}

} // namespace covdeg
