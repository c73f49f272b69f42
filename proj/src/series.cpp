#include "covdeg/series.hpp"

#include "covdeg/error.hpp"

#include <algorithm>

namespace covdeg {

namespace {

std::vector<std::size_t> nonzero_positions(std::span<const ExactRational> v, std::size_t limit) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < std::min(limit, v.size()); ++i)
    if (!v[i].is_zero())
      out.push_back(i);
  return out;
}

ExactRational product_coefficient(std::span<const ExactRational> sparse, std::span<const std::size_t> nz,
                                  std::span<const ExactRational> dense, std::size_t k) {
  ExactRational acc;
  for (std::size_t i : nz) {
    if (i > k)
      break;
    if (k - i < dense.size())
      acc.addmul(sparse[i], dense[k - i]);
  }
  return acc;
}

// Products below this many multiply-adds are not worth a parallel region.
constexpr std::size_t kParallelWork = 4096;

} // namespace

TruncatedSeries::TruncatedSeries(std::vector<ExactRational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty())
    throw DomainError("TruncatedSeries: needs at least the constant coefficient");
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, std::size_t order) {
  std::vector<ExactRational> v(order + 1);
  const auto c = p.coefficients();
  std::copy_n(c.begin(), std::min(c.size(), v.size()), v.begin());
  return TruncatedSeries(std::move(v));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > this->order())
    throw DomainError("TruncatedSeries: cannot extend a truncated series");
  return TruncatedSeries(std::vector<ExactRational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
}

namespace serial {

std::vector<ExactRational> cauchy_product(std::span<const ExactRational> a, std::span<const ExactRational> b,
                                          std::size_t order) {
  auto nz_a = nonzero_positions(a, order + 1);
  auto nz_b = nonzero_positions(b, order + 1);
  const bool a_sparse = nz_a.size() <= nz_b.size();
  std::vector<ExactRational> out(order + 1);
  for (std::size_t k = 0; k <= order; ++k)
    out[k] = a_sparse ? product_coefficient(a, nz_a, b, k) : product_coefficient(b, nz_b, a, k);
  return out;
}

} // namespace serial

namespace parallel {

std::vector<ExactRational> cauchy_product(std::span<const ExactRational> a, std::span<const ExactRational> b,
                                          std::size_t order) {
  auto nz_a = nonzero_positions(a, order + 1);
  auto nz_b = nonzero_positions(b, order + 1);
  const bool a_sparse = nz_a.size() <= nz_b.size();
  const auto sparse = a_sparse ? a : b;
  const auto dense = a_sparse ? b : a;
  const auto& nz = a_sparse ? nz_a : nz_b;

  std::vector<ExactRational> out(order + 1);
  const auto n = static_cast<long>(order + 1);
  [[maybe_unused]] const bool worth_it = nz.size() * (order + 1) >= kParallelWork;
#pragma omp parallel for schedule(dynamic, 8) if (worth_it)
  for (long k = 0; k < n; ++k)
    out[static_cast<std::size_t>(k)] = product_coefficient(sparse, nz, dense, static_cast<std::size_t>(k));
  return out;
}

} // namespace parallel

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  return TruncatedSeries(parallel::cauchy_product(a.coefficients(), b.coefficients(), order));
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  std::vector<ExactRational> v(order + 1);
  for (std::size_t i = 0; i <= order; ++i)
    v[i] = a[i] + b[i];
  return TruncatedSeries(std::move(v));
}

TruncatedSeries series_invert(const TruncatedSeries& f) {
  if (f[0].is_zero())
    throw DomainError("series_invert: zero constant term");
  const std::size_t order = f.order();
  const ExactRational inv0 = ExactRational(1) / f[0];
  // g_k = -(1/f_0) * sum_{i>=1} f_i g_{k-i}, iterating only over nonzero f_i
  std::vector<std::size_t> nz;
  for (std::size_t i = 1; i <= order; ++i)
    if (!f[i].is_zero())
      nz.push_back(i);

  std::vector<ExactRational> g(order + 1);
  g[0] = inv0;
  for (std::size_t k = 1; k <= order; ++k) {
    ExactRational acc;
    for (std::size_t i : nz) {
      if (i > k)
        break;
      acc.addmul(f[i], g[k - i]);
    }
    g[k] = -(acc * inv0);
  }
  return TruncatedSeries(std::move(g));
}

TruncatedSeries series_quotient(const Polynomial& num, const Polynomial& den, std::size_t order) {
  if (den.coeff(0).is_zero())
    throw DomainError("series_quotient: denominator vanishes at z = 0");
  const auto dc = den.coefficients();
  const ExactRational inv0 = ExactRational(1) / dc[0];
  std::vector<std::size_t> nz;
  for (std::size_t i = 1; i < dc.size(); ++i)
    if (!dc[i].is_zero())
      nz.push_back(i);

  std::vector<ExactRational> g(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    ExactRational acc = num.coeff(k);
    for (std::size_t i : nz) {
      if (i > k)
        break;
      acc.submul(dc[i], g[k - i]);
    }
    g[k] = acc * inv0;
  }
  return TruncatedSeries(std::move(g));
}

} // namespace covdeg
