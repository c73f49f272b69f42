#pragma once

// Test-only oracles. Nothing here calls into the series or partition code
// under test.

#include "covdeg/exact.hpp"
#include "covdeg/polynomial.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace covdeg::oracle {

/// Number of ways to write w as a sum of parts drawn (with repetition) from
/// `parts`, by recursive enumeration.
inline std::uint64_t count_compositions_from_parts(const std::vector<int>& parts, int w, std::size_t first = 0) {
  if (w == 0)
    return 1;
  std::uint64_t total = 0;
  for (std::size_t i = first; i < parts.size(); ++i)
    if (parts[i] <= w)
      total += count_compositions_from_parts(parts, w - parts[i], i);
  return total;
}

/// Partitions of w into at most n parts, each <= max_part, by enumerating
/// non-increasing sequences.
inline std::uint64_t enumerate_box_partitions(int max_part, int n, int w) {
  if (w == 0)
    return 1;
  if (n == 0 || max_part == 0)
    return 0;
  std::uint64_t total = 0;
  for (int first = std::min(max_part, w); first >= 1; --first)
    total += enumerate_box_partitions(first, n - 1, w - first);
  return total;
}

/// Composite Simpson on [a, b] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i)
    s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return s * h / 3.0;
}

inline ExactRational random_rational(std::mt19937_64& rng, int span = 20) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, span);
  return ExactRational(BigInt(num(rng)), BigInt(den(rng)));
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int max_degree, int span = 9) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<ExactRational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c)
    x = random_rational(rng, span);
  return Polynomial(std::move(c));
}

} // namespace covdeg::oracle
