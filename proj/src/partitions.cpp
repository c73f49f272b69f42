#include "covdeg/partitions.hpp"

#include "covdeg/error.hpp"

#include <cstdint>
#include <optional>
#include <type_traits>

namespace covdeg {

namespace {

// Rows over the part bound b = 0..d, each indexed [k][w] for at most k parts:
//   N(b, k, w) = N(b, k-1, w) + N(b-1, k, w-k)
// The second term removes one from each of exactly k parts.
template <typename Count>
std::optional<std::vector<Count>> partition_row(int d, int n) {
  const auto width = static_cast<std::size_t>(d) * static_cast<std::size_t>(n) + 1;
  const auto parts = static_cast<std::size_t>(n) + 1;
  // prev[k][w] = N(b-1, k, w); b = 0 allows only the empty partition.
  std::vector<std::vector<Count>> prev(parts, std::vector<Count>(width, Count(0)));
  for (auto& row : prev)
    row[0] = Count(1);

  for (int b = 1; b <= d; ++b) {
    std::vector<std::vector<Count>> cur(parts, std::vector<Count>(width, Count(0)));
    cur[0][0] = Count(1);
    for (std::size_t k = 1; k < parts; ++k) {
      for (std::size_t w = 0; w < width; ++w) {
        Count v = cur[k - 1][w];
        if (w >= k) {
          if constexpr (std::is_same_v<Count, std::uint64_t>) {
            if (__builtin_add_overflow(v, prev[k][w - k], &v))
              return std::nullopt;
          } else {
            v += prev[k][w - k];
          }
        }
        cur[k][w] = v;
      }
    }
    prev = std::move(cur);
  }
  return std::move(prev[static_cast<std::size_t>(n)]);
}

} // namespace

PartitionTable::PartitionTable(int d, int n) : d_(d), n_(n) {
  if (d < 0 || n < 0)
    throw DomainError("PartitionTable: negative box dimension");
  // Machine words first; promote to GMP only on overflow.
  if (auto fast = partition_row<std::uint64_t>(d, n)) {
    counts_.reserve(fast->size());
    for (std::uint64_t v : *fast)
      counts_.emplace_back(static_cast<unsigned long>(v));
  } else {
    counts_ = *partition_row<BigInt>(d, n);
  }
}

BigInt PartitionTable::count(long w) const {
  if (w < 0 || static_cast<std::size_t>(w) >= counts_.size())
    return 0;
  return counts_[static_cast<std::size_t>(w)];
}

BigInt partition_count(int d, int n, long w) {
  if (d < 0 || n < 0)
    throw DomainError("partition_count: negative box dimension");
  if (w < 0 || w > static_cast<long>(d) * n)
    return 0;
  return PartitionTable(d, n).count(w);
}

BigInt dim_covariants(int d, int i) {
  if (d < 1 || i < 0)
    throw DomainError("dim_covariants: need d >= 1 and i >= 0");
  return partition_count(d, i, static_cast<long>(d) * i / 2);
}

BigInt dim_covariants_by_order(int d, int i) {
  if (d < 1 || i < 0)
    throw DomainError("dim_covariants_by_order: need d >= 1 and i >= 0");
  const PartitionTable table(d, i);
  const long top = static_cast<long>(d) * i;
  BigInt total = 0;
  for (long m = top % 2; m <= top; m += 2) {
    const long w = (top - m) / 2;
    total += table.count(w) - table.count(w - 1);
  }
  return total;
}

namespace serial {

std::vector<BigInt> dim_covariants_range(int d, int max_i) {
  std::vector<BigInt> out;
  for (int i = 0; i <= max_i; ++i)
    out.push_back(dim_covariants(d, i));
  return out;
}

} // namespace serial

namespace parallel {

std::vector<BigInt> dim_covariants_range(int d, int max_i) {
  if (d < 1)
    throw DomainError("dim_covariants_range: d must be positive");
  std::vector<BigInt> out(static_cast<std::size_t>(max_i < 0 ? 0 : max_i + 1));
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = max_i; i >= 0; --i)
    out[static_cast<std::size_t>(i)] = partition_count(d, i, static_cast<long>(d) * i / 2);
  return out;
}

} // namespace parallel

} // namespace covdeg
