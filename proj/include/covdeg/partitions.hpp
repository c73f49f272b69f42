#pragma once

/**
 * @file partitions.hpp
 * @brief Brute-force dimensions of the graded pieces of C_d.
 *
 * By Cayley-Sylvester, the multiplicity of the order-m covariants of degree i
 * is N(d,i,w) - N(d,i,w-1) with w = (di - m)/2, where N(d,n,w) counts
 * partitions of w into at most n parts, each at most d. Summing over orders
 * telescopes to dim (C_d)_i = N(d, i, floor(di/2)). Nothing here touches the
 * q-series machinery, so it serves as an independent oracle.
 */

#include "covdeg/exact.hpp"

#include <cstddef>
#include <vector>

namespace covdeg {

/// N(d, n, w) for every w in [0, dn].
class PartitionTable {
public:
  PartitionTable(int d, int n);

  int d() const { return d_; }
  int n() const { return n_; }
  /// Zero outside [0, dn].
  BigInt count(long w) const;
  const std::vector<BigInt>& counts() const { return counts_; }

private:
  int d_;
  int n_;
  std::vector<BigInt> counts_;
};

BigInt partition_count(int d, int n, long w);

/// dim (C_d)_i = N(d, i, floor(d i / 2))
BigInt dim_covariants(int d, int i);

/// Sum over orders m of the Cayley-Sylvester multiplicities; equals
/// dim_covariants(d, i) and exists to check the telescoping.
BigInt dim_covariants_by_order(int d, int i);

namespace serial {
std::vector<BigInt> dim_covariants_range(int d, int max_i);
}
namespace parallel {
std::vector<BigInt> dim_covariants_range(int d, int max_i);
}

} // namespace covdeg
