#pragma once

#include <map>
#include <set>

#include "starspec/bigint.hpp"

namespace starspec {

// Exact eigenvalue multiplicities of the star-transposition Cayley graph
// G_n. Only nonzero multiplicities are stored; at() returns 0 elsewhere.
class SpectrumTable {
 public:
  // Throws std::invalid_argument for n < 1, keys outside [-(n-1), n-1] or
  // negative multiplicities. Zero entries are dropped.
  SpectrumTable(int n, std::map<int, BigInt> multiplicities);

  int n() const { return n_; }
  BigInt at(int k) const;
  const std::map<int, BigInt>& nonzero() const { return mul_; }
  BigInt total() const;

  friend bool operator==(const SpectrumTable&, const SpectrumTable&) = default;

 private:
  int n_;
  std::map<int, BigInt> mul_;
};

// mul(k) = sum over lambda |- n of f_lambda * I_lambda(k). Partitions are
// processed in parallel (OpenMP); the reduction runs in partition order so
// the result is bit-identical to multiplicity_table_serial. Throws
// SizeLimitError above kMaxPartitionSize, std::invalid_argument for n < 1.
SpectrumTable multiplicity_table(int n);

// Single-threaded reference for multiplicity_table.
SpectrumTable multiplicity_table_serial(int n);

std::set<int> support(const SpectrumTable& t);
std::set<int> support(int n);

// Hook-shape lower bound binomial(n-2, l-1) * binomial(n-1, l) on mul(l)
// and mul(-l); requires 1 <= l <= n-1.
BigInt hook_bound(int n, int l);

// sum_k mul(k) * k^power, i.e. Tr(J_n^power).
BigInt power_sum(const SpectrumTable& t, unsigned power);

}  // namespace starspec
