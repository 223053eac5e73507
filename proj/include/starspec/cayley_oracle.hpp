#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "starspec/bigint.hpp"
#include "starspec/spectrum.hpp"

namespace starspec {

// Largest n for the walk-count oracle (9! = 362880 states).
inline constexpr int kMaxOracleSize = 9;
// Largest n for permutation ranking (20! < 2^64).
inline constexpr int kMaxRankSize = 20;

enum class Execution { serial, parallel };

// One-line notation: perm[i] is the image of i+1, values in 1..n.
using Permutation = std::vector<int>;

struct PermutationIndex {
  int n = 1;
  std::uint64_t code = 0;

  friend bool operator==(const PermutationIndex&,
                         const PermutationIndex&) = default;
};

// Lehmer code read most-significant first: digit i counts later entries
// smaller than perm[i] and has weight (n-1-i)!. Identity -> 0, reversal ->
// n!-1, (2,1,3) -> 2.
PermutationIndex rank(std::span<const int> perm);
Permutation unrank(PermutationIndex index);

// W_k for k = 0..k_max: number of k-tuples (i_1..i_k) in [1, n-1]^k with
// (i_1 n)(i_2 n)...(i_k n) = id.
struct WalkCountSequence {
  int n = 1;
  std::vector<BigInt> counts;
};

// Walk distribution on S_n under right multiplication by the generators
// (i n). state()[c] is the number of walks from the identity to the
// permutation with rank c after steps() steps.
class WalkDynamics {
 public:
  explicit WalkDynamics(int n, Execution exec = Execution::parallel);

  void step();

  int n() const { return n_; }
  int steps() const { return steps_; }
  std::span<const BigInt> state() const { return state_; }
  const BigInt& at_identity() const { return state_[0]; }
  // Sum of state(); equals (n-1)^steps().
  BigInt mass() const;

 private:
  int n_;
  int degree_;
  Execution exec_;
  int steps_ = 0;
  std::vector<std::uint32_t> neighbors_;  // degree_ entries per state
  std::vector<BigInt> state_;
  std::vector<BigInt> next_;
};

WalkCountSequence closed_walk_counts(int n, int k_max,
                                     Execution exec = Execution::parallel);

// Solves sum_j m_j * nodes[j]^k = moments[k], k = 0..len-1, exactly.
// Nodes must be distinct; moments.size() must equal nodes.size().
std::vector<Rational> solve_moment_system(std::span<const int> nodes,
                                          std::span<const BigInt> moments);

// Multiplicities recovered from W_0..W_{2n-2} on the integer nodes
// -(n-1)..n-1. Throws std::logic_error if the solution is not a
// non-negative integer vector summing to n!.
SpectrumTable oracle_multiplicity_table(int n,
                                        Execution exec = Execution::parallel);

}  // namespace starspec
