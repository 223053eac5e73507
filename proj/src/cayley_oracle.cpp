#include "starspec/cayley_oracle.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace starspec {

namespace {

std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

void check_oracle_size(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > kMaxOracleSize) {
    throw SizeLimitError("walk oracle limited to n <= " +
                         std::to_string(kMaxOracleSize) + ", got " +
                         std::to_string(n));
  }
}

// rank() without validation, for the hot neighbor-table loop.
std::uint64_t lehmer_rank(std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += perm[j] < perm[i];
    code = code * static_cast<std::uint64_t>(n - i) + smaller;
  }
  return code;
}

}  // namespace

PermutationIndex rank(std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  if (n < 1 || n > kMaxRankSize) {
    throw std::invalid_argument("permutation length must be in 1.." +
                                std::to_string(kMaxRankSize));
  }
  std::vector<bool> seen(n + 1, false);
  for (int v : perm) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("malformed permutation");
    }
    seen[v] = true;
  }
  return {n, lehmer_rank(perm)};
}

Permutation unrank(PermutationIndex index) {
  const int n = index.n;
  if (n < 1 || n > kMaxRankSize) {
    throw std::invalid_argument("permutation length must be in 1.." +
                                std::to_string(kMaxRankSize));
  }
  if (index.code >= factorial_u64(n)) {
    throw std::invalid_argument("permutation index out of range");
  }
  std::vector<int> digits(n);
  std::uint64_t code = index.code;
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(n - i);
    digits[i] = static_cast<int>(code % base);
    code /= base;
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  Permutation perm(n);
  for (int i = 0; i < n; ++i) {
    perm[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return perm;
}

WalkDynamics::WalkDynamics(int n, Execution exec)
    : n_(n), degree_(n - 1), exec_(exec) {
  check_oracle_size(n);
  const std::uint64_t states = factorial_u64(n);
  neighbors_.resize(states * degree_);
  const auto count = static_cast<std::int64_t>(states);
#pragma omp parallel for schedule(static) if (exec == Execution::parallel)
  for (std::int64_t c = 0; c < count; ++c) {
    Permutation perm = unrank({n, static_cast<std::uint64_t>(c)});
    for (int i = 0; i < degree_; ++i) {
      // right multiplication by (i+1 n) swaps positions i and n-1
      std::swap(perm[i], perm[n - 1]);
      neighbors_[c * degree_ + i] = static_cast<std::uint32_t>(lehmer_rank(perm));
      std::swap(perm[i], perm[n - 1]);
    }
  }
  state_.assign(states, BigInt(0));
  next_.assign(states, BigInt(0));
  state_[0] = 1;
}

void WalkDynamics::step() {
  const auto count = static_cast<std::int64_t>(state_.size());
  const std::uint32_t* nbr = neighbors_.data();
  const BigInt* prev = state_.data();
  BigInt* out = next_.data();
  const int degree = degree_;
  // the graph is undirected: (A v)[c] sums v over the neighbors of c
#pragma omp parallel for schedule(static) if (exec_ == Execution::parallel)
  for (std::int64_t c = 0; c < count; ++c) {
    BigInt& acc = out[c];
    acc = 0;
    for (int i = 0; i < degree; ++i) acc += prev[nbr[c * degree + i]];
  }
  state_.swap(next_);
  ++steps_;
}

BigInt WalkDynamics::mass() const {
  BigInt s = 0;
  for (const auto& v : state_) s += v;
  return s;
}

WalkCountSequence closed_walk_counts(int n, int k_max, Execution exec) {
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
  WalkDynamics walk(n, exec);
  WalkCountSequence out{n, {}};
  out.counts.reserve(k_max + 1);
  out.counts.push_back(walk.at_identity());
  for (int k = 1; k <= k_max; ++k) {
    walk.step();
    out.counts.push_back(walk.at_identity());
  }
  return out;
}

std::vector<Rational> solve_moment_system(std::span<const int> nodes,
                                          std::span<const BigInt> moments) {
  const std::size_t size = nodes.size();
  if (moments.size() != size) {
    throw std::invalid_argument("moment count must match node count");
  }
  // augmented matrix: row k is [x_0^k .. x_{m-1}^k | moments[k]]
  std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size + 1));
  for (std::size_t j = 0; j < size; ++j) {
    Rational p = 1;
    for (std::size_t k = 0; k < size; ++k) {
      a[k][j] = p;
      p *= nodes[j];
    }
  }
  for (std::size_t k = 0; k < size; ++k) a[k][size] = moments[k];

  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == size) throw std::invalid_argument("nodes must be distinct");
    std::swap(a[col], a[pivot]);
    for (std::size_t r = 0; r < size; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= size; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  std::vector<Rational> x(size);
  for (std::size_t j = 0; j < size; ++j) x[j] = a[j][size] / a[j][j];
  return x;
}

SpectrumTable oracle_multiplicity_table(int n, Execution exec) {
  check_oracle_size(n);
  const int kmax = 2 * n - 2;
  const WalkCountSequence walks = closed_walk_counts(n, kmax, exec);
  const BigInt order = factorial(n);

  std::vector<int> nodes;
  for (int k = -(n - 1); k <= n - 1; ++k) nodes.push_back(k);
  std::vector<BigInt> traces;
  for (const auto& w : walks.counts) traces.push_back(order * w);

  const auto solution = solve_moment_system(nodes, traces);
  std::map<int, BigInt> mul;
  BigInt total = 0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const Rational& m = solution[j];
    if (m.get_den() != 1 || sgn(m) < 0) {
      throw std::logic_error("moment system has non-integral solution at " +
                             std::to_string(nodes[j]));
    }
    total += m.get_num();
    mul[nodes[j]] = m.get_num();
  }
  if (total != order) {
    throw std::logic_error("recovered multiplicities do not sum to n!");
  }
  return SpectrumTable(n, std::move(mul));
}

}  // namespace starspec
