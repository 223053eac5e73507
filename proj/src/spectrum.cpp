#include "starspec/spectrum.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "starspec/partitions.hpp"

namespace starspec {

SpectrumTable::SpectrumTable(int n, std::map<int, BigInt> multiplicities)
    : n_(n) {
  if (n < 1) throw std::invalid_argument("spectrum table needs n >= 1");
  for (auto& [k, m] : multiplicities) {
    if (k < -(n - 1) || k > n - 1) {
      throw std::invalid_argument("eigenvalue " + std::to_string(k) +
                                  " outside [-(n-1), n-1]");
    }
    if (sgn(m) < 0) throw std::invalid_argument("negative multiplicity");
    if (sgn(m) > 0) mul_.emplace(k, std::move(m));
  }
}

BigInt SpectrumTable::at(int k) const {
  auto it = mul_.find(k);
  return it == mul_.end() ? BigInt(0) : it->second;
}

BigInt SpectrumTable::total() const {
  BigInt s = 0;
  for (const auto& [k, m] : mul_) s += m;
  return s;
}

namespace {

using Contribution = std::vector<std::pair<int, BigInt>>;

// (content, f_lambda * f_{lambda minus corner}) for every corner of lambda.
Contribution contributions(const Partition& lambda) {
  Contribution out;
  BigInt f = dimension(lambda);
  for (const Box& b : corners(lambda)) {
    out.emplace_back(b.content(), f * dimension(remove_corner(lambda, b)));
  }
  return out;
}

std::vector<Partition> partitions_for_table(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return enumerate_partitions(n);
}

SpectrumTable reduce(int n, const std::vector<Contribution>& parts) {
  std::map<int, BigInt> mul;
  for (const auto& c : parts) {
    for (const auto& [k, m] : c) mul[k] += m;
  }
  return SpectrumTable(n, std::move(mul));
}

}  // namespace

SpectrumTable multiplicity_table_serial(int n) {
  const auto lambdas = partitions_for_table(n);
  std::vector<Contribution> parts;
  parts.reserve(lambdas.size());
  for (const auto& lambda : lambdas) parts.push_back(contributions(lambda));
  return reduce(n, parts);
}

SpectrumTable multiplicity_table(int n) {
  const auto lambdas = partitions_for_table(n);
  const auto count = static_cast<std::ptrdiff_t>(lambdas.size());
  std::vector<Contribution> parts(lambdas.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    parts[i] = contributions(lambdas[i]);
  }
  return reduce(n, parts);
}

std::set<int> support(const SpectrumTable& t) {
  std::set<int> out;
  for (const auto& [k, m] : t.nonzero()) out.insert(k);
  return out;
}

std::set<int> support(int n) { return support(multiplicity_table(n)); }

BigInt hook_bound(int n, int l) {
  if (n < 2 || l < 1 || l > n - 1) {
    throw std::invalid_argument("hook_bound needs 1 <= l <= n-1, got n=" +
                                std::to_string(n) + " l=" + std::to_string(l));
  }
  return binomial(n - 2, l - 1) * binomial(n - 1, l);
}

BigInt power_sum(const SpectrumTable& t, unsigned power) {
  BigInt s = 0;
  BigInt kp;
  for (const auto& [k, m] : t.nonzero()) {
    mpz_set_si(kp.get_mpz_t(), k);
    mpz_pow_ui(kp.get_mpz_t(), kp.get_mpz_t(), power);
    s += m * kp;
  }
  return s;
}

}  // namespace starspec
