#include "starspec/semicircle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <stdexcept>
#include <string>

namespace starspec {

bool is_noncrossing(const Pairing& pairing) {
  for (const auto& [a, b] : pairing) {
    for (const auto& [c, d] : pairing) {
      if (a < c && c < b && b < d) return false;
    }
  }
  return true;
}

BigInt catalan(unsigned p) {
  BigInt c = binomial(2 * p, p);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), p + 1);
  return c;
}

BigInt count_noncrossing_pairings(int p) {
  if (p < 0) throw std::invalid_argument("p must be >= 0");
  if (p > kMaxPairingHalfSize) {
    throw SizeLimitError("pairing enumeration limited to p <= " +
                         std::to_string(kMaxPairingHalfSize));
  }
  const int size = 2 * p;
  std::vector<bool> used(size + 1, false);
  Pairing pairing;
  pairing.reserve(p);
  unsigned long count = 0;

  // pair the smallest unused element with each later unused element
  auto extend = [&](auto&& self, int first) -> void {
    while (first <= size && used[first]) ++first;
    if (first > size) {
      count += is_noncrossing(pairing);
      return;
    }
    used[first] = true;
    for (int partner = first + 1; partner <= size; ++partner) {
      if (used[partner]) continue;
      used[partner] = true;
      pairing.emplace_back(first, partner);
      self(self, first + 1);
      pairing.pop_back();
      used[partner] = false;
    }
    used[first] = false;
  };
  extend(extend, 1);
  return BigInt(count);
}

Rational semicircle_moment(unsigned k) {
  if (k % 2 == 1) return Rational(0);
  const unsigned p = k / 2;
  BigInt denom = 1;
  denom <<= 2 * p;
  Rational m(catalan(p), denom);
  m.canonicalize();
  return m;
}

double semicircle_cdf(double x) {
  if (x <= -1.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return 0.5 + (x * std::sqrt(1.0 - x * x) + std::asin(x)) / std::numbers::pi;
}

double semicircle_mass(double a, double b) {
  if (a > b) throw std::invalid_argument("semicircle_mass needs a <= b");
  return semicircle_cdf(b) - semicircle_cdf(a);
}

double atom_position(int n, int k) {
  return static_cast<double>(k) / (2.0 * std::sqrt(static_cast<double>(n)));
}

namespace {

double ratio_to_double(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return to_double(q);
}

}  // namespace

double empirical_mass(const SpectrumTable& t, double a, double b) {
  if (a > b) throw std::invalid_argument("empirical_mass needs a <= b");
  BigInt sum = 0;
  for (const auto& [k, m] : t.nonzero()) {
    double x = atom_position(t.n(), k);
    if (a <= x && x <= b) sum += m;
  }
  return ratio_to_double(sum, factorial(t.n()));
}

double moment_ratio(const SpectrumTable& t, unsigned p) {
  BigInt den = factorial(t.n()) * catalan(p);
  BigInt np;
  mpz_ui_pow_ui(np.get_mpz_t(), static_cast<unsigned long>(t.n()), p);
  den *= np;
  return ratio_to_double(power_sum(t, 2 * p), den);
}

double kolmogorov_distance(const SpectrumTable& t) {
  const BigInt order = factorial(t.n());
  BigInt below = 0;
  double d = 0.0;
  for (const auto& [k, m] : t.nonzero()) {
    const double reference = semicircle_cdf(atom_position(t.n(), k));
    const double left = ratio_to_double(below, order);
    below += m;
    const double right = ratio_to_double(below, order);
    d = std::max({d, std::abs(left - reference), std::abs(right - reference)});
  }
  return d;
}

SemicircleReport semicircle_report(const SpectrumTable& t, int p_max) {
  SemicircleReport r;
  r.n = t.n();
  for (int p = 1; p <= p_max; ++p) r.moment_ratios[p] = moment_ratio(t, p);
  r.kolmogorov_distance = kolmogorov_distance(t);
  return r;
}

std::vector<SemicircleReport> convergence_report(std::span<const int> n_values,
                                                 int p_max) {
  std::vector<SemicircleReport> out(n_values.size());
  const auto count = static_cast<std::ptrdiff_t>(n_values.size());
  // exceptions must not escape an OpenMP region
  std::vector<std::exception_ptr> errors(n_values.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[i] = semicircle_report(multiplicity_table(n_values[i]), p_max);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<HistogramBin> histogram(const SpectrumTable& t, double lo,
                                    double hi, int bins) {
  if (bins < 1) throw std::invalid_argument("histogram needs bins >= 1");
  if (!(lo < hi)) throw std::invalid_argument("histogram needs lo < hi");
  std::vector<double> edges(bins + 1);
  for (int i = 0; i <= bins; ++i) edges[i] = lo + (hi - lo) * i / bins;
  edges[bins] = hi;

  std::vector<BigInt> mass(bins, BigInt(0));
  for (const auto& [k, m] : t.nonzero()) {
    const double x = atom_position(t.n(), k);
    auto it = std::upper_bound(edges.begin(), edges.end(), x);
    auto bin = static_cast<int>(it - edges.begin()) - 1;
    mass[std::clamp(bin, 0, bins - 1)] += m;
  }
  const BigInt order = factorial(t.n());
  std::vector<HistogramBin> out(bins);
  for (int i = 0; i < bins; ++i) {
    out[i].left = edges[i];
    out[i].right = edges[i + 1];
    out[i].empirical_mass = ratio_to_double(mass[i], order);
    out[i].semicircle_mass = semicircle_mass(edges[i], edges[i + 1]);
  }
  return out;
}

}  // namespace starspec
