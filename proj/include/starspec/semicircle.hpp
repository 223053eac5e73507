#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "starspec/bigint.hpp"
#include "starspec/spectrum.hpp"

namespace starspec {

// Largest p accepted by count_noncrossing_pairings ((2p-1)!! pairings).
inline constexpr int kMaxPairingHalfSize = 9;

// A perfect matching of {1..2p}; each pair is stored as (smaller, larger).
using Pairing = std::vector<std::pair<int, int>>;

// True iff no two pairs {a,b}, {c,d} satisfy a < c < b < d.
bool is_noncrossing(const Pairing& pairing);

BigInt catalan(unsigned p);

// Enumerates all (2p-1)!! pairings of {1..2p} and counts the non-crossing
// ones. Throws SizeLimitError for p > kMaxPairingHalfSize.
BigInt count_noncrossing_pairings(int p);

// k-th moment of the semicircle law on [-1, 1]: 0 for odd k, Cat(k/2)/4^(k/2)
// for even k.
Rational semicircle_moment(unsigned k);

// Semicircle CDF: 1/2 + (x sqrt(1-x^2) + asin x) / pi on [-1, 1], clamped.
double semicircle_cdf(double x);

// Semicircle mass of [a, b]; throws std::invalid_argument if a > b.
double semicircle_mass(double a, double b);

// Atom location k / (2 sqrt(n)) of sp_n.
double atom_position(int n, int k);

// sp_n([a, b]) = (1/n!) * sum of mul(k) over atoms inside [a, b].
double empirical_mass(const SpectrumTable& t, double a, double b);

// (n^-p * power_sum(t, 2p) / n!) / Cat(p). p = 1 gives (n-1)/n.
double moment_ratio(const SpectrumTable& t, unsigned p);

// sup_x |F_{sp_n}(x) - F_sc(x)|, evaluated at the left and right limits of
// the empirical CDF at each atom.
double kolmogorov_distance(const SpectrumTable& t);

struct SemicircleReport {
  int n = 1;
  std::map<int, double> moment_ratios;  // keyed by p
  double kolmogorov_distance = 0.0;
};

SemicircleReport semicircle_report(const SpectrumTable& t, int p_max);

// Computes the tables (multiplicity_table) for every n; reports for
// different n run concurrently.
std::vector<SemicircleReport> convergence_report(std::span<const int> n_values,
                                                 int p_max);

struct HistogramBin {
  double left = 0.0;
  double right = 0.0;
  double empirical_mass = 0.0;
  double semicircle_mass = 0.0;
};

// Equal-width bins over [lo, hi]. Bins are [left, right) except the last,
// which is closed; atoms below lo or above hi are counted in the first or
// last bin so the empirical masses always sum to 1.
std::vector<HistogramBin> histogram(const SpectrumTable& t, double lo,
                                    double hi, int bins);

}  // namespace starspec
