#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <string>

namespace starspec {

using BigInt = mpz_class;
using Rational = mpq_class;

// Raised when an input exceeds a documented computational limit.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Nearest double to q (ties to even). mpq_get_d alone truncates.
inline double to_double(const Rational& q) {
  const double toward_zero = q.get_d();
  if (!std::isfinite(toward_zero)) return toward_zero;
  const double away = std::nextafter(
      toward_zero, sgn(q) < 0 ? -std::numeric_limits<double>::infinity()
                              : std::numeric_limits<double>::infinity());
  if (!std::isfinite(away)) return toward_zero;
  const Rational gap_near = abs(q - Rational(toward_zero));
  const Rational gap_far = abs(Rational(away) - q);
  const int cmp_gaps = cmp(gap_near, gap_far);
  if (cmp_gaps < 0) return toward_zero;
  if (cmp_gaps > 0) return away;
  std::uint64_t bits;
  std::memcpy(&bits, &toward_zero, sizeof bits);
  return (bits & 1) == 0 ? toward_zero : away;
}

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

}  // namespace starspec
