#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace idealab {

// Exact arithmetic backbone. Exponents, matrix entries and linear-form
// coefficients are all arbitrary-precision; nothing in the library is
// allowed to overflow silently.
using Int = mpz_class;
using Rational = mpq_class;

inline bool fitsLong(const Int& v) { return v.fits_slong_p(); }

inline long toLong(const Int& v) {
  if (!v.fits_slong_p())
    throw std::overflow_error("integer does not fit a machine word: " + v.get_str());
  return v.get_si();
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Int gcdInt(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int lcmInt(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Odometer scan of the integer box [0, dims[0]] x ... x [0, dims[n-1]].
// Visits points in lexicographic order (first coordinate most significant).
// The callback receives the same buffer each time; it must not keep it.
template <typename Fn>
void scanBox(const std::vector<long>& dims, Fn&& fn) {
  const std::size_t n = dims.size();
  std::vector<long> pt(n, 0);
  for (long d : dims)
    if (d < 0) throw std::invalid_argument("scanBox: negative bound");
  while (true) {
    fn(static_cast<const std::vector<long>&>(pt));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (pt[i] < dims[i]) {
        ++pt[i];
        for (std::size_t j = i + 1; j < n; ++j) pt[j] = 0;
        break;
      }
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

inline std::size_t boxCellCount(const std::vector<long>& dims, std::size_t guard = 0) {
  std::size_t total = 1;
  for (long d : dims) {
    if (d < 0) throw std::invalid_argument("boxCellCount: negative bound");
    total *= static_cast<std::size_t>(d) + 1;
    if (guard != 0 && total > guard)
      throw std::runtime_error("enumeration box too large (" + std::to_string(total) +
                               " cells exceeds guard of " + std::to_string(guard) + ")");
  }
  return total;
}

}  // namespace idealab
