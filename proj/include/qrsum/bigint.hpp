#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qrsum {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// C(n, k) for any integer n (negative n follows the usual extension).
inline Integer binomial(const Integer& n, unsigned long k) {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

inline Integer power(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// (x)_k = x (x-1) ... (x-k+1)
inline Integer falling_factorial(const Integer& x, unsigned long k) {
  Integer r = 1;
  for (unsigned long j = 0; j < k; ++j) r *= x - j;
  return r;
}

inline std::string to_decimal(const Integer& x) { return x.get_str(10); }

inline std::string to_decimal(const Rational& x) { return x.get_str(10); }

inline bool fits_u64(const Integer& x) {
  return sgn(x) >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Integer& x) {
  std::uint64_t r = 0;
  mpz_export(&r, nullptr, -1, sizeof(r), 0, 0, x.get_mpz_t());
  return r;
}

inline Integer from_u64(std::uint64_t v) {
  Integer r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

}  // namespace qrsum
