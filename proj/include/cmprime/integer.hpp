#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cmprime {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const Integer& d, const Integer& x) {
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Sign of |a| - |b|.
inline int cmp_abs(const Integer& a, const Integer& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

/// Residue of x modulo p in [0, p).
inline std::uint64_t residue(const Integer& x, std::uint64_t p) {
  return mpz_fdiv_ui(x.get_mpz_t(), p);
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

}  // namespace cmprime
