#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qpoly {

// Exact rational coefficients. mpq_class keeps the canonical invariants
// (gcd(|num|, den) = 1, den > 0) after canonicalize(); every constructor
// below returns a canonical value.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat rat_from_string(const std::string& text) {
  Rat r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("cannot parse rational: " + text);
  r.canonicalize();
  return r;
}

inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  Rat b = base;
  if (e < 0) {
    if (b == 0) throw std::domain_error("zero raised to a negative power");
    b = Rat(1) / b;
    e = -e;
  }
  Rat acc(1);
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// C_n = binom(2n,n)/(n+1)
inline Int catalan_number(unsigned long n) {
  Int r = binomial(2 * n, n);
  Int d(n + 1);
  return r / d;
}

// C_n^(m) = binom(mn,n)/((m-1)n+1)
inline Int fuss_catalan_number(unsigned long m, unsigned long n) {
  Int r = binomial(m * n, n);
  Int d((m - 1) * n + 1);
  return r / d;
}

}  // namespace qpoly
