#ifndef ASMSHAPE_RATIONAL_HPP
#define ASMSHAPE_RATIONAL_HPP

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace asmshape {

// Exact arbitrary-precision rational, backed by GMP.
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
  r.canonicalize();
  return r;
}

// "p" for integers, "p/q" otherwise (mpq_class convention).
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rational_pow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("0^negative");
    return 1 / rational_pow(base, -e);
  }
  Rational acc = 1;
  Rational b = base;
  long k = e;
  while (k > 0) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

// log of a positive rational, overflow-safe for huge numerators/denominators.
inline double rational_log(const Rational& r) {
  if (r <= 0) throw std::domain_error("log of non-positive rational");
  long en = 0, ed = 0;
  double dn = mpz_get_d_2exp(&en, r.get_num().get_mpz_t());
  double dd = mpz_get_d_2exp(&ed, r.get_den().get_mpz_t());
  return std::log(dn) - std::log(dd) + (double(en) - double(ed)) * std::log(2.0);
}

}  // namespace asmshape

#endif
