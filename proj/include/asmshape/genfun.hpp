#ifndef ASMSHAPE_GENFUN_HPP
#define ASMSHAPE_GENFUN_HPP

#include <functional>
#include <utility>
#include <vector>

#include "asmshape/multipoly.hpp"
#include "asmshape/params.hpp"
#include "asmshape/polynomial.hpp"

namespace asmshape {

inline constexpr int kMaxMultiVars = 5;

// Boundary-correlation generating function h_N(z) at t = 1, exact
// coefficients. Degree is N-1 and h_N(1) = 1 in all three cases.
RationalPoly h_poly(int n, DeltaCase c);

// Multi-variable generalization: the s x s determinant with entries
// z_j^(k-1) (z_j - 1)^(s-k) h_(N-k+1)(z_j), divided exactly by the
// Vandermonde prod_{j<k} (z_j - z_k). Symmetric; h_multi(n, 1) = h_poly(n).
// Cached internally (thread-safe) since the EFP layer queries it repeatedly.
MultiPoly h_multi(int n, int s, DeltaCase c);

// Same construction from an explicit table of generating functions,
// h_by_size[k] = h_k; supports arbitrary rational (Delta, t) data.
MultiPoly h_multi_from(const std::vector<RationalPoly>& h_by_size, int n, int s);

// Leading-order large-N behaviour of (1/N) ln h_N(z), with first and second
// derivatives, on real z > 0 (z = 1 is a removable point with L(1) = 0,
// L'(1) = 1/2 in all three cases).
struct LogDensityLimit {
  DeltaCase tag;
  std::function<double(double)> L;
  std::function<double(double)> Lprime;
  std::function<double(double)> Lsecond;
};

LogDensityLimit log_density(DeltaCase c);

// The auxiliary saddle value v(z) entering the q = 1 log-density.
double v_aux(double z);

// L'(z) as an exact rational function {numerator, denominator}; only the
// q = 2 and q = 3 cases are rational (q = 1 is algebraic), others throw.
std::pair<RationalPoly, RationalPoly> log_density_prime_rational(DeltaCase c);

// (1/n) ln h_n(z) for each n in ns, evaluated exactly then reduced to a
// double through an overflow-safe log.
std::vector<double> empirical_log_density(const std::vector<int>& ns, DeltaCase c,
                                          const Rational& z);

}  // namespace asmshape

#endif
