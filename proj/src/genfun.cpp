#include "asmshape/genfun.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

#include "asmshape/asm_matrix.hpp"

namespace asmshape {

namespace {

// Terminating Gauss hypergeometric sum F(a, b; c; arg) where arg is itself a
// polynomial: sum_k [(a)_k (b)_k / (c)_k / k!] arg^k for k = 0..kmax.
RationalPoly hypergeometric_poly(const Rational& a, const Rational& b,
                                 const Rational& c, const RationalPoly& arg,
                                 int kmax) {
  RationalPoly acc = RationalPoly::constant(1);
  Rational coef = 1;
  RationalPoly argpow = RationalPoly::constant(1);
  for (int k = 1; k <= kmax; ++k) {
    coef *= (a + (k - 1)) * (b + (k - 1)) / ((c + (k - 1)) * Rational(k));
    argpow = argpow * arg;
    acc = acc + argpow * coef;
  }
  return acc;
}

RationalPoly h_poly_q1(int n) {
  // F(-N+1, N; 2N; 1-z), a terminating series of degree N-1
  const RationalPoly one_minus_z = RationalPoly::linear(1, -1);
  return hypergeometric_poly(Rational(-(n - 1)), Rational(n), Rational(2 * n),
                             one_minus_z, n - 1);
}

RationalPoly h_poly_q2(int n) {
  return RationalPoly::linear(Rational(1, 2), Rational(1, 2)).pow(n - 1);
}

// B_2m(z), degree 2m; combines the two terminating hypergeometric pieces with
// argument (z^2-1)/(z(z+2)) cleared of denominators.
RationalPoly b_poly(int m) {
  const RationalPoly z = RationalPoly::linear(0, 1);
  const RationalPoly zp2 = RationalPoly::linear(2, 1);
  const RationalPoly z2m1 = RationalPoly({Rational(-1), Rational(0), Rational(1)});
  const Rational scale = rational_pow(Rational(3), -(m - 1)) / Rational(2 * m + 3);

  RationalPoly first;  // z^m (z+2)^m F(-m, m+2; 2m+4; w)
  {
    RationalPoly acc;
    Rational coef = 1;
    for (int k = 0; k <= m; ++k) {
      if (k > 0) {
        coef *= Rational(-m + (k - 1)) * Rational(m + 2 + (k - 1)) /
                (Rational(2 * m + 4 + (k - 1)) * Rational(k));
      }
      acc = acc + z.pow(m - k) * zp2.pow(m - k) * z2m1.pow(k) * coef;
    }
    first = acc * (scale * Rational(m + 1));
  }
  RationalPoly second;  // z^m (z+2)^(m-1) F(-m+1, m+2; 2m+4; w)
  {
    RationalPoly acc;
    Rational coef = 1;
    for (int k = 0; k <= m - 1; ++k) {
      if (k > 0) {
        coef *= Rational(-m + 1 + (k - 1)) * Rational(m + 2 + (k - 1)) /
                (Rational(2 * m + 4 + (k - 1)) * Rational(k));
      }
      acc = acc + z.pow(m - k) * zp2.pow(m - 1 - k) * z2m1.pow(k) * coef;
    }
    second = acc * (scale * Rational(m));
  }
  return first - second;
}

RationalPoly h_poly_q3(int n) {
  if (n == 1) return RationalPoly::constant(1);
  if (n % 2 == 0) {
    const int m = (n - 2) / 2;
    return RationalPoly::linear(Rational(1, 2), Rational(1, 2)) * b_poly(m);
  }
  const int m = (n - 3) / 2;
  const RationalPoly prefix =
      RationalPoly::linear(1, 2) * RationalPoly::linear(2, 1) * Rational(1, 9);
  return prefix * b_poly(m);
}

}  // namespace

RationalPoly h_poly(int n, DeltaCase c) {
  if (n < 1) throw std::invalid_argument("h_poly requires n >= 1");
  switch (c) {
    case DeltaCase::Q1: return h_poly_q1(n);
    case DeltaCase::Q2: return h_poly_q2(n);
    case DeltaCase::Q3: return h_poly_q3(n);
  }
  throw std::logic_error("bad DeltaCase");
}

MultiPoly h_multi_from(const std::vector<RationalPoly>& h_by_size, int n, int s) {
  if (s < 1 || s > n) throw std::invalid_argument("h_multi requires 1 <= s <= n");
  if (s > kMaxMultiVars) {
    throw BoundError("h_multi refused for s = " + std::to_string(s) + " (bound " +
                     std::to_string(kMaxMultiVars) + ")");
  }
  // column polynomials f_k(z) = z^(k-1) (z-1)^(s-k) h_(n-k+1)(z), k = 1..s
  std::vector<RationalPoly> cols(static_cast<size_t>(s));
  const RationalPoly z = RationalPoly::linear(0, 1);
  const RationalPoly zm1 = RationalPoly::linear(-1, 1);
  for (int k = 1; k <= s; ++k) {
    cols[size_t(k - 1)] = z.pow(k - 1) * zm1.pow(s - k) * h_by_size.at(static_cast<size_t>(n - k + 1));
  }
  // determinant via permutation expansion; each summand is a separable
  // product of univariate polynomials in distinct variables
  std::vector<int> perm(static_cast<size_t>(s));
  for (int i = 0; i < s; ++i) perm[size_t(i)] = i;
  MultiPoly det(s);
  do {
    int sign = 1;
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j)
        if (perm[size_t(i)] > perm[size_t(j)]) sign = -sign;
    MultiPoly prod = MultiPoly::constant(s, Rational(sign));
    for (int j = 0; j < s; ++j) {
      prod = prod * MultiPoly::from_univariate(s, j, cols[size_t(perm[size_t(j)])]);
    }
    det = det + prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  // exact Vandermonde division; a nonzero remainder means the determinant
  // entries are wrong, so divide_exact_by_binomial throws
  for (int j = 0; j < s; ++j)
    for (int k = j + 1; k < s; ++k) det = det.divide_exact_by_binomial(j, k);
  return det;
}

MultiPoly h_multi(int n, int s, DeltaCase c) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, DeltaCase>, MultiPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, s, c});
    if (it != cache.end()) return it->second;
  }
  std::vector<RationalPoly> table(static_cast<size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) table[size_t(k)] = h_poly(k, c);
  MultiPoly out = h_multi_from(table, n, s);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_tuple(n, s, c), out);
  return out;
}

double v_aux(double z) {
  if (std::abs(z - 1.0) < 1e-9) return 0.5;
  return (2.0 - z - std::sqrt(z * z - z + 1.0)) / (3.0 * (1.0 - z));
}

LogDensityLimit log_density(DeltaCase c) {
  switch (c) {
    case DeltaCase::Q2:
      return {c, [](double z) { return std::log((z + 1.0) / 2.0); },
              [](double z) { return 1.0 / (z + 1.0); },
              [](double z) { return -1.0 / ((z + 1.0) * (z + 1.0)); }};
    case DeltaCase::Q3:
      return {c,
              [](double z) { return std::log(2.0 * (2.0 * z + 1.0) * (z + 2.0) /
                                             (9.0 * (z + 1.0))); },
              [](double z) {
                return (2.0 * z * z + 4.0 * z + 3.0) /
                       ((1.0 + z) * (2.0 + z) * (1.0 + 2.0 * z));
              },
              [](double z) {
                const double a = 2.0 * z + 1.0, b = z + 2.0, d = z + 1.0;
                return -4.0 / (a * a) - 1.0 / (b * b) + 1.0 / (d * d);
              }};
    case DeltaCase::Q1:
      return {c,
              [](double z) {
                const double v = v_aux(z);
                return std::log(4.0 * v * (1.0 - v) * (1.0 - v + z * v));
              },
              [](double z) {
                if (std::abs(z - 1.0) < 1e-9) return 0.5;
                return (1.0 - std::sqrt(z * z - z + 1.0)) / (z * (1.0 - z));
              },
              [](double z) {
                if (std::abs(z - 1.0) < 1e-7) return -0.125;  // series limit
                const double w = std::sqrt(z * z - z + 1.0);
                const double wp = (2.0 * z - 1.0) / (2.0 * w);
                const double den = z - z * z;
                return (-wp * den - (1.0 - w) * (1.0 - 2.0 * z)) / (den * den);
              }};
  }
  throw std::logic_error("bad DeltaCase");
}

std::pair<RationalPoly, RationalPoly> log_density_prime_rational(DeltaCase c) {
  switch (c) {
    case DeltaCase::Q2:
      return {RationalPoly::constant(1), RationalPoly::linear(1, 1)};
    case DeltaCase::Q3:
      return {RationalPoly({Rational(3), Rational(4), Rational(2)}),
              RationalPoly::linear(1, 1) * RationalPoly::linear(2, 1) *
                  RationalPoly::linear(1, 2)};
    case DeltaCase::Q1:
      throw std::invalid_argument("q = 1 log-density derivative is not rational");
  }
  throw std::logic_error("bad DeltaCase");
}

std::vector<double> empirical_log_density(const std::vector<int>& ns, DeltaCase c,
                                          const Rational& z) {
  if (z <= 0) throw std::invalid_argument("z must be positive");
  std::vector<double> out;
  out.reserve(ns.size());
  for (int n : ns) {
    if (n < 1 || n > 200) {
      throw BoundError("empirical_log_density supports 1 <= n <= 200");
    }
    const Rational value = h_poly(n, c)(z);
    out.push_back(rational_log(value) / double(n));
  }
  return out;
}

}  // namespace asmshape
