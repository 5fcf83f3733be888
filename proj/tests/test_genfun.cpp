#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "asmshape/enumeration.hpp"
#include "asmshape/genfun.hpp"
#include "asmshape/rational.hpp"

using namespace asmshape;

namespace {

const DeltaCase kCases[] = {DeltaCase::Q1, DeltaCase::Q2, DeltaCase::Q3};

// h_N(z) rebuilt from the enumeration layer: sum_r H_N^(r) z^(r-1).
RationalPoly h_from_enumeration(int n, DeltaCase c) {
  const std::vector<Rational> h = boundary_correlation(n, q_of(c));
  return RationalPoly(std::vector<Rational>(h.begin(), h.end()));
}

}  // namespace

TEST_CASE("h_N matches the enumeration layer for every case up to n = 6") {
  for (DeltaCase c : kCases) {
    for (int n = 1; n <= 6; ++n) {
      CHECK(h_poly(n, c) == h_from_enumeration(n, c));
    }
  }
}

TEST_CASE("golden coefficient tables") {
  CHECK(h_poly(4, DeltaCase::Q3).coeffs() ==
        std::vector<Rational>{Rational(1, 10), Rational(2, 5), Rational(2, 5),
                              Rational(1, 10)});
  CHECK(h_poly(5, DeltaCase::Q1).coeffs() ==
        std::vector<Rational>{Rational(14, 143), Rational(35, 143),
                              Rational(45, 143), Rational(35, 143),
                              Rational(14, 143)});
  // q = 2 is the binomial family ((z+1)/2)^(N-1)
  CHECK(h_poly(6, DeltaCase::Q2).coeffs() ==
        std::vector<Rational>{Rational(1, 32), Rational(5, 32), Rational(5, 16),
                              Rational(5, 16), Rational(5, 32), Rational(1, 32)});
}

TEST_CASE("normalization, degree, symmetry and positivity at large n") {
  for (DeltaCase c : kCases) {
    for (int n = 1; n <= 20; ++n) {
      const RationalPoly h = h_poly(n, c);
      CHECK(h(1) == 1);
      CHECK(h.degree() == n - 1);
      for (int k = 0; k <= h.degree(); ++k) {
        CHECK(h.coeff(k) > 0);
        // left-right reflection symmetry of the ensemble
        CHECK(h.coeff(k) == h.coeff(h.degree() - k));
      }
    }
  }
}

TEST_CASE("h_multi reduces to h_poly and is symmetric") {
  for (DeltaCase c : kCases) {
    const MultiPoly m1 = h_multi(5, 1, c);
    const MultiPoly lift = MultiPoly::from_univariate(1, 0, h_poly(5, c));
    CHECK(m1 == lift);
    const MultiPoly m3 = h_multi(5, 3, c);
    CHECK(m3 == m3.swap_vars(0, 1));
    CHECK(m3 == m3.swap_vars(1, 2));
    CHECK(m3 == m3.swap_vars(0, 2));
  }
}

TEST_CASE("setting the last variable to 1 reduces s by one") {
  for (DeltaCase c : kCases) {
    for (int s = 2; s <= 4; ++s) {
      CHECK(h_multi(6, s, c).substitute(s - 1, 1) == h_multi(6, s - 1, c));
    }
  }
  CHECK(h_multi(4, 1, DeltaCase::Q1).substitute(0, 1) ==
        MultiPoly::constant(0, 1));
}

TEST_CASE("h_multi evaluation cross-check at a generic rational point") {
  // against the raw determinant-over-Vandermonde at distinct z_j
  const std::vector<Rational> z = {Rational(2), Rational(1, 3), Rational(-5, 7)};
  for (DeltaCase c : kCases) {
    const int n = 5, s = 3;
    Rational det = 0;
    std::vector<int> perm = {0, 1, 2};
    const int signs[6] = {+1, -1, -1, +1, +1, -1};  // lexicographic order
    int idx = 0;
    do {
      Rational prod = signs[idx++];
      for (int j = 0; j < s; ++j) {
        const int k = perm[size_t(j)] + 1;  // column, 1-based
        const Rational& zj = z[size_t(j)];
        prod *= rational_pow(zj, k - 1) * rational_pow(zj - 1, s - k) *
                h_poly(n - k + 1, c)(zj);
      }
      det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    Rational vand = 1;
    for (int j = 0; j < s; ++j)
      for (int k = j + 1; k < s; ++k) vand *= z[size_t(j)] - z[size_t(k)];
    CHECK(h_multi(n, s, c)(z) == det / vand);
  }
}

TEST_CASE("bound on the number of variables") {
  CHECK_THROWS_AS(h_multi(8, 6, DeltaCase::Q2), BoundError);
  CHECK_THROWS_AS(h_multi(3, 4, DeltaCase::Q2), std::invalid_argument);
}

TEST_CASE("log-density limits: value and derivatives at z = 1") {
  for (DeltaCase c : kCases) {
    const LogDensityLimit ld = log_density(c);
    CHECK(ld.L(1.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ld.Lprime(1.0) == doctest::Approx(0.5).epsilon(1e-12));
  }
  CHECK(log_density(DeltaCase::Q1).Lsecond(1.0) ==
        doctest::Approx(-0.125).epsilon(1e-9));
}

TEST_CASE("L' and L'' agree with finite differences of L") {
  const double hstep = 1e-6;
  for (DeltaCase c : kCases) {
    const LogDensityLimit ld = log_density(c);
    for (double z : {0.4, 0.8, 1.3, 2.5, 7.0}) {
      const double dnum = (ld.L(z + hstep) - ld.L(z - hstep)) / (2 * hstep);
      CHECK(ld.Lprime(z) == doctest::Approx(dnum).epsilon(1e-6));
      const double d2num =
          (ld.Lprime(z + hstep) - ld.Lprime(z - hstep)) / (2 * hstep);
      CHECK(ld.Lsecond(z) == doctest::Approx(d2num).epsilon(1e-5));
    }
  }
}

TEST_CASE("rational form of L' matches the analytic lambdas") {
  for (DeltaCase c : {DeltaCase::Q2, DeltaCase::Q3}) {
    const auto [num, den] = log_density_prime_rational(c);
    const LogDensityLimit ld = log_density(c);
    for (const Rational& z :
         {Rational(1), Rational(1, 2), Rational(3), Rational(17, 5)}) {
      const double want = ld.Lprime(z.get_d());
      const Rational got = num(z) / den(z);
      CHECK(got.get_d() == doctest::Approx(want).epsilon(1e-12));
    }
    CHECK(num(1) / den(1) == Rational(1, 2));
  }
  CHECK_THROWS_AS(log_density_prime_rational(DeltaCase::Q1),
                  std::invalid_argument);
}

TEST_CASE("empirical log-density converges to the limit") {
  for (DeltaCase c : kCases) {
    const LogDensityLimit ld = log_density(c);
    for (const Rational& z : {Rational(1, 2), Rational(2), Rational(3)}) {
      const std::vector<double> emp =
          empirical_log_density({25, 50, 100, 200}, c, z);
      const double limit = ld.L(z.get_d());
      // errors shrink roughly like (ln n)/n; demand monotone improvement
      const double e25 = std::abs(emp[0] - limit);
      const double e100 = std::abs(emp[2] - limit);
      const double e200 = std::abs(emp[3] - limit);
      CHECK(e100 < e25);
      CHECK(e200 < e100);
      CHECK(e200 < 0.05);
    }
  }
}
