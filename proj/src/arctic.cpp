#include "asmshape/arctic.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "asmshape/genfun.hpp"

namespace asmshape {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 2*Delta for the three cases; the third pole of g sits at z = 2*Delta - 1.
double two_delta(DeltaCase c) {
  switch (c) {
    case DeltaCase::Q1: return 1.0;
    case DeltaCase::Q2: return 0.0;
    case DeltaCase::Q3: return -1.0;
  }
  throw std::logic_error("bad DeltaCase");
}

}  // namespace

double ReducedSpe::g(double z, double x, double y) const {
  const double p = z + 1.0 - two_delta(tag);
  return y / (z - 1.0) - (1.0 - x) / z - y / p + log_density(tag).Lprime(z);
}

double ReducedSpe::dg_dz(double z, double x, double y) const {
  const double p = z + 1.0 - two_delta(tag);
  return -y / ((z - 1.0) * (z - 1.0)) + (1.0 - x) / (z * z) + y / (p * p) +
         log_density(tag).Lsecond(z);
}

ScaledCoords double_root_solve(DeltaCase c, double omega) {
  if (omega < 1.0) throw std::invalid_argument("omega must lie in [1, inf)");
  if (omega == 1.0 || std::abs(omega - 1.0) < 1e-12) return {0.5, 0.0};
  if (std::isinf(omega)) return {0.0, 0.5};
  const double z = omega;
  const double p = z + 1.0 - two_delta(c);
  const LogDensityLimit ld = log_density(c);
  // g = A + B x + C y with
  //   A = -1/z + L'(z), B = 1/z, C = 1/(z-1) - 1/p
  const double A = -1.0 / z + ld.Lprime(z);
  const double B = 1.0 / z;
  const double C = 1.0 / (z - 1.0) - 1.0 / p;
  const double Ap = 1.0 / (z * z) + ld.Lsecond(z);
  const double Bp = -1.0 / (z * z);
  const double Cp = -1.0 / ((z - 1.0) * (z - 1.0)) + 1.0 / (p * p);
  const double det = B * Cp - C * Bp;
  if (std::abs(det) < 1e-300) throw std::domain_error("degenerate double-root system");
  return {(-A * Cp + C * Ap) / det, (-B * Ap + A * Bp) / det};
}

ScaledCoords parametric_curve(DeltaCase c, double omega) {
  if (omega < 1.0) throw std::invalid_argument("omega must lie in [1, inf)");
  if (std::isinf(omega)) return {0.0, 0.5};
  const double w = omega;
  switch (c) {
    case DeltaCase::Q1: {
      const double root = std::sqrt(w * w - w + 1.0);
      return {1.0 - (2.0 * w - 1.0) / (2.0 * root), 1.0 - (w + 1.0) / (2.0 * root)};
    }
    case DeltaCase::Q2: {
      const double d = w * w + 1.0;
      return {1.0 / d, (w - 1.0) * (w - 1.0) / (2.0 * d)};
    }
    case DeltaCase::Q3: {
      const double den = (w * w + 2.0) * (2.0 * w + 1.0) * (2.0 * w + 1.0) *
                         (w + 1.0) * (w + 1.0);
      const double xn = 7.0 * std::pow(w, 4) + 14.0 * std::pow(w, 3) +
                        19.0 * w * w + 12.0 * w + 2.0;
      const double yn = (w - 1.0) * (w - 1.0) *
                        (6.0 * std::pow(w, 4) + 16.0 * std::pow(w, 3) +
                         19.0 * w * w + 16.0 * w + 6.0);
      return {xn / den, yn / (3.0 * den)};
    }
  }
  throw std::logic_error("bad DeltaCase");
}

std::pair<Rational, Rational> parametric_curve_exact(DeltaCase c, const Rational& w) {
  if (w < 1) throw std::invalid_argument("omega must lie in [1, inf)");
  switch (c) {
    case DeltaCase::Q2: {
      const Rational d = w * w + 1;
      return {1 / d, (w - 1) * (w - 1) / (2 * d)};
    }
    case DeltaCase::Q3: {
      const Rational w2 = w * w, w3 = w2 * w, w4 = w2 * w2;
      const Rational den = (w2 + 2) * (2 * w + 1) * (2 * w + 1) * (w + 1) * (w + 1);
      const Rational xn = 7 * w4 + 14 * w3 + 19 * w2 + 12 * w + 2;
      const Rational yn = (w - 1) * (w - 1) * (6 * w4 + 16 * w3 + 19 * w2 + 16 * w + 6);
      return {xn / den, yn / (3 * den)};
    }
    case DeltaCase::Q1:
      throw std::invalid_argument("q = 1 parametrization is algebraic, not rational");
  }
  throw std::logic_error("bad DeltaCase");
}

Rational implicit_residual_exact(DeltaCase c, const Rational& x, const Rational& y) {
  switch (c) {
    case DeltaCase::Q1:
      return 4 * x * (1 - x) + 4 * y * (1 - y) + 4 * x * y - 1;
    case DeltaCase::Q2:
      return 4 * x * (1 - x) + 4 * y * (1 - y) - 1;
    case DeltaCase::Q3: {
      const Rational x2 = x * x, x3 = x2 * x, x4 = x2 * x2, x5 = x4 * x, x6 = x4 * x2;
      const Rational y2 = y * y, y3 = y2 * y, y4 = y2 * y2, y5 = y4 * y, y6 = y4 * y2;
      return 324 * x6 + 1620 * x5 * y + 3429 * x4 * y2 + 4254 * x3 * y3 +
             3429 * x2 * y4 + 1620 * x * y5 + 324 * y6 - 972 * x5 - 1458 * x4 * y -
             2970 * x3 * y2 - 2970 * x2 * y3 - 1458 * x * y4 - 972 * y5 - 6147 * x4 -
             9150 * x3 * y - 17462 * x2 * y2 - 9150 * x * y3 - 6147 * y4 + 13914 * x3 +
             24086 * x2 * y + 24086 * x * y2 + 13914 * y3 - 11511 * x2 - 17258 * x * y -
             11511 * y2 + 4392 * x + 4392 * y - 648;
    }
  }
  throw std::logic_error("bad DeltaCase");
}

double implicit_residual(DeltaCase c, ScaledCoords p) {
  const double x = p.x, y = p.y;
  switch (c) {
    case DeltaCase::Q1:
      return 4 * x * (1 - x) + 4 * y * (1 - y) + 4 * x * y - 1;
    case DeltaCase::Q2:
      return 4 * x * (1 - x) + 4 * y * (1 - y) - 1;
    case DeltaCase::Q3: {
      // Horner-free; the coefficients are exact integers and x, y are O(1)
      const double x2 = x * x, x3 = x2 * x, x4 = x2 * x2, x5 = x4 * x, x6 = x4 * x2;
      const double y2 = y * y, y3 = y2 * y, y4 = y2 * y2, y5 = y4 * y, y6 = y4 * y2;
      return 324 * x6 + 1620 * x5 * y + 3429 * x4 * y2 + 4254 * x3 * y3 +
             3429 * x2 * y4 + 1620 * x * y5 + 324 * y6 - 972 * x5 - 1458 * x4 * y -
             2970 * x3 * y2 - 2970 * x2 * y3 - 1458 * x * y4 - 972 * y5 - 6147 * x4 -
             9150 * x3 * y - 17462 * x2 * y2 - 9150 * x * y3 - 6147 * y4 + 13914 * x3 +
             24086 * x2 * y + 24086 * x * y2 + 13914 * y3 - 11511 * x2 - 17258 * x * y -
             11511 * y2 + 4392 * x + 4392 * y - 648;
    }
  }
  throw std::logic_error("bad DeltaCase");
}

namespace {

// x(omega) is strictly decreasing from 1/2 to 0; invert it by bisection in
// u = 1/omega (x increasing in u), then read y.
double y_on_arc(DeltaCase c, double x_target) {
  double lo = 0.0, hi = 1.0;  // u-interval
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double x = parametric_curve(c, 1.0 / mid).x;
    (x < x_target ? lo : hi) = mid;
    if (hi - lo < 1e-16 * (1.0 + hi)) break;
  }
  const double u = 0.5 * (lo + hi);
  return parametric_curve(c, 1.0 / u).y;
}

}  // namespace

double temperate_area(DeltaCase c, double tol) {
  // frozen-corner area under the arc, then complement of the four corners
  boost::math::quadrature::tanh_sinh<double> integrator;
  double error = 0;
  const double corner = integrator.integrate(
      [c](double x) { return y_on_arc(c, x); }, 0.0, 0.5, tol, &error);
  if (error > 1e-6) {
    throw std::runtime_error("area quadrature did not converge (error " +
                             std::to_string(error) + ")");
  }
  return 1.0 - 4.0 * corner;
}

std::vector<CurveSample> curve_sample(DeltaCase c, int m) {
  if (m < 2) throw std::invalid_argument("curve_sample requires m >= 2");
  std::vector<CurveSample> out;
  out.reserve(size_t(m));
  constexpr double kPi4 = 0.78539816339744830961;
  out.push_back({1.0, 0.5, 0.0});
  for (int i = 1; i < m - 1; ++i) {
    const double theta = kPi4 * (1.0 + double(i) / double(m - 1));
    const double omega = std::tan(theta);
    const ScaledCoords p = parametric_curve(c, omega);
    out.push_back({omega, p.x, p.y});
  }
  out.push_back({kInf, 0.0, 0.5});
  return out;
}

}  // namespace asmshape
