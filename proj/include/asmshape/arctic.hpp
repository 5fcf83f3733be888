#ifndef ASMSHAPE_ARCTIC_HPP
#define ASMSHAPE_ARCTIC_HPP

#include <utility>
#include <vector>

#include "asmshape/params.hpp"
#include "asmshape/rational.hpp"

namespace asmshape {

// Point in the unit square; x = (N-r)/N from the left, y = s/N from the top.
struct ScaledCoords {
  double x = 0;
  double y = 0;
};

// Left-hand side of the reduced saddle-point equation
//   g(z; x, y) = y/(z-1) - (1-x)/z - y/(z + 1 - 2*Delta) + L'(z)
// at t = 1; affine in x and in y for fixed z.
struct ReducedSpe {
  DeltaCase tag;
  double g(double z, double x, double y) const;
  double dg_dz(double z, double x, double y) const;
};

// Unique (x, y) making z = omega a double root of the reduced equation: the
// two conditions g = 0, dg/dz = 0 are linear in (x, y). omega = 1 is the
// degenerate endpoint, returned as the analytic limit (1/2, 0).
ScaledCoords double_root_solve(DeltaCase c, double omega);

// Closed-form parametrizations, evaluated directly (independent of the
// solver). omega = +infinity returns the analytic endpoint (0, 1/2).
ScaledCoords parametric_curve(DeltaCase c, double omega);

// Exact-rational parametric point; available for the q = 2 and q = 3 curves
// (rational functions of omega), throws for q = 1.
std::pair<Rational, Rational> parametric_curve_exact(DeltaCase c, const Rational& omega);

// Left-minus-right residual of the implicit curve equation; zero on the curve.
double implicit_residual(DeltaCase c, ScaledCoords p);
Rational implicit_residual_exact(DeltaCase c, const Rational& x, const Rational& y);

// Area enclosed by the full limit shape (the quarter branch completed by the
// symmetries of the ensemble). q = 2 gives the inscribed circle, area pi/4.
double temperate_area(DeltaCase c, double tol = 1e-10);

struct CurveSample {
  double omega = 0;  // +infinity at the left contact point
  double x = 0;
  double y = 0;
};

// m >= 2 points from (1/2, 0) to (0, 1/2), endpoints exact, omega spaced via
// a tangent reparametrization for roughly uniform arc length.
std::vector<CurveSample> curve_sample(DeltaCase c, int m);

}  // namespace asmshape

#endif
