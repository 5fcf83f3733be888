#ifndef ASMSHAPE_EFP_HPP
#define ASMSHAPE_EFP_HPP

#include <vector>

#include "asmshape/params.hpp"
#include "asmshape/polynomial.hpp"
#include "asmshape/rational.hpp"

namespace asmshape {

struct EfpQuery {
  int n = 0;
  int r = 0;
  int s = 0;
  ModelParams params;
};

// Variable substitution u(z) = -(z-1)/((t^2 - 2 t Delta) z + 1); u(1) = 0,
// u(0) = 1. Kept as documentation of the contour-reduction argument.
struct UTransform {
  Rational delta;
  Rational t;
  Rational operator()(const Rational& z) const {
    const Rational den = (t * t - 2 * t * delta) * z + 1;
    if (den == 0) throw std::domain_error("u(z) pole");
    return -(z - 1) / den;
  }
};

// Exact evaluation of the multiple-integral EFP representation by coefficient
// extraction around z = 0: for each variable the anticlockwise contour
// integral of z^-r f(z) is the coefficient of z^(r-1) in the analytic part.
// All inverted factors are unit series at the origin, so a truncation at
// exactly order r per variable is sufficient.
Rational efp_residue(const EfpQuery& query);
Rational efp_residue(int n, int r, int s, DeltaCase c);

// Fully parameterized path. h_by_size[k] must hold h_k for k = 1..n.
// orientation is the documented contour orientation sign (+1 anticlockwise);
// var_order optionally permutes which series slot each integration variable
// occupies (the result must not depend on it).
Rational efp_residue_general(int n, int r, int s, const Rational& delta,
                             const Rational& t,
                             const std::vector<RationalPoly>& h_by_size,
                             int orientation = +1,
                             const std::vector<int>* var_order = nullptr);

// The companion integral with all contours clockwise around z = 1, evaluated
// through its inductive reduction: simple pole in the innermost variable,
// then the one-variable-less identity, recursively. Exactly 1; every
// intermediate reduction is verified and a failure throws std::logic_error.
Rational unit_integral_check(int n, int r, int s, DeltaCase c);

// EFP profile in r at fixed s, computed by residues.
std::vector<Rational> efp_profile(int n, int s, DeltaCase c);

}  // namespace asmshape

#endif
