#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "asmshape/arctic.hpp"

using namespace asmshape;

namespace {

const DeltaCase kCases[] = {DeltaCase::Q1, DeltaCase::Q2, DeltaCase::Q3};
const double kOmegas[] = {1.1, 1.5, 2.0, 5.0, 10.0, 100.0};
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("double-root solver reproduces the closed-form parametrizations") {
  for (DeltaCase c : kCases) {
    for (double w : kOmegas) {
      const ScaledCoords solved = double_root_solve(c, w);
      const ScaledCoords closed = parametric_curve(c, w);
      CHECK(solved.x == doctest::Approx(closed.x).epsilon(1e-10));
      CHECK(solved.y == doctest::Approx(closed.y).epsilon(1e-10));
    }
    // endpoints
    const ScaledCoords a = double_root_solve(c, 1.0);
    CHECK(a.x == 0.5);
    CHECK(a.y == 0.0);
    const ScaledCoords b = double_root_solve(c, kInf);
    CHECK(b.x == 0.0);
    CHECK(b.y == 0.5);
  }
}

TEST_CASE("solved points carry a genuine double root certificate") {
  for (DeltaCase c : kCases) {
    const ReducedSpe spe{c};
    for (double w : kOmegas) {
      const ScaledCoords p = double_root_solve(c, w);
      CHECK(std::abs(spe.g(w, p.x, p.y)) < 1e-10);
      CHECK(std::abs(spe.dg_dz(w, p.x, p.y)) < 1e-8);
      // and the root is double, not triple: the second difference of g grows
      // quadratically in the step. g'' decays like w^-4, so scale the bound.
      if (w <= 10.0) {
        const double h = 1e-2;
        const double second = spe.g(w + h, p.x, p.y) + spe.g(w - h, p.x, p.y) -
                              2.0 * spe.g(w, p.x, p.y);
        CHECK(std::abs(second) > 1e-8 / (w * w * w * w));
      }
    }
  }
}

TEST_CASE("parametric points satisfy the implicit equations") {
  for (DeltaCase c : kCases) {
    for (double w : kOmegas) {
      const ScaledCoords p = parametric_curve(c, w);
      CHECK(std::abs(implicit_residual(c, p)) < 1e-9);
    }
  }
}

TEST_CASE("exact rational points annihilate the implicit polynomials") {
  for (DeltaCase c : {DeltaCase::Q2, DeltaCase::Q3}) {
    for (const Rational& w : {Rational(1), Rational(3, 2), Rational(2),
                              Rational(3), Rational(10), Rational(117, 4)}) {
      const auto [x, y] = parametric_curve_exact(c, w);
      CHECK(implicit_residual_exact(c, x, y) == 0);
    }
  }
  // pinned value on the q = 3 curve
  const auto [x2, y2] = parametric_curve_exact(DeltaCase::Q3, 2);
  CHECK(x2 == Rational(163, 675));
  CHECK(y2 == Rational(169, 2025));
  CHECK_THROWS_AS(parametric_curve_exact(DeltaCase::Q1, 2),
                  std::invalid_argument);
}

TEST_CASE("q = 1 branch against the explicit algebraic form") {
  // ellipse through (1/2, 0) and (0, 1/2); spot values
  const ScaledCoords p = parametric_curve(DeltaCase::Q1, 1.0);
  CHECK(p.x == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(p.y == doctest::Approx(0.0).epsilon(1e-14));
  // omega -> infinity tends to (0, 1/2)
  const ScaledCoords far = parametric_curve(DeltaCase::Q1, 1e8);
  CHECK(far.x == doctest::Approx(0.0).epsilon(1e-7));
  CHECK(far.y == doctest::Approx(0.5).epsilon(1e-7));
}

TEST_CASE("branch is monotone and stays inside the corner triangle") {
  for (DeltaCase c : kCases) {
    double prev_x = 0.5, prev_y = 0.0;
    for (double w = 1.0; w < 400.0; w *= 1.07) {
      const ScaledCoords p = parametric_curve(c, w);
      CHECK(p.x <= prev_x + 1e-12);
      CHECK(p.y >= prev_y - 1e-12);
      CHECK(p.x >= 0.0);
      CHECK(p.x <= 0.5);
      CHECK(p.y >= 0.0);
      CHECK(p.y <= 0.5);
      prev_x = p.x;
      prev_y = p.y;
    }
  }
}

TEST_CASE("curve_sample spans the quarter branch with exact endpoints") {
  for (DeltaCase c : kCases) {
    const std::vector<CurveSample> pts = curve_sample(c, 41);
    REQUIRE(pts.size() == 41);
    CHECK(pts.front().x == 0.5);
    CHECK(pts.front().y == 0.0);
    CHECK(std::isinf(pts.back().omega));
    CHECK(pts.back().x == 0.0);
    CHECK(pts.back().y == 0.5);
    for (const CurveSample& p : pts) {
      CHECK(std::abs(implicit_residual(c, {p.x, p.y})) < 1e-9);
    }
  }
  CHECK_THROWS_AS(curve_sample(DeltaCase::Q1, 1), std::invalid_argument);
}

TEST_CASE("temperate areas: exact circle value and the expected ordering") {
  const double a1 = temperate_area(DeltaCase::Q1);
  const double a2 = temperate_area(DeltaCase::Q2);
  const double a3 = temperate_area(DeltaCase::Q3);
  CHECK(a2 == doctest::Approx(kPi / 4.0).epsilon(1e-8));
  // larger q pushes the frozen corners outward
  CHECK(a1 > a2);
  CHECK(a2 > a3);
  for (double a : {a1, a2, a3}) {
    CHECK(a > 0.5);
    CHECK(a < 1.0);
  }
}

TEST_CASE("invalid omega is rejected") {
  CHECK_THROWS_AS(double_root_solve(DeltaCase::Q2, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(parametric_curve(DeltaCase::Q3, 0.0), std::invalid_argument);
}
