#include "asmshape/efp.hpp"

#include <stdexcept>
#include <string>

#include "asmshape/genfun.hpp"
#include "asmshape/multipoly.hpp"
#include "asmshape/series.hpp"

namespace asmshape {

namespace {

// Contour orientation convention, fixed once: the z = 0 contours of the EFP
// representation are anticlockwise (+1). The coefficient-of-z^(r-1) reading
// below assumes it; the companion z = 1 contours are clockwise and their sign
// is absorbed into the residue reduction in unit_integral_check.
constexpr int kAnticlockwise = +1;

// (z - 1)^(-m) = (-1)^m sum_k C(k+m-1, m-1) z^k as a one-variable series
// lifted into slot `var`.
TruncatedSeries inverse_z_minus_one_pow(int nvars, int order, int var, int m) {
  TruncatedSeries s(nvars, order);
  std::vector<int> e(static_cast<size_t>(nvars), 0);
  Rational binom = 1;  // C(k+m-1, m-1), k = 0
  const Rational sign = (m % 2 == 0) ? 1 : -1;
  for (int k = 0; k < order; ++k) {
    e[size_t(var)] = k;
    s.set_coeff(e, sign * binom);
    binom = binom * Rational(k + m) / Rational(k + 1);
  }
  return s;
}

DeltaCase case_of(const ModelParams& p) {
  if (p.t != 1) throw std::invalid_argument("only t = 1 cases are tabulated");
  if (p.delta == Rational(1, 2)) return DeltaCase::Q1;
  if (p.delta == 0) return DeltaCase::Q2;
  if (p.delta == Rational(-1, 2)) return DeltaCase::Q3;
  throw std::invalid_argument("no tabulated generating function for this Delta");
}

void check_query(int n, int r, int s) {
  if (n < 1 || r < 1 || r > n || s < 1 || s > n) {
    throw std::invalid_argument("efp indices out of range: n=" + std::to_string(n) +
                                " r=" + std::to_string(r) + " s=" + std::to_string(s));
  }
}

}  // namespace

namespace {

Rational efp_residue_with_h(int n, int r, int s, const Rational& delta,
                            const Rational& t, const MultiPoly& h_ns,
                            int orientation, const std::vector<int>* var_order) {
  check_query(n, r, s);
  const int order = r;  // coefficient of z^(r-1) is the highest one we read
  std::vector<int> slot(static_cast<size_t>(s));
  for (int j = 0; j < s; ++j) slot[size_t(j)] = var_order ? (*var_order)[size_t(j)] : j;

  const Rational alpha = t * t - 2 * t * delta;
  TruncatedSeries acc = TruncatedSeries::one(s, order);

  for (int j = 1; j <= s; ++j) {
    const int v = slot[size_t(j - 1)];
    const RationalPoly numer = RationalPoly::linear(1, alpha).pow(s - j);
    acc = acc * TruncatedSeries::from_multipoly(MultiPoly::from_univariate(s, v, numer),
                                                order);
    acc = acc * inverse_z_minus_one_pow(s, order, v, s - j + 1);
  }
  for (int j = 1; j <= s; ++j) {
    for (int k = j + 1; k <= s; ++k) {
      const int vj = slot[size_t(j - 1)], vk = slot[size_t(k - 1)];
      MultiPoly numer(s);
      {
        MultiPoly::Exponents e(static_cast<size_t>(s), 0);
        e[size_t(vj)] = 1;
        numer.add_term(e, Rational(1));
        e[size_t(vj)] = 0;
        e[size_t(vk)] = 1;
        numer.add_term(e, Rational(-1));
      }
      MultiPoly denom = MultiPoly::constant(s, 1);
      {
        MultiPoly::Exponents e(static_cast<size_t>(s), 0);
        e[size_t(vj)] = 1;
        e[size_t(vk)] = 1;
        denom.add_term(e, t * t);
        e[size_t(vk)] = 0;
        denom.add_term(e, -2 * t * delta);
      }
      const TruncatedSeries denom_s = TruncatedSeries::from_multipoly(denom, order);
      if (denom_s.coeff(std::vector<int>(static_cast<size_t>(s), 0)) != 1) {
        throw std::logic_error("cross factor is not a unit series at the origin");
      }
      acc = acc * TruncatedSeries::from_multipoly(numer, order);
      acc = acc * denom_s.invert();
    }
  }
  {
    MultiPoly h = h_ns;
    // relabel the h variables into the chosen slots
    if (var_order) {
      MultiPoly relabeled(s);
      for (const auto& [e, val] : h.terms()) {
        MultiPoly::Exponents re(static_cast<size_t>(s), 0);
        for (int j = 0; j < s; ++j) re[size_t(slot[size_t(j)])] = e[size_t(j)];
        relabeled.add_term(re, val);
      }
      h = relabeled;
    }
    acc = acc * TruncatedSeries::from_multipoly(h, order);
  }

  const Rational prefactor = (s % 2 == 0) ? 1 : -1;
  const Rational target = acc.coeff(std::vector<int>(static_cast<size_t>(s), r - 1));
  // each reversed contour contributes one sign flip
  return prefactor * target * rational_pow(Rational(orientation), s);
}

}  // namespace

Rational efp_residue_general(int n, int r, int s, const Rational& delta,
                             const Rational& t,
                             const std::vector<RationalPoly>& h_by_size,
                             int orientation, const std::vector<int>* var_order) {
  return efp_residue_with_h(n, r, s, delta, t, h_multi_from(h_by_size, n, s),
                            orientation, var_order);
}

Rational efp_residue(int n, int r, int s, DeltaCase c) {
  const ModelParams p = ModelParams::from_case(c);
  return efp_residue_with_h(n, r, s, p.delta, p.t, h_multi(n, s, c),
                            kAnticlockwise, nullptr);
}

Rational efp_residue(const EfpQuery& q) {
  return efp_residue(q.n, q.r, q.s, case_of(q.params));
}

Rational unit_integral_check(int n, int r, int s, DeltaCase c) {
  check_query(n, r, s);
  // Clockwise contours around z = 1: integrating the innermost variable picks
  // the simple pole of the j = s factor (z_s - 1)^-1; the residue substitutes
  // z_s = 1 everywhere, which must collapse h_(n,s) to h_(n,s-1). Repeat.
  for (int cur = s; cur >= 2; --cur) {
    const MultiPoly reduced = h_multi(n, cur, c).substitute(cur - 1, Rational(1));
    if (!(reduced == h_multi(n, cur - 1, c))) {
      throw std::logic_error("h_multi reduction at z = 1 failed for s = " +
                             std::to_string(cur));
    }
  }
  // Base case: residue at z = 1 of h_n(z) / (z^r (z - 1)) is h_n(1).
  return h_poly(n, c)(Rational(1));
}

std::vector<Rational> efp_profile(int n, int s, DeltaCase c) {
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(n));
  for (int r = 1; r <= n; ++r) out.push_back(efp_residue(n, r, s, c));
  return out;
}

}  // namespace asmshape
