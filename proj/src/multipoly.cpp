#include "asmshape/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace asmshape {

MultiPoly MultiPoly::constant(int nvars, const Rational& v) {
  MultiPoly p(nvars);
  p.add_term(Exponents(static_cast<size_t>(nvars), 0), v);
  return p;
}

MultiPoly MultiPoly::from_univariate(int nvars, int var, const RationalPoly& p) {
  MultiPoly out(nvars);
  Exponents e(static_cast<size_t>(nvars), 0);
  const auto& c = p.coeffs();
  for (size_t k = 0; k < c.size(); ++k) {
    e[size_t(var)] = int(k);
    out.add_term(e, c[k]);
  }
  return out;
}

void MultiPoly::add_term(const Exponents& e, const Rational& v) {
  if (v == 0) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, v);
  } else {
    it->second += v;
    if (it->second == 0) t_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly out = *this;
  for (const auto& [e, v] : o.t_) out.add_term(e, v);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly out = *this;
  for (const auto& [e, v] : o.t_) out.add_term(e, -v);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly out(nvars_);
  Exponents e(static_cast<size_t>(nvars_), 0);
  for (const auto& [ea, va] : t_) {
    for (const auto& [eb, vb] : o.t_) {
      for (int i = 0; i < nvars_; ++i) e[size_t(i)] = ea[size_t(i)] + eb[size_t(i)];
      out.add_term(e, va * vb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator*(const Rational& s) const {
  MultiPoly out(nvars_);
  if (s == 0) return out;
  for (const auto& [e, v] : t_) out.t_.emplace(e, v * s);
  return out;
}

MultiPoly MultiPoly::substitute(int var, const Rational& value) const {
  MultiPoly out(nvars_ - 1);
  Exponents e(static_cast<size_t>(nvars_ - 1), 0);
  for (const auto& [ea, v] : t_) {
    int k = 0;
    for (int i = 0; i < nvars_; ++i)
      if (i != var) e[size_t(k++)] = ea[size_t(i)];
    out.add_term(e, v * rational_pow(value, ea[size_t(var)]));
  }
  return out;
}

Rational MultiPoly::operator()(const std::vector<Rational>& z) const {
  Rational acc = 0;
  for (const auto& [e, v] : t_) {
    Rational term = v;
    for (int i = 0; i < nvars_; ++i) term *= rational_pow(z[size_t(i)], e[size_t(i)]);
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::divide_exact_by_binomial(int a, int b) const {
  // Treat the dividend as a polynomial in z_a; synthetic division by
  // (z_a - z_b) with Horner from the top degree. Remainder must vanish.
  const int top = max_degree(a);
  // coefficient polys of z_a^d, each an nvars-variate poly with exponent a = 0
  std::vector<MultiPoly> coef(static_cast<size_t>(top) + 1, MultiPoly(nvars_));
  for (const auto& [e, v] : t_) {
    Exponents r = e;
    const int d = r[size_t(a)];
    r[size_t(a)] = 0;
    coef[size_t(d)].add_term(r, v);
  }
  MultiPoly zb(nvars_);
  {
    Exponents e(static_cast<size_t>(nvars_), 0);
    e[size_t(b)] = 1;
    zb.add_term(e, Rational(1));
  }
  MultiPoly out(nvars_);
  MultiPoly carry(nvars_);  // quotient coefficient being propagated
  for (int d = top; d >= 1; --d) {
    carry = carry * zb + coef[size_t(d)];
    // carry is the quotient coefficient of z_a^(d-1)
    for (const auto& [e, v] : carry.terms()) {
      Exponents r = e;
      r[size_t(a)] += d - 1;
      out.add_term(r, v);
    }
  }
  MultiPoly remainder = carry * zb + coef[0];
  if (!remainder.is_zero()) {
    throw std::logic_error("exact binomial division left a nonzero remainder");
  }
  return out;
}

MultiPoly MultiPoly::swap_vars(int a, int b) const {
  MultiPoly out(nvars_);
  for (const auto& [e, v] : t_) {
    Exponents r = e;
    std::swap(r[size_t(a)], r[size_t(b)]);
    out.add_term(r, v);
  }
  return out;
}

int MultiPoly::max_degree(int var) const {
  int d = 0;
  for (const auto& [e, v] : t_) d = std::max(d, e[size_t(var)]);
  return d;
}

}  // namespace asmshape
