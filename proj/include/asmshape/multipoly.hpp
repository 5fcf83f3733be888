#ifndef ASMSHAPE_MULTIPOLY_HPP
#define ASMSHAPE_MULTIPOLY_HPP

#include <map>
#include <vector>

#include "asmshape/polynomial.hpp"
#include "asmshape/rational.hpp"

namespace asmshape {

// Sparse multivariate polynomial over rationals; key = exponent tuple.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(int nvars, const Rational& v);
  // Lift a univariate polynomial into variable `var` of an nvars-variate ring.
  static MultiPoly from_univariate(int nvars, int var, const RationalPoly& p);

  int nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add_term(const Exponents& e, const Rational& v);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rational& s) const;
  bool operator==(const MultiPoly& o) const = default;

  // Substitutes a rational value for variable `var`; the result has one
  // variable fewer (remaining variables keep their relative order).
  MultiPoly substitute(int var, const Rational& value) const;

  // Evaluates at a full point.
  Rational operator()(const std::vector<Rational>& z) const;

  // Exact division by the binomial (z_a - z_b); throws std::logic_error if the
  // remainder is nonzero (internal-consistency failure, never expected).
  MultiPoly divide_exact_by_binomial(int a, int b) const;

  // Swap two variables (for symmetry checks).
  MultiPoly swap_vars(int a, int b) const;

  int max_degree(int var) const;

 private:
  int nvars_;
  std::map<Exponents, Rational> t_;
};

}  // namespace asmshape

#endif
