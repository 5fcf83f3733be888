#ifndef ASMSHAPE_SERIES_HPP
#define ASMSHAPE_SERIES_HPP

#include <vector>

#include "asmshape/multipoly.hpp"
#include "asmshape/rational.hpp"

namespace asmshape {

// Dense multivariate power series truncated at exponent < order in every
// variable. The quotient ring structure makes all operations exact: two
// routes through the same product agree coefficient by coefficient.
class TruncatedSeries {
 public:
  TruncatedSeries(int nvars, int order);
  static TruncatedSeries one(int nvars, int order);
  static TruncatedSeries from_multipoly(const MultiPoly& p, int order);

  int nvars() const { return nvars_; }
  int order() const { return order_; }

  const Rational& coeff(const std::vector<int>& exponents) const;
  void set_coeff(const std::vector<int>& exponents, const Rational& v);

  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const Rational& s) const;

  // Multiplicative inverse; requires a nonzero constant term.
  // Throws std::domain_error otherwise.
  TruncatedSeries invert() const;

  bool operator==(const TruncatedSeries& o) const = default;

 private:
  size_t index(const std::vector<int>& exponents) const;
  int nvars_;
  int order_;
  std::vector<Rational> c_;  // size order^nvars, stride order^var
};

}  // namespace asmshape

#endif
