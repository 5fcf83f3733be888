#ifndef ASMSHAPE_POLYNOMIAL_HPP
#define ASMSHAPE_POLYNOMIAL_HPP

#include <vector>

#include "asmshape/rational.hpp"

namespace asmshape {

// Univariate polynomial over exact rationals; coefficient index = degree.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }
  static RationalPoly constant(const Rational& v) { return RationalPoly({v}); }
  // c0 + c1 z
  static RationalPoly linear(const Rational& c0, const Rational& c1) {
    return RationalPoly({c0, c1});
  }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial
  int degree() const { return int(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const {
    return k >= 0 && k < int(c_.size()) ? c_[size_t(k)] : Rational(0);
  }

  Rational operator()(const Rational& z) const {
    Rational acc = 0;
    for (size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
    return acc;
  }

  RationalPoly operator+(const RationalPoly& o) const;
  RationalPoly operator-(const RationalPoly& o) const;
  RationalPoly operator*(const RationalPoly& o) const;
  RationalPoly operator*(const Rational& s) const;
  RationalPoly pow(int e) const;
  RationalPoly derivative() const;

  bool operator==(const RationalPoly& o) const = default;

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace asmshape

#endif
