#include "asmshape/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace asmshape {

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
  std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t k = 0; k < c_.size(); ++k) out[k] += c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) out[k] += o.c_[k];
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
  std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t k = 0; k < c_.size(); ++k) out[k] += c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) out[k] -= o.c_[k];
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
  if (is_zero() || o.is_zero()) return RationalPoly();
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::operator*(const Rational& s) const {
  std::vector<Rational> out = c_;
  for (auto& v : out) v *= s;
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  RationalPoly acc = constant(1);
  RationalPoly b = *this;
  for (int k = e; k > 0; k >>= 1) {
    if (k & 1) acc = acc * b;
    b = b * b;
  }
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  if (c_.size() <= 1) return RationalPoly();
  std::vector<Rational> out(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * Rational(long(k));
  return RationalPoly(std::move(out));
}

}  // namespace asmshape
