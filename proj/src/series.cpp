#include "asmshape/series.hpp"

#include <stdexcept>

namespace asmshape {

namespace {

size_t ipow(size_t b, int e) {
  size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int nvars, int order)
    : nvars_(nvars), order_(order), c_(ipow(static_cast<size_t>(order), nvars), Rational(0)) {
  if (nvars < 1 || order < 1) throw std::invalid_argument("bad series shape");
}

TruncatedSeries TruncatedSeries::one(int nvars, int order) {
  TruncatedSeries s(nvars, order);
  s.c_[0] = 1;
  return s;
}

size_t TruncatedSeries::index(const std::vector<int>& e) const {
  size_t idx = 0;
  for (int v = nvars_ - 1; v >= 0; --v) idx = idx * size_t(order_) + size_t(e[size_t(v)]);
  return idx;
}

const Rational& TruncatedSeries::coeff(const std::vector<int>& e) const {
  return c_[index(e)];
}

void TruncatedSeries::set_coeff(const std::vector<int>& e, const Rational& v) {
  c_[index(e)] = v;
}

TruncatedSeries TruncatedSeries::from_multipoly(const MultiPoly& p, int order) {
  TruncatedSeries s(p.nvars(), order);
  for (const auto& [e, v] : p.terms()) {
    bool keep = true;
    for (int x : e)
      if (x >= order) { keep = false; break; }
    if (keep) s.c_[s.index(e)] = v;
  }
  return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  if (nvars_ != o.nvars_ || order_ != o.order_) {
    throw std::invalid_argument("series shape mismatch");
  }
  TruncatedSeries out(nvars_, order_);
  const size_t total = c_.size();
  // decode table: exponent tuple for each flat index
  std::vector<int> exps(total * size_t(nvars_));
  {
    std::vector<int> e(static_cast<size_t>(nvars_), 0);
    for (size_t i = 0; i < total; ++i) {
      for (int v = 0; v < nvars_; ++v) exps[i * size_t(nvars_) + size_t(v)] = e[size_t(v)];
      for (int v = 0; v < nvars_; ++v) {
        if (++e[size_t(v)] < order_) break;
        e[size_t(v)] = 0;
      }
    }
  }
  for (size_t ia = 0; ia < total; ++ia) {
    if (c_[ia] == 0) continue;
    const int* ea = &exps[ia * size_t(nvars_)];
    for (size_t ib = 0; ib < total; ++ib) {
      if (o.c_[ib] == 0) continue;
      const int* eb = &exps[ib * size_t(nvars_)];
      bool fits = true;
      for (int v = 0; v < nvars_ && fits; ++v) fits = ea[v] + eb[v] < order_;
      if (!fits) continue;
      size_t idx = 0;
      for (int v = nvars_ - 1; v >= 0; --v)
        idx = idx * size_t(order_) + size_t(ea[v] + eb[v]);
      out.c_[idx] += c_[ia] * o.c_[ib];
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  TruncatedSeries out = *this;
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] += o.c_[i];
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  TruncatedSeries out = *this;
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] -= o.c_[i];
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& s) const {
  TruncatedSeries out = *this;
  for (auto& v : out.c_) v *= s;
  return out;
}

TruncatedSeries TruncatedSeries::invert() const {
  if (c_[0] == 0) {
    throw std::domain_error("cannot invert a series with zero constant term");
  }
  // Newton iteration b <- b (2 - a b); doubles the correct total degree each
  // round, so ceil(log2) of the maximal total degree + 1 rounds suffice.
  TruncatedSeries b(nvars_, order_);
  b.c_[0] = 1 / c_[0];
  const int target = nvars_ * (order_ - 1);
  TruncatedSeries two(nvars_, order_);
  two.c_[0] = 2;
  for (int correct = 1; correct <= target; correct *= 2) {
    b = b * (two - *this * b);
  }
  return b;
}

}  // namespace asmshape
