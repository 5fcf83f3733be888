#include "asmshape/enumeration.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace asmshape {

namespace {

void check_bounds(int n, int max_n) {
  if (n < 1) throw std::invalid_argument("enumeration requires n >= 1");
  if (n > max_n) {
    throw BoundError("enumeration refused for n = " + std::to_string(n) +
                     " (bound " + std::to_string(max_n) +
                     "; raise the bound explicitly to override)");
  }
  if (n > 30) throw BoundError("enumeration mask width exceeded");
}

// The difference of two column-partial-sum masks is a valid ASM row iff its
// nonzero entries alternate starting and ending with +1.
bool valid_row_diff(uint32_t prev, uint32_t next, int n) {
  int expected = +1;
  for (int j = 0; j < n; ++j) {
    const int d = int((next >> j) & 1u) - int((prev >> j) & 1u);
    if (d == 0) continue;
    if (d != expected) return false;
    expected = -expected;
  }
  return expected == -1;  // odd number of alternating nonzeros
}

struct Enumerator {
  int n;
  const std::function<void(const Asm&)>& visit;
  Asm work;
  std::vector<std::vector<uint32_t>> masks_by_popcount;

  Enumerator(int n_, const std::function<void(const Asm&)>& v)
      : n(n_), visit(v), work(n_), masks_by_popcount(n_ + 1) {
    for (uint32_t m = 0; m < (1u << n); ++m) {
      masks_by_popcount[std::popcount(m)].push_back(m);
    }
  }

  void recurse(int row, uint32_t prev) {
    if (row == n) {
      visit(work);
      return;
    }
    for (uint32_t next : masks_by_popcount[row + 1]) {
      if (!valid_row_diff(prev, next, n)) continue;
      for (int j = 0; j < n; ++j) {
        work.at(row, j) = static_cast<signed char>(int((next >> j) & 1u) -
                                                   int((prev >> j) & 1u));
      }
      recurse(row + 1, next);
    }
  }
};

}  // namespace

void enumerate_asms(int n, const std::function<void(const Asm&)>& visit, int max_n) {
  check_bounds(n, max_n);
  Enumerator e(n, visit);
  e.recurse(0, 0);
}

std::vector<Asm> all_asms(int n, int max_n) {
  std::vector<Asm> out;
  enumerate_asms(n, [&](const Asm& m) { out.push_back(m); }, max_n);
  return out;
}

Rational weighted_count(int n, const Rational& q, int max_n) {
  if (q <= 0) throw std::invalid_argument("q must be positive");
  Rational total = 0;
  enumerate_asms(n, [&](const Asm& m) { total += rational_pow(q, minus_count(m)); },
                 max_n);
  return total;
}

Rational partition_function(int n, const Rational& q, int max_n) {
  return weighted_count(n, q, max_n);
}

std::vector<Rational> boundary_correlation(int n, const Rational& q, int max_n) {
  std::vector<Rational> buckets(n, Rational(0));
  Rational total = 0;
  enumerate_asms(n,
                 [&](const Asm& m) {
                   const Rational w = rational_pow(q, minus_count(m));
                   total += w;
                   for (int j = 0; j < n; ++j) {
                     if (m.at(0, j) == 1) {
                       buckets[n - j - 1] += w;  // position from the right
                       break;
                     }
                   }
                 },
                 max_n);
  for (auto& b : buckets) b /= total;
  return buckets;
}

bool efp_event_arrows(const Asm& m, int r, int s) {
  const int cols = m.n - r;
  for (int i = 0; i < s; ++i) {
    int prefix = 0;
    for (int j = 0; j < cols; ++j) prefix += m.at(i, j);
    if (prefix != 0) return false;
  }
  return true;
}

bool efp_event_zero_block(const Asm& m, int r, int s) {
  const int cols = m.n - r;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < cols; ++j)
      if (m.at(i, j) != 0) return false;
  return true;
}

Rational efp_oracle(int n, int r, int s, const Rational& q, int max_n) {
  if (r < 1 || r > n || s < 1 || s > n) {
    throw std::invalid_argument("efp indices out of range: r=" + std::to_string(r) +
                                " s=" + std::to_string(s) + " n=" + std::to_string(n));
  }
  Rational total = 0, event = 0;
  enumerate_asms(n,
                 [&](const Asm& m) {
                   const Rational w = rational_pow(q, minus_count(m));
                   total += w;
                   if (efp_event_arrows(m, r, s)) event += w;
                 },
                 max_n);
  return event / total;
}

}  // namespace asmshape
