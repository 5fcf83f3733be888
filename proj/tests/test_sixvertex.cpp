#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "asmshape/enumeration.hpp"
#include "asmshape/rational.hpp"
#include "asmshape/sixvertex.hpp"

using namespace asmshape;

namespace {

Asm make(int n, std::vector<int> e) {
  Asm m(n);
  for (int i = 0; i < n * n; ++i) m.entries[size_t(i)] = static_cast<signed char>(e[size_t(i)]);
  return m;
}

// Independent brute force: every {-1,0,1} row that alternates starting and
// ending with +1, glued subject to column alternation. Deliberately not the
// partial-sum backtracking the library uses.
std::vector<std::vector<int>> valid_rows(int n) {
  std::vector<std::vector<int>> rows;
  std::vector<int> row(size_t(n), 0);
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = 0; i < n; ++i) {
      row[size_t(i)] = int(c % 3) - 1;
      c /= 3;
    }
    int sum = 0, last = -1;
    bool ok = true;
    for (int v : row) {
      if (v == 0) continue;
      if (v == last) { ok = false; break; }
      last = v;
      sum += v;
    }
    if (ok && sum == 1 && last == 1) rows.push_back(row);
  }
  return rows;
}

std::vector<Asm> brute_force_asms(int n) {
  const std::vector<std::vector<int>> rows = valid_rows(n);
  std::vector<Asm> out;
  std::vector<int> pick(size_t(n), 0);
  const int m = int(rows.size());
  while (true) {
    Asm a(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        a.at(i, j) = static_cast<signed char>(rows[size_t(pick[size_t(i)])][size_t(j)]);
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      int sum = 0, last = -1;
      for (int i = 0; i < n; ++i) {
        const int v = a.at(i, j);
        if (v == 0) continue;
        if (v == last) { ok = false; break; }
        last = v;
        sum += v;
      }
      if (sum != 1 || last != 1) ok = false;
    }
    if (ok) out.push_back(a);
    int k = n - 1;
    while (k >= 0 && pick[size_t(k)] == m - 1) pick[size_t(k--)] = 0;
    if (k < 0) break;
    ++pick[size_t(k)];
  }
  return out;
}

}  // namespace

TEST_CASE("validation accepts permutation matrices and the 3x3 center case") {
  CHECK(is_valid_asm(make(2, {0, 1, 1, 0})));
  CHECK(is_valid_asm(make(3, {0, 1, 0, 1, -1, 1, 0, 1, 0})));
  CHECK_FALSE(is_valid_asm(make(2, {1, 1, 0, 0})));        // bad column sums
  CHECK_FALSE(is_valid_asm(make(2, {-1, 1, 1, 0})));       // row starts with -1
  CHECK_FALSE(is_valid_asm(make(3, {1, -1, 1, 0, 1, 0, 0, 1, 0})));  // column -1 first
  CHECK_THROWS_AS(validate_asm(make(2, {1, 1, 0, 0})), ValidationError);
}

TEST_CASE("bijection round-trips and is injective on all ASMs up to n = 5") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<HArrow>> seen;
    for (const Asm& m : all_asms(n)) {
      const SixVertexConfig c = asm_to_sixvertex(m);
      validate_config(c);
      CHECK(sixvertex_to_asm(c) == m);
      CHECK(seen.insert(c.horizontal).second);
    }
  }
}

TEST_CASE("worked 4x4 configuration with a -1 entry") {
  // the ASM with the single -1 at the center of rows 2-3
  const Asm m = make(4, {0, 0, 1, 0,
                         1, 0, -1, 1,
                         0, 0, 1, 0,
                         0, 1, 0, 0});
  const SixVertexConfig c = asm_to_sixvertex(m);

  using H = HArrow;
  using V = VArrow;
  const std::vector<std::vector<H>> h = {
      {H::Left, H::Left, H::Left, H::Right, H::Right},
      {H::Left, H::Right, H::Right, H::Left, H::Right},
      {H::Left, H::Left, H::Left, H::Right, H::Right},
      {H::Left, H::Left, H::Right, H::Right, H::Right}};
  const std::vector<std::vector<V>> v = {
      {V::Down, V::Down, V::Down, V::Down},
      {V::Down, V::Down, V::Up, V::Down},
      {V::Up, V::Down, V::Down, V::Up},
      {V::Up, V::Down, V::Up, V::Up},
      {V::Up, V::Up, V::Up, V::Up}};
  for (int i = 0; i < 4; ++i)
    for (int e = 0; e <= 4; ++e) CHECK(c.hedge(i, e) == h[size_t(i)][size_t(e)]);
  for (int d = 0; d <= 4; ++d)
    for (int j = 0; j < 4; ++j) CHECK(c.vedge(d, j) == v[size_t(d)][size_t(j)]);

  CHECK(vertex_type_at(c, 1, 2).kind == VertexKind::C1);
  CHECK(vertex_type_at(c, 0, 2).kind == VertexKind::C2);
  CHECK(vertex_type_at(c, 1, 2).asm_entry() == -1);
}

TEST_CASE("vertex statistics: c2 = c1 + n and a/b balance under q = 1") {
  for (int n = 1; n <= 5; ++n) {
    for (const Asm& m : all_asms(n)) {
      const SixVertexConfig c = asm_to_sixvertex(m);
      std::map<VertexKind, int> count;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ++count[vertex_type_at(c, i, j).kind];
      CHECK(count[VertexKind::C2] == count[VertexKind::C1] + n);
      CHECK(count[VertexKind::C1] == minus_count(m));
    }
  }
}

TEST_CASE("enumeration agrees with an independent brute force") {
  for (int n = 1; n <= 4; ++n) {
    const std::vector<Asm> fast = all_asms(n);
    const std::vector<Asm> slow = brute_force_asms(n);
    REQUIRE(fast.size() == slow.size());
    std::set<std::vector<signed char>> a, b;
    for (const Asm& m : fast) a.insert(m.entries);
    for (const Asm& m : slow) b.insert(m.entries);
    CHECK(a == b);
  }
}

TEST_CASE("q-weighted counts match the closed small-n table") {
  const Rational q1 = 1, q2 = 2, q3 = 3;
  CHECK(weighted_count(1, q1) == 1);
  CHECK(weighted_count(2, q1) == 2);
  CHECK(weighted_count(3, q1) == 7);
  CHECK(weighted_count(3, q2) == 8);
  CHECK(weighted_count(3, q3) == 9);
  CHECK(weighted_count(4, q1) == 42);
  CHECK(weighted_count(4, q2) == 64);
  CHECK(weighted_count(4, q3) == 90);
  CHECK(weighted_count(5, q1) == 429);
  CHECK(weighted_count(5, q2) == 1024);
  CHECK(weighted_count(5, q3) == 2025);
  CHECK(weighted_count(6, q1) == 7436);
  CHECK(weighted_count(6, q2) == 32768);
  CHECK(weighted_count(6, q3) == 102060);
  // 2-enumeration is exactly 2^(n(n-1)/2)
  CHECK(weighted_count(6, q2) == rational_pow(2, 15));
  CHECK(partition_function(5, q3) == weighted_count(5, q3));
  // fractional weights work too: n = 3 gives 6 + q
  CHECK(weighted_count(3, Rational(1, 2)) == Rational(13, 2));
}

TEST_CASE("boundary correlation matches golden values and sums to one") {
  const std::vector<Rational> h51 = boundary_correlation(5, 1);
  const std::vector<Rational> want51 = {Rational(14, 143), Rational(35, 143),
                                        Rational(45, 143), Rational(35, 143),
                                        Rational(14, 143)};
  CHECK(h51 == want51);
  const std::vector<Rational> h53 = boundary_correlation(5, 3);
  const std::vector<Rational> want53 = {Rational(2, 45), Rational(11, 45),
                                        Rational(19, 45), Rational(11, 45),
                                        Rational(2, 45)};
  CHECK(h53 == want53);
  CHECK(boundary_correlation(3, 3) ==
        std::vector<Rational>{Rational(2, 9), Rational(5, 9), Rational(2, 9)});
  CHECK(boundary_correlation(4, 2) ==
        std::vector<Rational>{Rational(1, 8), Rational(3, 8), Rational(3, 8),
                              Rational(1, 8)});
  for (int n = 1; n <= 6; ++n) {
    for (const Rational& q : {Rational(1), Rational(2), Rational(5, 3)}) {
      Rational sum = 0;
      for (const Rational& v : boundary_correlation(n, q)) sum += v;
      CHECK(sum == 1);
    }
  }
}

TEST_CASE("the arrow-level EFP event coincides with the zero-block event") {
  for (int n = 1; n <= 5; ++n) {
    for (const Asm& m : all_asms(n)) {
      for (int s = 1; s <= n; ++s) {
        for (int r = 1; r <= n; ++r) {
          CHECK(efp_event_arrows(m, r, s) == efp_event_zero_block(m, r, s));
        }
      }
    }
  }
}

TEST_CASE("efp oracle golden values") {
  CHECK(efp_oracle(4, 1, 1, 2) == Rational(1, 8));
  CHECK(efp_oracle(4, 2, 2, 2) == Rational(1, 16));
  CHECK(efp_oracle(5, 3, 2, 1) == Rational(34, 143));
  CHECK(efp_oracle(5, 3, 2, 3) == Rational(8, 45));
  // r = n is the sure event; s = n forces the reverse-identity corner
  for (int n = 2; n <= 5; ++n) {
    CHECK(efp_oracle(n, n, n, 3) == 1);
    // r = 1, s = 1 is exactly the rightmost boundary-correlation component;
    // two rows cannot both put their +1 in the last column
    CHECK(efp_oracle(n, 1, 1, 1) == boundary_correlation(n, 1)[0]);
    CHECK(efp_oracle(n, 1, 2, 1) == 0);
  }
}

TEST_CASE("size bound is enforced") {
  CHECK_THROWS_AS(all_asms(9), BoundError);
  CHECK_NOTHROW(weighted_count(3, 1, /*max_n=*/3));
  CHECK_THROWS_AS(weighted_count(4, 1, /*max_n=*/3), BoundError);
}
