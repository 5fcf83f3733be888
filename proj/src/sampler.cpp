#include "asmshape/sampler.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <string>

#include "asmshape/enumeration.hpp"

namespace asmshape {

namespace {

uint64_t splitmix64(uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Xoshiro256::Xoshiro256(uint64_t seed) {
  uint64_t sm = seed;
  for (auto& s : s_) s = splitmix64(sm);
}

uint64_t Xoshiro256::next() {
  const uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256::uniform() { return double(next() >> 11) * 0x1.0p-53; }

uint32_t Xoshiro256::below(uint32_t n) {
  // rejection from the top to avoid modulo bias
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return uint32_t(v % n);
}

HeightState HeightState::from_asm(const Asm& m) {
  validate_asm(m);
  HeightState st;
  st.n = m.n;
  const int n = m.n;
  st.height.assign(static_cast<size_t>(n + 1) * size_t(n + 1), 0);
  st.a.assign(m.entries.begin(), m.entries.end());
  st.minus_k = asmshape::minus_count(m);
  // corner sums S(i, j) = sum of entries in the top-left i x j block
  std::vector<int> s(static_cast<size_t>(n + 1) * size_t(n + 1), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      s[size_t(i) * (n + 1) + j] = s[size_t(i - 1) * (n + 1) + j] +
                                   s[size_t(i) * (n + 1) + j - 1] -
                                   s[size_t(i - 1) * (n + 1) + j - 1] +
                                   m.at(i - 1, j - 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      st.h(i, j) = i + j - 2 * s[size_t(i) * (n + 1) + j];
  return st;
}

HeightState HeightState::initial(int n) {
  Asm m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return from_asm(m);
}

Asm HeightState::to_asm() const {
  Asm m(n);
  m.entries.assign(a.begin(), a.end());
  return m;
}

SixVertexConfig HeightState::to_sixvertex() const { return asm_to_sixvertex(to_asm()); }

bool step_inplace(HeightState& st, double q, Xoshiro256& rng) {
  const int n = st.n;
  if (n < 2) return false;  // unique state
  const int i = 1 + int(rng.below(uint32_t(n - 1)));
  const int j = 1 + int(rng.below(uint32_t(n - 1)));
  const int up = st.h(i - 1, j), down = st.h(i + 1, j);
  const int left = st.h(i, j - 1), right = st.h(i, j + 1);
  if (up != down || up != left || up != right) return false;
  const int center = st.h(i, j);
  const int delta = center - up;  // +-1; corner sum S(i,j) changes by delta
  // the four ASM entries touching dual vertex (i, j), 1-based matrix indices
  signed char* a00 = &st.a[size_t(i - 1) * n + (j - 1)];
  signed char* a01 = &st.a[size_t(i - 1) * n + j];
  signed char* a10 = &st.a[size_t(i) * n + (j - 1)];
  signed char* a11 = &st.a[size_t(i) * n + j];
  const int n00 = *a00 + delta, n01 = *a01 - delta;
  const int n10 = *a10 - delta, n11 = *a11 + delta;
  assert(n00 >= -1 && n00 <= 1 && n01 >= -1 && n01 <= 1);
  assert(n10 >= -1 && n10 <= 1 && n11 >= -1 && n11 <= 1);
  const int dk = (n00 == -1) + (n01 == -1) + (n10 == -1) + (n11 == -1) -
                 (*a00 == -1) - (*a01 == -1) - (*a10 == -1) - (*a11 == -1);
  if (dk > 0) {
    double accept = q;
    for (int t = 1; t < dk; ++t) accept *= q;
    if (accept < 1.0 && rng.uniform() >= accept) return false;
  } else if (dk < 0 && q > 1.0) {
    double accept = 1.0 / q;
    for (int t = 1; t < -dk; ++t) accept /= q;
    if (rng.uniform() >= accept) return false;
  } else if (dk < 0 && q < 1.0) {
    // q < 1 favours fewer -1 entries: always accept
  }
  st.h(i, j) = 2 * up - center;
  *a00 = static_cast<signed char>(n00);
  *a01 = static_cast<signed char>(n01);
  *a10 = static_cast<signed char>(n10);
  *a11 = static_cast<signed char>(n11);
  st.minus_k += dk;
  return true;
}

HeightState step(const HeightState& state, const Rational& q, Xoshiro256& rng) {
  HeightState copy = state;
  step_inplace(copy, q.get_d(), rng);
  return copy;
}

void sweep(HeightState& st, double q, Xoshiro256& rng) {
  const long proposals = long(st.n - 1) * long(st.n - 1);
  for (long k = 0; k < proposals; ++k) step_inplace(st, q, rng);
}

namespace {

void check_chain_config(const ChainConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("chain requires n >= 1");
  if (cfg.n > cfg.max_n) {
    throw BoundError("sampler refused for n = " + std::to_string(cfg.n) +
                     " (bound " + std::to_string(cfg.max_n) + ")");
  }
  if (cfg.q <= 0) throw std::invalid_argument("q must be positive");
  if (cfg.sweeps_between < 1 || cfg.n_samples < 1 || cfg.sweeps_burnin < 0) {
    throw std::invalid_argument("invalid sweep/sample counts");
  }
}

}  // namespace

DensityField sample_density(const ChainConfig& cfg) {
  check_chain_config(cfg);
  const int n = cfg.n;
  const double q = cfg.q.get_d();
  Xoshiro256 rng(cfg.seed);
  HeightState st = HeightState::initial(n);
  for (long k = 0; k < cfg.sweeps_burnin; ++k) sweep(st, q, rng);
  std::vector<long> plus(static_cast<size_t>(n) * n, 0), minus(static_cast<size_t>(n) * n, 0);
  for (long sample = 0; sample < cfg.n_samples; ++sample) {
    for (long k = 0; k < cfg.sweeps_between; ++k) sweep(st, q, rng);
    for (size_t idx = 0; idx < st.a.size(); ++idx) {
      plus[idx] += st.a[idx] == 1;
      minus[idx] += st.a[idx] == -1;
    }
  }
  DensityField f;
  f.n = n;
  f.samples = cfg.n_samples;
  f.plus_mean.resize(static_cast<size_t>(n) * n);
  f.minus_mean.resize(static_cast<size_t>(n) * n);
  f.c_mean.resize(static_cast<size_t>(n) * n);
  for (size_t idx = 0; idx < f.plus_mean.size(); ++idx) {
    f.plus_mean[idx] = double(plus[idx]) / double(cfg.n_samples);
    f.minus_mean[idx] = double(minus[idx]) / double(cfg.n_samples);
    f.c_mean[idx] = f.plus_mean[idx] + f.minus_mean[idx];
  }
  return f;
}

std::vector<ScaledCoords> empirical_boundary(const DensityField& field,
                                             double threshold, int* skipped) {
  if (threshold <= 0 || threshold >= 1) {
    throw std::invalid_argument("threshold must lie in (0, 1)");
  }
  const int n = field.n;
  std::vector<ScaledCoords> out;
  int missed = 0;
  for (int i = 0; i < n / 2; ++i) {
    bool found = false;
    for (int j = 0; j < n / 2; ++j) {
      const double rho = field.minus_mean[size_t(i) * n + j];
      if (rho >= threshold) {
        double xj = double(j);
        if (j > 0) {
          const double prev = field.minus_mean[size_t(i) * n + j - 1];
          xj = double(j - 1) + (threshold - prev) / (rho - prev);
        }
        out.push_back({(xj + 0.5) / double(n), (double(i) + 0.5) / double(n)});
        found = true;
        break;
      }
    }
    if (!found) ++missed;
  }
  if (skipped) *skipped = missed;
  return out;
}

namespace {

// EFP arrow event: the s topmost horizontal arrows at the edge between the
// r-th and (r+1)-th vertical lines from the right all point left, i.e. the
// corner sum S(s, n-r) vanishes, i.e. height(s, n-r) = s + (n-r).
bool efp_event(const HeightState& st, int r, int s) {
  const int c = st.n - r;
  return st.h(s, c) == s + c;
}

}  // namespace

double efp_estimate(const ChainConfig& cfg, int r, int s) {
  check_chain_config(cfg);
  if (r < 1 || r > cfg.n || s < 1 || s > cfg.n) {
    throw std::invalid_argument("efp indices out of range");
  }
  const double q = cfg.q.get_d();
  Xoshiro256 rng(cfg.seed);
  HeightState st = HeightState::initial(cfg.n);
  for (long k = 0; k < cfg.sweeps_burnin; ++k) sweep(st, q, rng);
  long hits = 0;
  for (long sample = 0; sample < cfg.n_samples; ++sample) {
    for (long k = 0; k < cfg.sweeps_between; ++k) sweep(st, q, rng);
    hits += efp_event(st, r, s);
  }
  return double(hits) / double(cfg.n_samples);
}

std::vector<double> efp_profile_estimate(const ChainConfig& cfg, int s) {
  check_chain_config(cfg);
  if (s < 1 || s > cfg.n) throw std::invalid_argument("efp indices out of range");
  const int n = cfg.n;
  const double q = cfg.q.get_d();
  Xoshiro256 rng(cfg.seed);
  HeightState st = HeightState::initial(n);
  for (long k = 0; k < cfg.sweeps_burnin; ++k) sweep(st, q, rng);
  std::vector<long> hits(static_cast<size_t>(n) + 1, 0);
  for (long sample = 0; sample < cfg.n_samples; ++sample) {
    for (long k = 0; k < cfg.sweeps_between; ++k) sweep(st, q, rng);
    for (int r = 1; r <= n; ++r) hits[size_t(r)] += efp_event(st, r, s);
  }
  std::vector<double> out(static_cast<size_t>(n));
  for (int r = 1; r <= n; ++r) out[size_t(r - 1)] = double(hits[size_t(r)]) /
                                                    double(cfg.n_samples);
  return out;
}

std::vector<std::vector<Rational>> transition_matrix(int n, const Rational& q) {
  const std::vector<Asm> states = all_asms(n);
  std::map<std::vector<signed char>, size_t> index;
  for (size_t i = 0; i < states.size(); ++i) index[states[i].entries] = i;
  const size_t count = states.size();
  const long sites = long(n - 1) * long(n - 1);
  std::vector<std::vector<Rational>> P(count, std::vector<Rational>(count, Rational(0)));
  for (size_t si = 0; si < count; ++si) {
    const HeightState base = HeightState::from_asm(states[si]);
    Rational stay = 1;
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = 1; j <= n - 1; ++j) {
        const int up = base.h(i - 1, j), down = base.h(i + 1, j);
        const int left = base.h(i, j - 1), right = base.h(i, j + 1);
        if (up != down || up != left || up != right) continue;
        HeightState next = base;
        next.h(i, j) = 2 * up - next.h(i, j);
        const int delta = base.h(i, j) - up;
        const int idx00 = (i - 1) * n + (j - 1), idx01 = (i - 1) * n + j;
        const int idx10 = i * n + (j - 1), idx11 = i * n + j;
        int dk = 0;
        auto apply = [&](int idx, int d) {
          dk -= next.a[size_t(idx)] == -1;
          next.a[size_t(idx)] = static_cast<signed char>(next.a[size_t(idx)] + d);
          dk += next.a[size_t(idx)] == -1;
        };
        apply(idx00, delta);
        apply(idx01, -delta);
        apply(idx10, -delta);
        apply(idx11, delta);
        Rational accept = rational_pow(q, dk);
        if (accept > 1) accept = 1;
        const Rational p_move = accept / Rational(sites);
        const size_t ti = index.at(next.a);
        P[si][ti] += p_move;
        stay -= p_move;
      }
    }
    P[si][si] += stay;
  }
  return P;
}

FrequencyTestResult frequency_test(int n, const Rational& q, uint64_t seed,
                                   long sweeps, long sample_every) {
  const std::vector<Asm> states = all_asms(n);
  std::map<std::vector<signed char>, size_t> index;
  for (size_t i = 0; i < states.size(); ++i) index[states[i].entries] = i;
  std::vector<Rational> weight(states.size());
  Rational z = 0;
  for (size_t i = 0; i < states.size(); ++i) {
    weight[i] = rational_pow(q, asmshape::minus_count(states[i]));
    z += weight[i];
  }
  const double qd = q.get_d();
  Xoshiro256 rng(seed);
  HeightState st = HeightState::initial(n);
  std::vector<long> counts(states.size(), 0);
  long samples = 0;
  for (long k = 0; k < sweeps; ++k) {
    sweep(st, qd, rng);
    if ((k + 1) % sample_every == 0) {
      ++counts[index.at(st.a)];
      ++samples;
    }
  }
  FrequencyTestResult res;
  res.samples = samples;
  res.dof = int(states.size()) - 1;
  for (size_t i = 0; i < states.size(); ++i) {
    const double expected = Rational(weight[i] / z).get_d() * double(samples);
    const double diff = double(counts[i]) - expected;
    res.chi2 += diff * diff / expected;
  }
  boost::math::chi_squared dist(res.dof);
  res.p_value = boost::math::cdf(boost::math::complement(dist, res.chi2));
  return res;
}

}  // namespace asmshape
