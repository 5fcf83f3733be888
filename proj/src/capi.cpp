#include "asmshape/asmshape.h"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <limits>
#include <new>
#include <string>
#include <vector>

#include "asmshape/arctic.hpp"
#include "asmshape/efp.hpp"
#include "asmshape/enumeration.hpp"
#include "asmshape/genfun.hpp"
#include "asmshape/params.hpp"
#include "asmshape/rational.hpp"
#include "asmshape/sampler.hpp"

namespace {

using asmshape::Rational;
using nlohmann::json;

thread_local std::string g_last_error;
std::atomic<int> g_max_n{asmshape::kDefaultMaxN};

int fail(int code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int emit(const std::string& s, char** out) {
  if (out == nullptr) return fail(ASMSHAPE_ERR_INVALID, "null output pointer");
  *out = dup_string(s);
  if (*out == nullptr) return fail(ASMSHAPE_ERR_INTERNAL, "allocation failed");
  return ASMSHAPE_OK;
}

Rational parse_q(const char* q) {
  if (q == nullptr) throw std::invalid_argument("null q string");
  return asmshape::rational_from_string(q);
}

asmshape::DeltaCase parse_case(const char* tag) {
  if (tag == nullptr) throw std::invalid_argument("null case tag");
  return asmshape::case_from_tag(tag);
}

// Maps the exception taxonomy of the C++ layer onto the status codes:
// argument/bound problems are INVALID, everything else INTERNAL.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    return fail(ASMSHAPE_ERR_INVALID, e.what());
  } catch (const asmshape::BoundError& e) {
    return fail(ASMSHAPE_ERR_INVALID, e.what());
  } catch (const asmshape::ValidationError& e) {
    return fail(ASMSHAPE_ERR_INVALID, e.what());
  } catch (const std::exception& e) {
    return fail(ASMSHAPE_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ASMSHAPE_ERR_INTERNAL, "unknown error");
  }
}

}  // namespace

extern "C" {

struct asmshape_sampler {
  asmshape::ChainConfig cfg;
  asmshape::HeightState state;
  asmshape::Xoshiro256 rng;
  long samples = 0;
  std::vector<double> plus_sum;   // n^2
  std::vector<double> minus_sum;  // n^2
};

const char* asmshape_version(void) { return "1.0.0"; }

const char* asmshape_last_error(void) { return g_last_error.c_str(); }

void asmshape_string_free(char* s) { ::free(s); }

int asmshape_set_max_n(int max_n) {
  if (max_n < 1) return fail(ASMSHAPE_ERR_INVALID, "max_n must be positive");
  g_max_n.store(max_n);
  return ASMSHAPE_OK;
}

int asmshape_weighted_count(int n, const char* q, char** out) {
  return guarded([&] {
    const Rational z = asmshape::weighted_count(n, parse_q(q), g_max_n.load());
    return emit(asmshape::to_string(z), out);
  });
}

int asmshape_boundary_correlation(int n, const char* q, char** out_json) {
  return guarded([&] {
    json arr = json::array();
    for (const Rational& h :
         asmshape::boundary_correlation(n, parse_q(q), g_max_n.load())) {
      arr.push_back(asmshape::to_string(h));
    }
    return emit(arr.dump(), out_json);
  });
}

int asmshape_enumerate_json(int n, char** out_json) {
  return guarded([&] {
    json arr = json::array();
    asmshape::enumerate_asms(
        n,
        [&](const asmshape::Asm& m) {
          json rows = json::array();
          for (int i = 0; i < n; ++i) {
            json row = json::array();
            for (int j = 0; j < n; ++j) row.push_back(int(m.at(i, j)));
            rows.push_back(std::move(row));
          }
          arr.push_back(std::move(rows));
        },
        g_max_n.load());
    return emit(arr.dump(), out_json);
  });
}

int asmshape_h_poly(int n, const char* case_tag, char** out_json) {
  return guarded([&] {
    const asmshape::RationalPoly h = asmshape::h_poly(n, parse_case(case_tag));
    json coeffs = json::array();
    for (int k = 0; k <= h.degree(); ++k) {
      coeffs.push_back(asmshape::to_string(h.coeff(k)));
    }
    json rec = {{"n", n}, {"case", case_tag}, {"coeffs", std::move(coeffs)}};
    return emit(rec.dump(), out_json);
  });
}

namespace {

asmshape::DeltaCase case_of_q(const Rational& q) {
  if (q == 1) return asmshape::DeltaCase::Q1;
  if (q == 2) return asmshape::DeltaCase::Q2;
  if (q == 3) return asmshape::DeltaCase::Q3;
  throw std::invalid_argument(
      "residue evaluation requires q in {1, 2, 3}; use method=oracle");
}

}  // namespace

int asmshape_efp(int n, int r, int s, const char* q, const char* method,
                 char** out_json) {
  return guarded([&] {
    const Rational qq = parse_q(q);
    const std::string m = (method != nullptr) ? method : "both";
    if (m != "oracle" && m != "residue" && m != "both") {
      throw std::invalid_argument("method must be oracle|residue|both");
    }
    json rec = {{"n", n}, {"r", r}, {"s", s}, {"q", asmshape::to_string(qq)}};
    Rational oracle, residue;
    if (m == "oracle" || m == "both") {
      oracle = asmshape::efp_oracle(n, r, s, qq, g_max_n.load());
      rec["oracle"] = asmshape::to_string(oracle);
    }
    if (m == "residue" || m == "both") {
      residue = asmshape::efp_residue(n, r, s, case_of_q(qq));
      rec["residue"] = asmshape::to_string(residue);
    }
    rec["efp"] = asmshape::to_string(m == "oracle" ? oracle : residue);
    if (m == "both") {
      const bool match = (oracle == residue);
      rec["match"] = match;
      if (!match) {
        const int rc = emit(rec.dump(), out_json);
        if (rc != ASMSHAPE_OK) return rc;
        return fail(ASMSHAPE_ERR_MISMATCH,
                    "residue and oracle evaluations disagree");
      }
    }
    return emit(rec.dump(), out_json);
  });
}

int asmshape_unit_integral(int n, int r, int s, const char* case_tag,
                           char** out) {
  return guarded([&] {
    const Rational v =
        asmshape::unit_integral_check(n, r, s, parse_case(case_tag));
    return emit(asmshape::to_string(v), out);
  });
}

int asmshape_efp_profile(int n, int s, const char* case_tag, char** out_json) {
  return guarded([&] {
    json arr = json::array();
    for (const Rational& v :
         asmshape::efp_profile(n, s, parse_case(case_tag))) {
      arr.push_back(asmshape::to_string(v));
    }
    return emit(arr.dump(), out_json);
  });
}

int asmshape_arctic_point(const char* case_tag, double omega, double* x,
                          double* y) {
  return guarded([&] {
    if (x == nullptr || y == nullptr) {
      throw std::invalid_argument("null output pointer");
    }
    const asmshape::ScaledCoords p =
        asmshape::parametric_curve(parse_case(case_tag), omega);
    *x = p.x;
    *y = p.y;
    return ASMSHAPE_OK;
  });
}

int asmshape_arctic_solve(const char* case_tag, double omega, double* x,
                          double* y) {
  return guarded([&] {
    if (x == nullptr || y == nullptr) {
      throw std::invalid_argument("null output pointer");
    }
    const asmshape::ScaledCoords p =
        asmshape::double_root_solve(parse_case(case_tag), omega);
    *x = p.x;
    *y = p.y;
    return ASMSHAPE_OK;
  });
}

int asmshape_arctic_residual(const char* case_tag, double x, double y,
                             double* out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output pointer");
    *out = asmshape::implicit_residual(parse_case(case_tag), {x, y});
    return ASMSHAPE_OK;
  });
}

int asmshape_arctic_sample(const char* case_tag, int m, double* omega,
                           double* xs, double* ys, double* residual) {
  return guarded([&] {
    const asmshape::DeltaCase c = parse_case(case_tag);
    const std::vector<asmshape::CurveSample> pts = asmshape::curve_sample(c, m);
    for (int i = 0; i < m; ++i) {
      if (omega != nullptr) omega[i] = pts[size_t(i)].omega;
      if (xs != nullptr) xs[i] = pts[size_t(i)].x;
      if (ys != nullptr) ys[i] = pts[size_t(i)].y;
      if (residual != nullptr) {
        residual[i] =
            asmshape::implicit_residual(c, {pts[size_t(i)].x, pts[size_t(i)].y});
      }
    }
    return ASMSHAPE_OK;
  });
}

int asmshape_temperate_area(const char* case_tag, double* area) {
  return guarded([&] {
    if (area == nullptr) throw std::invalid_argument("null output pointer");
    *area = asmshape::temperate_area(parse_case(case_tag));
    return ASMSHAPE_OK;
  });
}

int asmshape_sampler_new(int n, const char* q, uint64_t seed,
                         asmshape_sampler** out) {
  return guarded([&] {
    if (out == nullptr) throw std::invalid_argument("null output pointer");
    if (n < 1) throw std::invalid_argument("n must be positive");
    asmshape::ChainConfig cfg;
    cfg.n = n;
    cfg.q = parse_q(q);
    cfg.seed = seed;
    if (cfg.q <= 0) throw std::invalid_argument("q must be positive");
    if (n > cfg.max_n) {
      throw std::invalid_argument("lattice size exceeds the sampler bound");
    }
    auto* s = new asmshape_sampler{cfg, asmshape::HeightState::initial(n),
                                   asmshape::Xoshiro256(seed), 0,
                                   std::vector<double>(size_t(n) * n, 0.0),
                                   std::vector<double>(size_t(n) * n, 0.0)};
    *out = s;
    return ASMSHAPE_OK;
  });
}

void asmshape_sampler_free(asmshape_sampler* s) { delete s; }

int asmshape_sampler_run(asmshape_sampler* s, long burnin_sweeps,
                         long between_sweeps, long n_samples) {
  return guarded([&] {
    if (s == nullptr) throw std::invalid_argument("null sampler");
    if (burnin_sweeps < 0 || between_sweeps < 1 || n_samples < 0) {
      throw std::invalid_argument("bad chain schedule");
    }
    const int n = s->cfg.n;
    const double q = s->cfg.q.get_d();
    for (long i = 0; i < burnin_sweeps; ++i) {
      asmshape::sweep(s->state, q, s->rng);
    }
    for (long k = 0; k < n_samples; ++k) {
      for (long i = 0; i < between_sweeps; ++i) {
        asmshape::sweep(s->state, q, s->rng);
      }
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const signed char a = s->state.a[size_t(i) * n + j];
          if (a == 1) s->plus_sum[size_t(i) * n + j] += 1.0;
          if (a == -1) s->minus_sum[size_t(i) * n + j] += 1.0;
        }
      }
      ++s->samples;
    }
    return ASMSHAPE_OK;
  });
}

namespace {

asmshape::DensityField field_of(const asmshape_sampler& s) {
  asmshape::DensityField f;
  f.n = s.cfg.n;
  f.samples = s.samples;
  const size_t cells = size_t(f.n) * f.n;
  f.plus_mean.resize(cells);
  f.minus_mean.resize(cells);
  f.c_mean.resize(cells);
  const double inv = (s.samples > 0) ? 1.0 / double(s.samples) : 0.0;
  for (size_t i = 0; i < cells; ++i) {
    f.plus_mean[i] = s.plus_sum[i] * inv;
    f.minus_mean[i] = s.minus_sum[i] * inv;
    f.c_mean[i] = f.plus_mean[i] + f.minus_mean[i];
  }
  return f;
}

}  // namespace

int asmshape_sampler_density(const asmshape_sampler* s, double* c_mean,
                             double* plus_mean, double* minus_mean) {
  return guarded([&] {
    if (s == nullptr) throw std::invalid_argument("null sampler");
    if (s->samples == 0) throw std::invalid_argument("no samples accumulated");
    const asmshape::DensityField f = field_of(*s);
    const size_t cells = size_t(f.n) * f.n;
    for (size_t i = 0; i < cells; ++i) {
      if (c_mean != nullptr) c_mean[i] = f.c_mean[i];
      if (plus_mean != nullptr) plus_mean[i] = f.plus_mean[i];
      if (minus_mean != nullptr) minus_mean[i] = f.minus_mean[i];
    }
    return ASMSHAPE_OK;
  });
}

int asmshape_sampler_boundary(const asmshape_sampler* s, double threshold,
                              double* xs, double* ys, int cap, int* count,
                              int* skipped) {
  return guarded([&] {
    if (s == nullptr) throw std::invalid_argument("null sampler");
    if (s->samples == 0) throw std::invalid_argument("no samples accumulated");
    int skip = 0;
    const std::vector<asmshape::ScaledCoords> pts =
        asmshape::empirical_boundary(field_of(*s), threshold, &skip);
    const int k = std::min<int>(cap, int(pts.size()));
    for (int i = 0; i < k; ++i) {
      if (xs != nullptr) xs[i] = pts[size_t(i)].x;
      if (ys != nullptr) ys[i] = pts[size_t(i)].y;
    }
    if (count != nullptr) *count = int(pts.size());
    if (skipped != nullptr) *skipped = skip;
    return ASMSHAPE_OK;
  });
}

int asmshape_sampler_efp_profile(const asmshape_sampler* s, int scan_s,
                                 long burnin_sweeps, long between_sweeps,
                                 long n_samples, double* profile) {
  return guarded([&] {
    if (s == nullptr || profile == nullptr) {
      throw std::invalid_argument("null pointer");
    }
    asmshape::ChainConfig cfg = s->cfg;
    cfg.sweeps_burnin = burnin_sweeps;
    cfg.sweeps_between = between_sweeps;
    cfg.n_samples = n_samples;
    const std::vector<double> p = asmshape::efp_profile_estimate(cfg, scan_s);
    for (size_t i = 0; i < p.size(); ++i) profile[i] = p[i];
    return ASMSHAPE_OK;
  });
}

int asmshape_frequency_test(int n, const char* q, uint64_t seed, long sweeps,
                            long sample_every, double* chi2, double* p_value,
                            int* dof) {
  return guarded([&] {
    const asmshape::FrequencyTestResult r =
        asmshape::frequency_test(n, parse_q(q), seed, sweeps, sample_every);
    if (chi2 != nullptr) *chi2 = r.chi2;
    if (p_value != nullptr) *p_value = r.p_value;
    if (dof != nullptr) *dof = r.dof;
    return ASMSHAPE_OK;
  });
}

}  // extern "C"
