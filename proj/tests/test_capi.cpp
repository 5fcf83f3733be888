#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <string>
#include <vector>

#include "asmshape/asmshape.h"

using nlohmann::json;

namespace {

std::string take(char* p) {
  std::string s = p != nullptr ? p : "";
  asmshape_string_free(p);
  return s;
}

}  // namespace

TEST_CASE("version and error-state basics") {
  CHECK(std::string(asmshape_version()) == "1.0.0");
  char* out = nullptr;
  CHECK(asmshape_weighted_count(5, "1", &out) == ASMSHAPE_OK);
  CHECK(take(out) == "429");
}

TEST_CASE("invalid arguments set codes and messages") {
  char* out = nullptr;
  CHECK(asmshape_weighted_count(4, "not-a-number", &out) == ASMSHAPE_ERR_INVALID);
  CHECK(std::string(asmshape_last_error()).find("not-a-number") !=
        std::string::npos);
  CHECK(asmshape_weighted_count(4, nullptr, &out) == ASMSHAPE_ERR_INVALID);
  CHECK(asmshape_h_poly(4, "q9", &out) == ASMSHAPE_ERR_INVALID);
  CHECK(asmshape_weighted_count(4, "1", nullptr) == ASMSHAPE_ERR_INVALID);
  CHECK(asmshape_set_max_n(0) == ASMSHAPE_ERR_INVALID);
}

TEST_CASE("enumeration bound is adjustable through the API") {
  char* out = nullptr;
  CHECK(asmshape_set_max_n(3) == ASMSHAPE_OK);
  CHECK(asmshape_weighted_count(4, "1", &out) == ASMSHAPE_ERR_INVALID);
  CHECK(asmshape_set_max_n(8) == ASMSHAPE_OK);
  CHECK(asmshape_weighted_count(4, "1", &out) == ASMSHAPE_OK);
  CHECK(take(out) == "42");
}

TEST_CASE("boundary correlation and enumeration round as JSON") {
  char* out = nullptr;
  REQUIRE(asmshape_boundary_correlation(4, "2", &out) == ASMSHAPE_OK);
  const json h = json::parse(take(out));
  CHECK(h == json({"1/8", "3/8", "3/8", "1/8"}));

  REQUIRE(asmshape_enumerate_json(3, &out) == ASMSHAPE_OK);
  const json all = json::parse(take(out));
  CHECK(all.size() == 7);
  int with_minus = 0;
  for (const auto& m : all) {
    for (const auto& row : m)
      for (const auto& v : row)
        if (v.get<int>() == -1) ++with_minus;
  }
  CHECK(with_minus == 1);
}

TEST_CASE("h polynomial record") {
  char* out = nullptr;
  REQUIRE(asmshape_h_poly(4, "q3", &out) == ASMSHAPE_OK);
  const json rec = json::parse(take(out));
  CHECK(rec["n"] == 4);
  CHECK(rec["case"] == "q3");
  CHECK(rec["coeffs"] == json({"1/10", "2/5", "2/5", "1/10"}));
}

TEST_CASE("efp: all three methods and the cross-check record") {
  char* out = nullptr;
  REQUIRE(asmshape_efp(5, 3, 2, "3", "both", &out) == ASMSHAPE_OK);
  const json rec = json::parse(take(out));
  CHECK(rec["efp"] == "8/45");
  CHECK(rec["oracle"] == "8/45");
  CHECK(rec["residue"] == "8/45");
  CHECK(rec["match"] == true);

  REQUIRE(asmshape_efp(5, 3, 2, "3", "oracle", &out) == ASMSHAPE_OK);
  CHECK(json::parse(take(out))["efp"] == "8/45");

  // non-tabulated q works with the oracle but not the residue route
  REQUIRE(asmshape_efp(4, 2, 1, "7/2", "oracle", &out) == ASMSHAPE_OK);
  take(out);
  CHECK(asmshape_efp(4, 2, 1, "7/2", "residue", &out) == ASMSHAPE_ERR_INVALID);
  CHECK(asmshape_efp(4, 2, 1, "3", "sideways", &out) == ASMSHAPE_ERR_INVALID);
}

TEST_CASE("unit integral and profile") {
  char* out = nullptr;
  REQUIRE(asmshape_unit_integral(6, 2, 3, "q1", &out) == ASMSHAPE_OK);
  CHECK(take(out) == "1");
  REQUIRE(asmshape_efp_profile(5, 2, "q1", &out) == ASMSHAPE_OK);
  const json prof = json::parse(take(out));
  REQUIRE(prof.size() == 5);
  CHECK(prof[4] == "1");
}

TEST_CASE("arctic surface") {
  double x = 0, y = 0, res = 1;
  REQUIRE(asmshape_arctic_point("q2", 1.0, &x, &y) == ASMSHAPE_OK);
  CHECK(x == 0.5);
  CHECK(y == 0.0);
  REQUIRE(asmshape_arctic_solve("q3", 2.0, &x, &y) == ASMSHAPE_OK);
  CHECK(x == doctest::Approx(163.0 / 675.0).epsilon(1e-10));
  CHECK(y == doctest::Approx(169.0 / 2025.0).epsilon(1e-10));
  REQUIRE(asmshape_arctic_residual("q3", 163.0 / 675.0, 169.0 / 2025.0, &res) ==
          ASMSHAPE_OK);
  CHECK(std::abs(res) < 1e-9);

  const int m = 9;
  std::vector<double> omega(m), xs(m), ys(m), rr(m);
  REQUIRE(asmshape_arctic_sample("q1", m, omega.data(), xs.data(), ys.data(),
                                 rr.data()) == ASMSHAPE_OK);
  CHECK(xs.front() == 0.5);
  CHECK(ys.back() == 0.5);
  CHECK(std::isinf(omega.back()));
  for (double v : rr) CHECK(std::abs(v) < 1e-9);

  double area = 0;
  REQUIRE(asmshape_temperate_area("q2", &area) == ASMSHAPE_OK);
  CHECK(area == doctest::Approx(3.14159265358979 / 4.0).epsilon(1e-8));

  CHECK(asmshape_arctic_point("q7", 1.0, &x, &y) == ASMSHAPE_ERR_INVALID);
  CHECK(asmshape_arctic_point("q1", 1.0, nullptr, &y) == ASMSHAPE_ERR_INVALID);
}

TEST_CASE("sampler lifecycle, density, boundary, efp, determinism") {
  asmshape_sampler* s = nullptr;
  REQUIRE(asmshape_sampler_new(16, "1", 42, &s) == ASMSHAPE_OK);
  REQUIRE(asmshape_sampler_run(s, 500, 5, 400) == ASMSHAPE_OK);

  std::vector<double> minus(16 * 16), cd(16 * 16);
  REQUIRE(asmshape_sampler_density(s, cd.data(), nullptr, minus.data()) ==
          ASMSHAPE_OK);
  CHECK(minus[0] == 0.0);  // frozen corner
  double total = 0;
  for (double v : cd) total += v;
  CHECK(total > 16.0);  // at least the n permutation ones

  std::vector<double> bx(16), by(16);
  int count = 0, skipped = 0;
  REQUIRE(asmshape_sampler_boundary(s, 0.05, bx.data(), by.data(), 16, &count,
                                    &skipped) == ASMSHAPE_OK);
  CHECK(count + skipped == 8);

  std::vector<double> prof(16);
  REQUIRE(asmshape_sampler_efp_profile(s, 2, 200, 2, 500, prof.data()) ==
          ASMSHAPE_OK);
  CHECK(prof[15] == doctest::Approx(1.0));
  for (int r = 1; r < 16; ++r) CHECK(prof[size_t(r - 1)] <= prof[size_t(r)] + 1e-12);

  // a second sampler with the same seed reproduces the density exactly
  asmshape_sampler* s2 = nullptr;
  REQUIRE(asmshape_sampler_new(16, "1", 42, &s2) == ASMSHAPE_OK);
  REQUIRE(asmshape_sampler_run(s2, 500, 5, 400) == ASMSHAPE_OK);
  std::vector<double> minus2(16 * 16);
  REQUIRE(asmshape_sampler_density(s2, nullptr, nullptr, minus2.data()) ==
          ASMSHAPE_OK);
  CHECK(minus == minus2);
  asmshape_sampler_free(s2);
  asmshape_sampler_free(s);
  asmshape_sampler_free(nullptr);  // must be a no-op

  CHECK(asmshape_sampler_new(16, "0", 1, &s2) == ASMSHAPE_ERR_INVALID);
  CHECK(asmshape_sampler_new(100000, "1", 1, &s2) == ASMSHAPE_ERR_INVALID);
}

TEST_CASE("frequency test through the C surface") {
  double chi2 = 0, p = 0;
  int dof = 0;
  REQUIRE(asmshape_frequency_test(3, "2", 9, 100000, 20, &chi2, &p, &dof) ==
          ASMSHAPE_OK);
  CHECK(dof == 6);
  CHECK(p > 0.001);
}
