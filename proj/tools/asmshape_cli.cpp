// Command-line front end; talks to the library exclusively through the C API.
#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <thread>
#include <string>
#include <vector>

#include "asmshape/asmshape.h"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;

// Flat or one-level-nested JSON config files; nested objects map to
// subcommand options ({"efp": {"n": 5}} -> efp --n 5).
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override {
    return "{}";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    json j;
    input >> j;
    if (!j.is_object()) throw CLI::FileError("config root must be an object");
    std::vector<CLI::ConfigItem> out;
    collect(j, {}, out);
    return out;
  }

 private:
  static void collect(const json& j, const std::vector<std::string>& parents,
                      std::vector<CLI::ConfigItem>& out) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        auto sub = parents;
        sub.push_back(key);
        collect(value, sub, out);
        continue;
      }
      CLI::ConfigItem item;
      item.parents = parents;
      item.name = key;
      if (value.is_array()) {
        for (const auto& v : value) item.inputs.push_back(scalar(v));
      } else {
        item.inputs.push_back(scalar(value));
      }
      out.push_back(std::move(item));
    }
  }

  static std::string scalar(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  }
};

struct Output {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      if (text.empty() || text.back() != '\n') std::cout << '\n';
      return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
    f << text;
    if (text.empty() || text.back() != '\n') f << '\n';
  }
};

std::string provenance() {
  return std::string("asmshape ") + asmshape_version();
}

// RAII for C-API strings.
struct CStr {
  char* p = nullptr;
  ~CStr() { asmshape_string_free(p); }
  std::string str() const { return p != nullptr ? p : ""; }
};

[[noreturn]] void die(int rc, const std::string& context) {
  std::cerr << "error: " << context;
  const std::string detail = asmshape_last_error();
  if (!detail.empty()) std::cerr << ": " << detail;
  std::cerr << '\n';
  std::exit(rc == ASMSHAPE_OK ? 1 : rc);
}

void check(int rc, const std::string& context) {
  if (rc != ASMSHAPE_OK) die(rc, context);
}

std::string csv_escape(const std::string& s) { return s; }  // rationals are plain

std::string rationals_csv(const std::string& header, const json& arr) {
  std::ostringstream os;
  os << "# " << provenance() << "\n" << header << "\n";
  int i = 1;
  for (const auto& v : arr) {
    os << i++ << "," << csv_escape(v.get<std::string>()) << "\n";
  }
  return os.str();
}

// --- minimal SVG writer ----------------------------------------------------

class Svg {
 public:
  Svg(double size, const std::string& title) : size_(size) {
    os_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<!-- " << provenance() << " -->\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_
        << "\" height=\"" << size_ << "\" viewBox=\"0 0 " << size_ << " "
        << size_ << "\">\n"
        << "<title>" << title << "</title>\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }

  // (x, y) in the unit square, y measured downward from the top edge.
  double px(double x) const { return margin_ + x * (size_ - 2 * margin_); }
  double py(double y) const { return margin_ + y * (size_ - 2 * margin_); }

  void heatmap(int n, const std::vector<double>& value, double vmax) {
    const double cell = (size_ - 2 * margin_) / n;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double v = value[size_t(i) * n + j];
        if (v <= 0) continue;
        const double u = std::min(1.0, v / vmax);
        const int shade = int(255 - 215 * u);
        os_ << "<rect x=\"" << px(double(j) / n) << "\" y=\""
            << py(double(i) / n) << "\" width=\"" << cell << "\" height=\""
            << cell << "\" fill=\"rgb(" << shade << "," << shade
            << ",255)\"/>\n";
      }
    }
  }

  void polyline(const std::vector<std::pair<double, double>>& pts,
                const std::string& color, double width) {
    os_ << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
        << width << "\" points=\"";
    for (const auto& [x, y] : pts) os_ << px(x) << "," << py(y) << " ";
    os_ << "\"/>\n";
  }

  void dots(const std::vector<std::pair<double, double>>& pts,
            const std::string& color, double radius) {
    for (const auto& [x, y] : pts) {
      os_ << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\""
          << radius << "\" fill=\"" << color << "\"/>\n";
    }
  }

  void frame() {
    os_ << "<rect x=\"" << margin_ << "\" y=\"" << margin_ << "\" width=\""
        << size_ - 2 * margin_ << "\" height=\"" << size_ - 2 * margin_
        << "\" fill=\"none\" stroke=\"black\"/>\n";
  }

  std::string finish() {
    os_ << "</svg>\n";
    return os_.str();
  }

 private:
  double size_;
  double margin_ = 20.0;
  std::ostringstream os_;
};

// Four symmetric copies of the top-left quarter branch, for a closed curve.
std::vector<std::pair<double, double>> full_curve(const char* tag, int m) {
  std::vector<double> xs(static_cast<size_t>(m)), ys(static_cast<size_t>(m));
  check(asmshape_arctic_sample(tag, m, nullptr, xs.data(), ys.data(), nullptr),
        "arctic sample");
  std::vector<std::pair<double, double>> pts;
  pts.reserve(static_cast<size_t>(4 * m));
  for (int i = 0; i < m; ++i) pts.push_back({1.0 - xs[size_t(i)], ys[size_t(i)]});
  for (int i = m - 1; i >= 0; --i)
    pts.push_back({ys[size_t(i)], 1.0 - xs[size_t(i)]});
  for (int i = 0; i < m; ++i)
    pts.push_back({xs[size_t(i)], 1.0 - ys[size_t(i)]});
  for (int i = m - 1; i >= 0; --i)
    pts.push_back({1.0 - ys[size_t(i)], xs[size_t(i)]});
  pts.push_back(pts.front());
  return pts;
}

std::string case_tag_of_q(const std::string& q) {
  if (q == "1") return "q1";
  if (q == "2") return "q2";
  if (q == "3") return "q3";
  return "";
}

// --- subcommand runners ----------------------------------------------------

int run_enumerate(int n, const std::string& q, bool list, const Output& out,
                  const std::string& format) {
  json rec = {{"generator", provenance()}, {"n", n}, {"q", q}};
  {
    CStr z;
    check(asmshape_weighted_count(n, q.c_str(), &z.p), "weighted count");
    rec["weighted_count"] = z.str();
  }
  {
    CStr h;
    check(asmshape_boundary_correlation(n, q.c_str(), &h.p),
          "boundary correlation");
    rec["boundary_correlation"] = json::parse(h.str());
  }
  if (list) {
    CStr all;
    check(asmshape_enumerate_json(n, &all.p), "enumeration");
    rec["matrices"] = json::parse(all.str());
  }
  if (format == "csv") {
    out.write(rationals_csv("r,H", rec["boundary_correlation"]));
  } else {
    out.write(rec.dump(2));
  }
  return 0;
}

int run_genfun(int n, const std::string& tag, const Output& out,
               const std::string& format) {
  CStr h;
  check(asmshape_h_poly(n, tag.c_str(), &h.p), "h polynomial");
  json rec = json::parse(h.str());
  if (format == "csv") {
    std::ostringstream os;
    os << "# " << provenance() << "\nk,coeff\n";
    int k = 0;
    for (const auto& c : rec["coeffs"]) os << k++ << "," << c.get<std::string>() << "\n";
    out.write(os.str());
    return 0;
  }
  rec["generator"] = provenance();
  out.write(rec.dump(2));
  return 0;
}

int run_efp(int n, int r, int s, const std::string& q, const std::string& method,
            bool profile, bool unit_check, const Output& out,
            const std::string& format) {
  if (profile) {
    const std::string tag = case_tag_of_q(q);
    if (tag.empty()) die(kExitUsage, "profile requires q in {1, 2, 3}");
    CStr p;
    check(asmshape_efp_profile(n, s, tag.c_str(), &p.p), "efp profile");
    const json arr = json::parse(p.str());
    if (format == "csv") {
      out.write(rationals_csv("r,efp", arr));
    } else {
      out.write(json{{"generator", provenance()},
                     {"n", n},
                     {"s", s},
                     {"q", q},
                     {"profile", arr}}
                    .dump(2));
    }
    return 0;
  }
  if (unit_check) {
    const std::string tag = case_tag_of_q(q);
    if (tag.empty()) die(kExitUsage, "unit check requires q in {1, 2, 3}");
    CStr v;
    check(asmshape_unit_integral(n, r, s, tag.c_str(), &v.p), "unit integral");
    out.write(json{{"generator", provenance()},
                   {"n", n},
                   {"r", r},
                   {"s", s},
                   {"case", tag},
                   {"unit_integral", v.str()}}
                  .dump(2));
    return 0;
  }
  CStr rec;
  const int rc = asmshape_efp(n, r, s, q.c_str(), method.c_str(), &rec.p);
  if (rc != ASMSHAPE_OK && rc != ASMSHAPE_ERR_MISMATCH) die(rc, "efp");
  json j = json::parse(rec.str());
  j["generator"] = provenance();
  out.write(j.dump(2));
  if (rc == ASMSHAPE_ERR_MISMATCH) {
    std::cerr << "error: efp: " << asmshape_last_error() << '\n';
    return ASMSHAPE_ERR_MISMATCH;
  }
  return 0;
}

int run_arctic(const std::string& tag, int points, bool with_area, int threads,
               const Output& out, const std::string& format) {
  std::vector<double> omega(static_cast<size_t>(points)), xs(static_cast<size_t>(points)),
      ys(static_cast<size_t>(points)), res(static_cast<size_t>(points));
  check(asmshape_arctic_sample(tag.c_str(), points, omega.data(), xs.data(),
                               ys.data(), nullptr),
        "arctic sample");
  // residual column, split across worker threads
  {
    const int nt = std::max(1, std::min(threads, points));
    std::vector<std::thread> pool;
    std::atomic<int> bad{0};
    for (int t = 0; t < nt; ++t) {
      pool.emplace_back([&, t] {
        for (int i = t; i < points; i += nt) {
          if (asmshape_arctic_residual(tag.c_str(), xs[size_t(i)], ys[size_t(i)],
                                       &res[size_t(i)]) != ASMSHAPE_OK) {
            bad.store(1);
          }
        }
      });
    }
    for (std::thread& th : pool) th.join();
    if (bad.load() != 0) die(1, "arctic residual");
  }
  double area = std::numeric_limits<double>::quiet_NaN();
  if (with_area) check(asmshape_temperate_area(tag.c_str(), &area), "area");

  if (format == "svg") {
    Svg svg(640, "arctic curve, case " + tag);
    svg.frame();
    svg.polyline(full_curve(tag.c_str(), points), "crimson", 2.0);
    out.write(svg.finish());
    return 0;
  }
  if (format == "csv") {
    std::ostringstream os;
    os << "# " << provenance() << "\nomega,x,y,residual\n";
    os.precision(17);
    for (int i = 0; i < points; ++i) {
      os << omega[size_t(i)] << "," << xs[size_t(i)] << "," << ys[size_t(i)]
         << "," << res[size_t(i)] << "\n";
    }
    if (with_area) os << "# temperate_area," << area << "\n";
    out.write(os.str());
    return 0;
  }
  json arr = json::array();
  for (int i = 0; i < points; ++i) {
    arr.push_back({{"omega", omega[size_t(i)]},
                   {"x", xs[size_t(i)]},
                   {"y", ys[size_t(i)]},
                   {"residual", res[size_t(i)]}});
  }
  json rec = {{"generator", provenance()}, {"case", tag}, {"points", arr}};
  if (with_area) rec["temperate_area"] = area;
  out.write(rec.dump(2));
  return 0;
}

struct SampleArgs {
  int n = 64;
  std::string q = "1";
  uint64_t seed = 1;
  long burnin = 2000;
  long between = 10;
  long samples = 500;
  double threshold = 0.05;
  bool freq_test = false;
  long sweeps = 100000;
  long every = 10;
};

int run_sample(const SampleArgs& a, const Output& out,
               const std::string& format) {
  if (a.freq_test) {
    double chi2 = 0, p = 0;
    int dof = 0;
    check(asmshape_frequency_test(a.n, a.q.c_str(), a.seed, a.sweeps, a.every,
                                  &chi2, &p, &dof),
          "frequency test");
    out.write(json{{"generator", provenance()},
                   {"n", a.n},
                   {"q", a.q},
                   {"chi2", chi2},
                   {"p_value", p},
                   {"dof", dof}}
                  .dump(2));
    return 0;
  }

  asmshape_sampler* s = nullptr;
  check(asmshape_sampler_new(a.n, a.q.c_str(), a.seed, &s), "sampler");
  std::unique_ptr<asmshape_sampler, decltype(&asmshape_sampler_free)> guard(
      s, &asmshape_sampler_free);
  check(asmshape_sampler_run(s, a.burnin, a.between, a.samples), "chain run");

  const size_t cells = size_t(a.n) * a.n;
  std::vector<double> minus(cells), cdens(cells);
  check(asmshape_sampler_density(s, cdens.data(), nullptr, minus.data()),
        "density");
  std::vector<double> bx(static_cast<size_t>(a.n)), by(static_cast<size_t>(a.n));
  int count = 0, skipped = 0;
  check(asmshape_sampler_boundary(s, a.threshold, bx.data(), by.data(), a.n,
                                  &count, &skipped),
        "boundary");

  if (format == "svg") {
    Svg svg(640, "empirical density, n = " + std::to_string(a.n));
    double vmax = 0;
    for (double v : minus) vmax = std::max(vmax, v);
    svg.heatmap(a.n, minus, vmax > 0 ? vmax : 1.0);
    svg.frame();
    const std::string tag = case_tag_of_q(a.q);
    if (!tag.empty()) svg.polyline(full_curve(tag.c_str(), 64), "crimson", 2.0);
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < count; ++i) pts.push_back({bx[size_t(i)], by[size_t(i)]});
    svg.dots(pts, "black", 2.5);
    out.write(svg.finish());
    return 0;
  }
  if (format == "csv") {
    std::ostringstream os;
    os << "# " << provenance() << "\ni,j,c_mean,minus_mean\n";
    os.precision(17);
    for (int i = 0; i < a.n; ++i) {
      for (int j = 0; j < a.n; ++j) {
        os << i << "," << j << "," << cdens[size_t(i) * a.n + j] << ","
           << minus[size_t(i) * a.n + j] << "\n";
      }
    }
    out.write(os.str());
    return 0;
  }
  json bpts = json::array();
  for (int i = 0; i < count; ++i) {
    bpts.push_back({{"x", bx[size_t(i)]}, {"y", by[size_t(i)]}});
  }
  out.write(json{{"generator", provenance()},
                 {"n", a.n},
                 {"q", a.q},
                 {"seed", a.seed},
                 {"samples", a.samples},
                 {"boundary", bpts},
                 {"boundary_rows_skipped", skipped}}
                .dump(2));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Domain-wall six-vertex / alternating-sign-matrix toolkit"};
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON config file");
  app.require_subcommand(1);

  if (const char* env = std::getenv("ASM_MAX_N")) {
    const int m = std::atoi(env);
    if (m < 1 || asmshape_set_max_n(m) != ASMSHAPE_OK) {
      std::cerr << "error: bad ASM_MAX_N value '" << env << "'\n";
      return kExitUsage;
    }
  }

  Output out;
  std::string format = "json";
  app.add_option("--out", out.path, "Output file (default stdout)");
  app.add_option("--format", format, "json|csv (svg where supported)")
      ->check(CLI::IsMember({"json", "csv", "svg"}));
  int threads = 1;
  app.add_option("--threads", threads, "Worker threads for parallelizable steps")
      ->check(CLI::Range(1, 256));

  int n = 4, r = 1, s = 1;
  std::string q = "1", tag = "q1", method = "both";
  bool list = false, profile = false, unit_check = false, with_area = false;
  int points = 33;
  SampleArgs sa;

  auto* c_enum = app.add_subcommand("enumerate", "Exact q-weighted enumeration");
  c_enum->add_option("--n", n, "Matrix size")->required();
  c_enum->add_option("--q", q, "Weight per -1 entry (rational)");
  c_enum->add_flag("--list", list, "Include every matrix in the output");

  auto* c_gen = app.add_subcommand("genfun", "Boundary generating function h_N");
  c_gen->add_option("--n", n, "Matrix size")->required();
  c_gen->add_option("--case", tag, "q1|q2|q3")
      ->check(CLI::IsMember({"q1", "q2", "q3"}));

  auto* c_efp = app.add_subcommand("efp", "Emptiness formation probability");
  c_efp->add_option("--n", n, "Matrix size")->required();
  c_efp->add_option("--r", r, "Columns from the right");
  c_efp->add_option("--s", s, "Rows from the top");
  c_efp->add_option("--q", q, "Weight per -1 entry (rational)");
  c_efp->add_option("--method", method, "oracle|residue|both")
      ->check(CLI::IsMember({"oracle", "residue", "both"}));
  c_efp->add_flag("--profile", profile, "All r at fixed s (residue method)");
  c_efp->add_flag("--unit-check", unit_check, "Companion unit-integral identity");

  auto* c_arc = app.add_subcommand("arctic", "Limit-shape curves");
  c_arc->add_option("--case", tag, "q1|q2|q3")
      ->check(CLI::IsMember({"q1", "q2", "q3"}));
  c_arc->add_option("--points", points, "Samples along the quarter branch")
      ->check(CLI::Range(2, 100000));
  c_arc->add_flag("--area", with_area, "Include the temperate-region area");

  auto* c_smp = app.add_subcommand("sample", "Metropolis sampler");
  c_smp->add_option("--n", sa.n, "Lattice size");
  c_smp->add_option("--q", sa.q, "Weight per -1 entry (rational)");
  c_smp->add_option("--seed", sa.seed, "RNG seed");
  c_smp->add_option("--burnin", sa.burnin, "Burn-in sweeps");
  c_smp->add_option("--between", sa.between, "Sweeps between samples");
  c_smp->add_option("--samples", sa.samples, "Number of samples");
  c_smp->add_option("--threshold", sa.threshold, "Boundary density threshold");
  c_smp->add_flag("--freq-test", sa.freq_test,
                  "Chi-square test against the exact law (small n)");
  c_smp->add_option("--sweeps", sa.sweeps, "Total sweeps for --freq-test");
  c_smp->add_option("--every", sa.every, "Tally spacing for --freq-test");

  // --out/--format/--config are global; accept them after the subcommand too
  for (CLI::App* sub : {c_enum, c_gen, c_efp, c_arc, c_smp}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // usage problems exit 2; --help and friends keep their success code
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (c_enum->parsed()) return run_enumerate(n, q, list, out, format);
    if (c_gen->parsed()) return run_genfun(n, tag, out, format);
    if (c_efp->parsed())
      return run_efp(n, r, s, q, method, profile, unit_check, out, format);
    if (c_arc->parsed())
      return run_arctic(tag, points, with_area, threads, out, format);
    if (c_smp->parsed()) return run_sample(sa, out, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
