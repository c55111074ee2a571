// Command-line front end over the deltascatter C API.
//
//   deltascatter solve        --xi 1,1 --gaps 1
//   deltascatter sweep        --xi 1,1,1,1,1,1 --gaps-uniform --param dtilde
//                             --min 0.05 --max 3 --steps 300 --out t.csv
//   deltascatter wavefunction --xi 1,1,1,1,1,1 --gap 1 --out psi.csv
//   deltascatter resonances   --xi 1,1 --gap 1 --param xi --min -3 --max 0
//
// Exit codes: 0 ok, 2 bad configuration, 3 solver error, 4 self-check failed.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "deltascatter/deltascatter.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;
constexpr int kExitSelfCheck = 4;

constexpr double kUnitarityTolerance = 1e-10;
constexpr double kCrossCheckTolerance = 1e-9;
constexpr double kSweepUnitarityTolerance = 1e-9;
constexpr double kJumpTolerance = 1e-10;
constexpr std::size_t kDefaultScanSteps = 2000;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolverError : std::runtime_error {
  SolverError(ds_status status, const std::string& what)
      : std::runtime_error(what + ": " + ds_status_string(status) +
                           (*ds_last_error() ? std::string(" (") + ds_last_error() + ")"
                                             : std::string())) {}
};

void check(ds_status status, const char* what) {
  if (status != DS_OK) throw SolverError(status, what);
}

struct RunConfig {
  std::string mode;
  std::optional<std::vector<double>> xi;
  std::optional<std::vector<double>> vtilde;
  std::optional<double> k;
  std::optional<std::vector<double>> gaps;
  std::optional<double> gap;
  std::optional<std::vector<double>> positions;
  bool gaps_uniform = false;
  double y0 = 0.0;
  std::optional<std::string> param;
  std::optional<double> min;
  std::optional<double> max;
  std::optional<std::size_t> steps;
  std::optional<double> tol;
  std::optional<double> ymin;
  std::optional<double> ymax;
  std::optional<std::size_t> count;
  std::optional<std::string> out;
  bool quiet = false;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string fmt(ds_complex z) {
  return fmt(z.re) + (z.im < 0.0 ? " - " : " + ") + fmt(std::fabs(z.im)) + "i";
}

double distance(ds_complex a, ds_complex b) { return std::hypot(a.re - b.re, a.im - b.im); }

template <class T>
void take(const nlohmann::json& j, const char* key, std::optional<T>& dst) {
  if (j.contains(key)) dst = j.at(key).get<T>();
}

void load_json(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
    if (!j.is_object()) throw ConfigError("config root must be an object");
    if (j.contains("mode")) cfg.mode = j.at("mode").get<std::string>();
    take(j, "xi", cfg.xi);
    take(j, "vtilde", cfg.vtilde);
    take(j, "k", cfg.k);
    take(j, "gaps", cfg.gaps);
    take(j, "gap", cfg.gap);
    take(j, "positions", cfg.positions);
    if (j.contains("y0")) cfg.y0 = j.at("y0").get<double>();
    take(j, "param", cfg.param);
    take(j, "min", cfg.min);
    take(j, "max", cfg.max);
    take(j, "steps", cfg.steps);
    take(j, "tol", cfg.tol);
    take(j, "ymin", cfg.ymin);
    take(j, "ymax", cfg.ymax);
    take(j, "count", cfg.count);
    take(j, "out", cfg.out);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

using SystemPtr = std::unique_ptr<ds_system, decltype(&ds_system_destroy)>;
using SolutionPtr = std::unique_ptr<ds_solution, decltype(&ds_solution_destroy)>;

std::vector<double> resolve_gaps(const RunConfig& cfg, std::size_t n) {
  const std::size_t want = n - 1;
  if (cfg.gaps) {
    if (cfg.gaps->size() != want) {
      throw ConfigError("expected " + std::to_string(want) + " gaps, got " +
                        std::to_string(cfg.gaps->size()));
    }
    return *cfg.gaps;
  }
  if (cfg.gap || cfg.gaps_uniform || want == 0) {
    return std::vector<double>(want, cfg.gap.value_or(1.0));
  }
  throw ConfigError("gaps missing: give --gaps, --gap or --gaps-uniform");
}

SystemPtr build_system(const RunConfig& cfg) {
  if (cfg.xi.has_value() == cfg.vtilde.has_value()) {
    throw ConfigError("give exactly one of xi (dimensionless) or vtilde (physical)");
  }
  ds_system* raw = nullptr;
  if (cfg.xi) {
    if (cfg.xi->empty()) throw ConfigError("xi list is empty");
    if (cfg.positions) throw ConfigError("positions apply to vtilde systems only");
    const auto gaps = resolve_gaps(cfg, cfg.xi->size());
    check(ds_system_create(cfg.xi->data(), cfg.xi->size(), gaps.data(), cfg.y0, &raw),
          "building system");
  } else {
    if (cfg.vtilde->empty()) throw ConfigError("vtilde list is empty");
    if (!cfg.k) throw ConfigError("vtilde systems need k");
    std::vector<double> positions;
    if (cfg.positions) {
      if (cfg.positions->size() != cfg.vtilde->size()) {
        throw ConfigError("positions and vtilde differ in length");
      }
      positions = *cfg.positions;
    } else {
      positions.push_back(0.0);
      for (double g : resolve_gaps(cfg, cfg.vtilde->size())) {
        positions.push_back(positions.back() + g);
      }
    }
    check(ds_system_create_reduced(cfg.vtilde->data(), positions.data(),
                                   positions.size(), *cfg.k, &raw),
          "building system");
  }
  return {raw, &ds_system_destroy};
}

ds_sweep_spec build_sweep(const RunConfig& cfg, std::size_t default_steps) {
  if (!cfg.param) throw ConfigError("--param is required (dtilde, xi or k)");
  ds_sweep_spec spec{};
  const std::string& p = *cfg.param;
  if (p == "dtilde" || p == "gap") {
    spec.param = DS_PARAM_GAP;
  } else if (p == "xi" || p == "strength") {
    spec.param = DS_PARAM_STRENGTH;
  } else if (p == "k") {
    spec.param = DS_PARAM_WAVENUMBER;
  } else {
    throw ConfigError("unknown sweep parameter '" + p + "'");
  }
  if (!cfg.min || !cfg.max) throw ConfigError("--min and --max are required");
  spec.lo = *cfg.min;
  spec.hi = *cfg.max;
  spec.steps = cfg.steps.value_or(default_steps);
  return spec;
}

// Output goes to --out when given, else to stdout.
class Sink {
 public:
  explicit Sink(const std::optional<std::string>& path) {
    if (path) {
      file_.open(*path);
      if (!file_) throw ConfigError("cannot write " + *path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
};

int run_solve(const RunConfig& cfg) {
  auto sys = build_system(cfg);
  ds_solution* raw = nullptr;
  check(ds_solve_direct(sys.get(), &raw), "direct solve");
  SolutionPtr sol(raw, &ds_solution_destroy);

  ds_complex t_tm{}, r_tm{};
  check(ds_solve_transfer(sys.get(), &t_tm, &r_tm), "transfer solve");

  const ds_complex r = ds_solution_r(sol.get());
  const ds_complex t = ds_solution_t(sol.get());
  const double T = ds_solution_transmission(sol.get());
  const double R = ds_solution_reflection(sol.get());
  const double unitarity = std::fabs(T + R - 1.0);
  const double cross = std::max(distance(t, t_tm), distance(r, r_tm));
  const bool unitarity_ok = unitarity <= kUnitarityTolerance;
  const bool cross_ok = cross <= kCrossCheckTolerance;

  std::ostringstream os;
  const std::size_t n = ds_system_size(sys.get());
  os << "sites: " << n << "\n";
  os << "r = " << fmt(r) << "\n";
  os << "t = " << fmt(t) << "\n";
  os << "T = |t|^2 = " << fmt(T) << "\n";
  os << "R = |r|^2 = " << fmt(R) << "\n";
  for (std::size_t j = 2; j <= n; ++j) {
    ds_complex a{}, b{};
    check(ds_solution_region(sol.get(), j, &a, &b), "reading region");
    os << "region " << j << ": a = " << fmt(a) << ", b = " << fmt(b) << "\n";
  }
  os << "linear residual: " << fmt(ds_solution_residual(sol.get())) << "\n";
  os << "|T + R - 1| = " << fmt(unitarity) << "\n";
  os << "unitarity: " << (unitarity_ok ? "PASS" : "FAIL") << "\n";
  os << "direct vs transfer: max |diff| = " << fmt(cross) << "\n";
  os << "cross-check: " << (cross_ok ? "PASS" : "FAIL") << "\n";

  if (cfg.out) {
    Sink sink(cfg.out);
    sink.stream() << os.str();
  }
  if (!cfg.quiet) std::cout << os.str();
  if (!unitarity_ok || !cross_ok) {
    std::cerr << "self-check failed\n";
    return kExitSelfCheck;
  }
  return 0;
}

int run_sweep(const RunConfig& cfg) {
  auto sys = build_system(cfg);
  const ds_sweep_spec spec = build_sweep(cfg, kDefaultScanSteps);
  ds_sweep_result* raw = nullptr;
  check(ds_sweep(sys.get(), &spec, &raw), "sweep");
  std::unique_ptr<ds_sweep_result, decltype(&ds_sweep_result_destroy)> res(
      raw, &ds_sweep_result_destroy);

  Sink sink(cfg.out);
  auto& os = sink.stream();
  os << "param,T,R\n";
  const ds_sweep_record* rec = ds_sweep_result_records(res.get());
  const std::size_t size = ds_sweep_result_size(res.get());
  double worst = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    os << fmt(rec[i].param) << ',' << fmt(rec[i].transmission) << ','
       << fmt(rec[i].reflection) << '\n';
    worst = std::max(worst, std::fabs(rec[i].transmission + rec[i].reflection - 1.0));
  }
  os.flush();
  if (!cfg.quiet && sink.to_file()) {
    std::cout << "sweep: " << size << " points, " << ds_sweep_result_skipped(res.get())
              << " skipped, max |T + R - 1| = " << fmt(worst) << " -> " << *cfg.out
              << "\n";
  }
  if (ds_sweep_result_skipped(res.get()) > 0) {
    std::cerr << "warning: " << ds_sweep_result_skipped(res.get())
              << " sweep points skipped\n";
  }
  if (worst > kSweepUnitarityTolerance) {
    std::cerr << "self-check failed: |T + R - 1| = " << fmt(worst) << "\n";
    return kExitSelfCheck;
  }
  return 0;
}

int run_resonances(const RunConfig& cfg) {
  auto sys = build_system(cfg);
  const ds_sweep_spec spec = build_sweep(cfg, kDefaultScanSteps);
  ds_resonances* raw = nullptr;
  check(ds_find_resonances(sys.get(), &spec, cfg.tol.value_or(1e-10), &raw),
        "resonance search");
  std::unique_ptr<ds_resonances, decltype(&ds_resonances_destroy)> res(
      raw, &ds_resonances_destroy);

  Sink sink(cfg.out);
  auto& os = sink.stream();
  os << "param,residual\n";
  const ds_resonance_hit* hits = ds_resonances_data(res.get());
  for (std::size_t i = 0; i < ds_resonances_size(res.get()); ++i) {
    os << fmt(hits[i].param) << ',' << fmt(hits[i].residual) << '\n';
  }
  os.flush();
  if (!cfg.quiet && sink.to_file()) {
    std::cout << "resonances: " << ds_resonances_size(res.get()) << " found -> "
              << *cfg.out << "\n";
  }
  return 0;
}

int run_wavefunction(const RunConfig& cfg) {
  auto sys = build_system(cfg);
  ds_solution* raw = nullptr;
  check(ds_solve_direct(sys.get(), &raw), "direct solve");
  SolutionPtr sol(raw, &ds_solution_destroy);

  double ymin = 0.0, ymax = 0.0;
  std::size_t count = 0;
  check(ds_wavefunction_default_window(sys.get(), &ymin, &ymax, &count), "window");
  ymin = cfg.ymin.value_or(ymin);
  ymax = cfg.ymax.value_or(ymax);
  count = cfg.count.value_or(count);

  std::vector<ds_wave_sample> samples(count);
  check(ds_wavefunction_sample(sys.get(), sol.get(), ymin, ymax, count, samples.data()),
        "sampling");

  std::vector<ds_site_matching> matching(ds_system_size(sys.get()));
  check(ds_verify_matching(sys.get(), sol.get(), 1e-6, matching.data()),
        "matching check");
  double worst_jump = 0.0;
  for (const auto& m : matching) worst_jump = std::max(worst_jump, m.jump_residual);

  Sink sink(cfg.out);
  auto& os = sink.stream();
  os << "y,psi_re,psi_im,dpsi_re,dpsi_im,density\n";
  for (const auto& s : samples) {
    os << fmt(s.y) << ',' << fmt(s.psi.re) << ',' << fmt(s.psi.im) << ','
       << fmt(s.dpsi.re) << ',' << fmt(s.dpsi.im) << ',' << fmt(s.density) << '\n';
  }
  os.flush();
  if (!cfg.quiet && sink.to_file()) {
    std::cout << "wavefunction: " << count << " samples over [" << fmt(ymin) << ", "
              << fmt(ymax) << "], T = " << fmt(ds_solution_transmission(sol.get()))
              << ", max jump residual = " << fmt(worst_jump) << " -> " << *cfg.out
              << "\n";
  }
  if (worst_jump > kJumpTolerance) {
    std::cerr << "self-check failed: jump residual " << fmt(worst_jump) << "\n";
    return kExitSelfCheck;
  }
  return 0;
}

struct SystemFlags {
  std::vector<double> xi, vtilde, gaps, positions;
  double k = 0.0, gap = 0.0, y0 = 0.0;
  bool gaps_uniform = false;
  std::string param;
  double min = 0.0, max = 0.0, tol = 0.0, ymin = 0.0, ymax = 0.0;
  std::size_t steps = 0, count = 0;
};

void add_system_options(CLI::App* sub, SystemFlags& f) {
  sub->add_option("--xi", f.xi, "dimensionless strengths, comma separated")->delimiter(',');
  sub->add_option("--vtilde", f.vtilde, "reduced strengths 2mV0/hbar^2")->delimiter(',');
  sub->add_option("--k", f.k, "wavenumber (with --vtilde)");
  sub->add_option("--gaps", f.gaps, "gaps between consecutive sites")->delimiter(',');
  sub->add_option("--gap", f.gap, "uniform gap between sites");
  sub->add_flag("--gaps-uniform", f.gaps_uniform, "all gaps equal (--gap, default 1)");
  sub->add_option("--positions", f.positions, "site positions (with --vtilde)")
      ->delimiter(',');
  sub->add_option("--y0", f.y0, "position of the first site (default 0)");
}

void add_sweep_options(CLI::App* sub, SystemFlags& f) {
  sub->add_option("--param", f.param, "swept parameter: dtilde, xi or k");
  sub->add_option("--min", f.min, "lower end of the range");
  sub->add_option("--max", f.max, "upper end of the range");
  sub->add_option("--steps", f.steps, "grid points including both ends (default 2000)");
}

template <class T>
void overlay(CLI::App* sub, const char* name, const T& value, std::optional<T>& dst) {
  if (sub->count(name) > 0) dst = value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scattering from a finite array of 1D Dirac delta potentials"};
  app.fallthrough();
  std::string config_path;
  std::string out_path;
  bool quiet = false;
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--out", out_path, "output file (CSV for sweep/resonances/wavefunction)");
  app.add_flag("--quiet", quiet, "suppress the summary on stdout");

  SystemFlags flags;
  auto* solve = app.add_subcommand("solve", "amplitudes, interior coefficients, self-checks");
  auto* sweep = app.add_subcommand("sweep", "T and R over a parameter range (CSV)");
  auto* wave = app.add_subcommand("wavefunction", "psi, psi' and |psi|^2 on a grid (CSV)");
  auto* reso = app.add_subcommand(
      "resonances",
      "perfect-transmission points (CSV); resonances narrower than one grid "
      "cell may be missed, raise --steps to resolve them");
  for (auto* sub : {solve, sweep, wave, reso}) add_system_options(sub, flags);
  add_sweep_options(sweep, flags);
  add_sweep_options(reso, flags);
  reso->add_option("--tol", flags.tol, "max |r|^2 at a reported hit (default 1e-10)");
  wave->add_option("--ymin", flags.ymin, "window start (default y_1 - 3)");
  wave->add_option("--ymax", flags.ymax, "window end (default y_n + 3)");
  wave->add_option("--count", flags.count, "sample count (default 2001)");
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) load_json(config_path, cfg);

    CLI::App* sub = nullptr;
    for (auto* s : {solve, sweep, wave, reso}) {
      if (s->parsed()) sub = s;
    }
    if (sub) {
      cfg.mode = sub->get_name();
      overlay(sub, "--xi", flags.xi, cfg.xi);
      overlay(sub, "--vtilde", flags.vtilde, cfg.vtilde);
      overlay(sub, "--k", flags.k, cfg.k);
      overlay(sub, "--gaps", flags.gaps, cfg.gaps);
      overlay(sub, "--gap", flags.gap, cfg.gap);
      overlay(sub, "--positions", flags.positions, cfg.positions);
      if (sub->count("--gaps-uniform") > 0) cfg.gaps_uniform = flags.gaps_uniform;
      if (sub->count("--y0") > 0) cfg.y0 = flags.y0;
      // Flags override the file, including switching between xi and vtilde.
      if (sub->count("--xi") > 0 && sub->count("--vtilde") == 0) cfg.vtilde.reset();
      if (sub->count("--vtilde") > 0 && sub->count("--xi") == 0) cfg.xi.reset();
      if (sub->count("--gap") > 0 && sub->count("--gaps") == 0) cfg.gaps.reset();
      if (sub != solve && sub != wave) {
        overlay(sub, "--param", flags.param, cfg.param);
        overlay(sub, "--min", flags.min, cfg.min);
        overlay(sub, "--max", flags.max, cfg.max);
        overlay(sub, "--steps", flags.steps, cfg.steps);
      }
      if (sub == reso) overlay(sub, "--tol", flags.tol, cfg.tol);
      if (sub == wave) {
        overlay(sub, "--ymin", flags.ymin, cfg.ymin);
        overlay(sub, "--ymax", flags.ymax, cfg.ymax);
        overlay(sub, "--count", flags.count, cfg.count);
      }
    }
    if (!out_path.empty()) cfg.out = out_path;
    cfg.quiet = quiet;

    if (cfg.mode == "solve") return run_solve(cfg);
    if (cfg.mode == "sweep") return run_sweep(cfg);
    if (cfg.mode == "wavefunction") return run_wavefunction(cfg);
    if (cfg.mode == "resonances") return run_resonances(cfg);
    if (cfg.mode.empty()) throw ConfigError("no mode: give a subcommand or 'mode' in --config");
    throw ConfigError("unknown mode '" + cfg.mode + "'");
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  }
}
