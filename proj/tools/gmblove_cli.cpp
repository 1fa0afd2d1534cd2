/*
 * (C) Copyright 2026 gmblove contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

// gmblove command-line front end. Everything numerical goes through the C API.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gmblove/gmblove.h"
#include "json.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kDomain = 3,
  kConvergence = 4,
  kIo = 5,
  kInternal = 6,
};

struct Failure {
  int code;
  std::string message;
};

int exit_code_for(gmbl_status status) {
  switch (status) {
    case GMBL_OK: return kOk;
    case GMBL_ERR_PARSE: return kParse;
    case GMBL_ERR_INVALID_ARGUMENT:
    case GMBL_ERR_DOMAIN:
    case GMBL_ERR_POLE:
    case GMBL_ERR_UNSUPPORTED:
    case GMBL_ERR_BRACKET: return kDomain;
    case GMBL_ERR_CONVERGENCE: return kConvergence;
    default: return kInternal;
  }
}

void check(gmbl_status status, const std::string& context) {
  if (status != GMBL_OK) throw Failure{exit_code_for(status), context + ": " + gmbl_last_error()};
}

struct ModelDeleter {
  void operator()(gmbl_model* p) const { gmbl_model_free(p); }
};
struct ProblemDeleter {
  void operator()(gmbl_problem* p) const { gmbl_problem_free(p); }
};
struct PowerlawDeleter {
  void operator()(gmbl_powerlaw* p) const { gmbl_powerlaw_free(p); }
};
struct SpectrumDeleter {
  void operator()(gmbl_spectrum* p) const { gmbl_spectrum_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { gmbl_string_free(p); }
};
using ModelPtr = std::unique_ptr<gmbl_model, ModelDeleter>;
using ProblemPtr = std::unique_ptr<gmbl_problem, ProblemDeleter>;
using PowerlawPtr = std::unique_ptr<gmbl_powerlaw, PowerlawDeleter>;
using SpectrumPtr = std::unique_ptr<gmbl_spectrum, SpectrumDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

/// Shortest round-trip representation; independent of the C locale.
std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kIo, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Failure{kIo, "cannot write " + path};
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

struct GridSpec {
  std::vector<double> raw;  // START STOP POINTS
  bool log = false;
};

std::vector<double> make_grid(const GridSpec& spec) {
  if (spec.raw.size() != 3) throw Failure{kUsage, "--grid takes START STOP POINTS"};
  const double start = spec.raw[0];
  const double stop = spec.raw[1];
  const double pts = spec.raw[2];
  if (!(pts >= 1) || pts != std::floor(pts) || pts > 1e7) {
    throw Failure{kUsage, "grid POINTS must be a positive integer"};
  }
  // a single point may repeat START as STOP
  if (!(start < stop) && !(pts == 1 && start == stop)) {
    throw Failure{kUsage, "grid START must be less than STOP"};
  }
  if (spec.log && !(start > 0)) throw Failure{kUsage, "--log needs positive grid endpoints"};
  const auto n = static_cast<std::size_t>(pts);
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double frac = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    grid[i] = spec.log ? std::exp(std::log(start) + frac * (std::log(stop) - std::log(start)))
                       : start + frac * (stop - start);
  }
  grid.front() = start;
  if (n > 1) grid.back() = stop;
  return grid;
}

void add_grid(CLI::App* cmd, GridSpec& grid, bool required) {
  auto* opt = cmd->add_option("--grid", grid.raw, "START STOP POINTS")->expected(3);
  if (required) opt->required();
  cmd->add_flag("--log", grid.log, "logarithmic spacing (positive endpoints)");
}

/// Problem source shared by spectrum / invert / compare.
struct ProblemSource {
  std::string model_path;
  std::optional<std::size_t> random_n;
  std::optional<std::uint64_t> seed;
  int degree = 2;
};

void add_problem_source(CLI::App* cmd, ProblemSource& src) {
  auto* model = cmd->add_option("--model", src.model_path, "LoveProblem JSON file");
  auto* random =
      cmd->add_option("--random", src.random_n, "use a random N-element Earth-like problem");
  cmd->add_option("--seed", src.seed, "seed for --random");
  cmd->add_option("--degree", src.degree, "harmonic degree for --random")->default_val(2);
  model->excludes(random);
}

ProblemPtr load_problem(const ProblemSource& src) {
  gmbl_problem* raw = nullptr;
  if (src.random_n) {
    if (!src.seed) throw Failure{kUsage, "--random requires an explicit --seed"};
    check(gmbl_problem_random(*src.random_n, src.degree, *src.seed, &raw), "random problem");
  } else if (!src.model_path.empty()) {
    const std::string text = read_file(src.model_path);
    check(gmbl_problem_from_json(text.c_str(), &raw), src.model_path);
  } else {
    throw Failure{kUsage, "give --model PATH or --random N --seed S"};
  }
  ProblemPtr problem(raw);
  gmbl_problem_info info{};
  check(gmbl_problem_get_info(problem.get(), &info), "problem");
  if (const char* note = gmbl_degree_note(info.degree)) std::cerr << "note: " << note << "\n";
  return problem;
}

SpectrumPtr solve(const gmbl_problem* problem) {
  gmbl_spectrum* raw = nullptr;
  check(gmbl_spectrum_solve(problem, &raw), "relaxation spectrum");
  return SpectrumPtr(raw);
}

struct PwOptions {
  std::optional<int> n_max;
  std::optional<int> digits;
  std::string accel = "rho";
  std::optional<double> tol;
};

void add_pw_options(CLI::App* cmd, PwOptions& pw) {
  cmd->add_option("--pw-nmax", pw.n_max, "Post-Widder order (1..40, default 24)");
  cmd->add_option("--pw-digits", pw.digits,
                  "working decimal digits (default max(34, 2.5 n); env GMB_LOVE_PRECISION)");
  cmd->add_option("--pw-accel", pw.accel, "sequence acceleration")
      ->check(CLI::IsMember({"rho", "none"}));
  cmd->add_option("--pw-tol", pw.tol, "relative convergence target (default 1e-6)");
}

gmbl_pw_config pw_config(const PwOptions& pw) {
  gmbl_pw_config config;
  gmbl_pw_config_default(&config);
  if (pw.n_max) config.n_max = *pw.n_max;
  if (pw.digits) {
    config.precision_digits = *pw.digits;
  } else if (const char* env = std::getenv("GMB_LOVE_PRECISION"); env && *env) {
    int digits = 0;
    const char* end = env + std::char_traits<char>::length(env);
    const auto res = std::from_chars(env, end, digits);
    if (res.ec != std::errc() || res.ptr != end || digits <= 0) {
      throw Failure{kUsage, std::string("GMB_LOVE_PRECISION must be a positive integer, got '") +
                                env + "'"};
    }
    config.precision_digits = digits;
  }
  config.acceleration = pw.accel == "none" ? GMBL_ACCEL_NONE : GMBL_ACCEL_RHO;
  if (pw.tol) config.target_tol = *pw.tol;
  return config;
}

// ---- modulus ---------------------------------------------------------------

struct ModulusArgs {
  std::string model_path;
  GridSpec grid;
  std::string out;
};

int cmd_modulus(const ModulusArgs& args) {
  const std::string text = read_file(args.model_path);
  gmbl_model* raw = nullptr;
  check(gmbl_model_from_json(text.c_str(), &raw), args.model_path);
  ModelPtr model(raw);
  const auto grid = make_grid(args.grid);
  std::vector<gmbl_complex> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    check(gmbl_modulus(model.get(), {grid[i], 0.0}, &values[i]), "s = " + fmt(grid[i]));
  }
  Sink sink(args.out);
  auto& os = sink.stream();
  os << "s,mu_re,mu_im\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    os << fmt(grid[i]) << ',' << fmt(values[i].re) << ',' << fmt(values[i].im) << '\n';
  }
  return kOk;
}

// ---- powerlaw --------------------------------------------------------------

struct PowerlawArgs {
  std::vector<int> pq;
  std::string model_path;
  GridSpec grid;
  bool closed = false;
  bool series = false;
  std::string n_terms = "auto";
  double tol = 1e-12;
  std::string out;
};

int cmd_powerlaw(PowerlawArgs args) {
  int p = 0;
  int q = 0;
  std::optional<long> model_terms;
  if (!args.model_path.empty()) {
    const std::string text = read_file(args.model_path);
    gmbl_powerlaw* raw = nullptr;
    check(gmbl_powerlaw_from_json(text.c_str(), &raw), args.model_path);
    PowerlawPtr body(raw);
    long n = -1;
    check(gmbl_powerlaw_params(body.get(), &p, &q, nullptr, nullptr, &n), "power-law body");
    if (n > 0) model_terms = n;
  } else if (args.pq.size() == 2) {
    p = args.pq[0];
    q = args.pq[1];
  } else {
    throw Failure{kUsage, "give --pq P Q or --model PATH"};
  }

  std::optional<long> fixed_terms = model_terms;
  if (args.n_terms != "auto") {
    long n = 0;
    const char* b = args.n_terms.data();
    const char* e = b + args.n_terms.size();
    const auto res = std::from_chars(b, e, n);
    if (res.ec != std::errc() || res.ptr != e || n < 1) {
      throw Failure{kUsage, "--n-terms must be a positive integer or 'auto'"};
    }
    fixed_terms = n;
  }
  if (fixed_terms) args.series = true;
  if (!args.closed && !args.series) {
    if (gmbl_powerlaw_closed_available(p, q)) {
      args.closed = true;
    } else {
      args.series = true;
    }
  }

  const bool convergent = gmbl_powerlaw_in_region(p, q) != 0;
  const std::string label = "(p,q) = (" + std::to_string(p) + "," + std::to_string(q) + ")";
  if (args.series && !convergent) {
    std::cerr << "warning: the series for " << label
              << " diverges (needs p >= 2 or q >= 2); partial sums grow without bound\n";
    if (!fixed_terms) return kDomain;
  }

  const auto grid = make_grid(args.grid);
  struct Row {
    gmbl_complex closed{};
    gmbl_complex series{};
    double bound = 0.0;
    long terms = 0;
  };
  std::vector<Row> rows(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const gmbl_complex z{grid[i], 0.0};
    const std::string where = label + ", z = " + fmt(grid[i]);
    Row& row = rows[i];
    if (args.closed) check(gmbl_powerlaw_closed(p, q, z, &row.closed), where);
    if (args.series && fixed_terms) {
      row.terms = *fixed_terms;
      check(gmbl_powerlaw_truncated(p, q, *fixed_terms, z, &row.series), where);
      if (convergent) {
        check(gmbl_powerlaw_tail_bound(p, q, *fixed_terms, z, &row.bound), where);
      } else {
        row.bound = HUGE_VAL;
      }
    } else if (args.series) {
      check(gmbl_powerlaw_series(p, q, z, args.tol, &row.series, &row.bound, &row.terms), where);
    }
  }

  Sink sink(args.out);
  auto& os = sink.stream();
  os << "z,M_re,M_im";
  if (args.closed && args.series) os << ",series_re,series_im";
  if (args.series) os << ",tail_bound,n_terms";
  os << '\n';
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Row& row = rows[i];
    const gmbl_complex m = args.closed ? row.closed : row.series;
    os << fmt(grid[i]) << ',' << fmt(m.re) << ',' << fmt(m.im);
    if (args.closed && args.series) os << ',' << fmt(row.series.re) << ',' << fmt(row.series.im);
    if (args.series) os << ',' << fmt(row.bound) << ',' << row.terms;
    os << '\n';
  }
  return kOk;
}

// ---- spectrum --------------------------------------------------------------

struct SpectrumArgs {
  ProblemSource source;
  std::string preset;
  std::optional<double> fluid_limit;
  bool json = false;
  std::string out;
};

/// Fluid limits of the homogeneous incompressible sphere. These are standard
/// textbook values supplied for convenience, not derived by this library.
double fluid_limit_preset(const std::string& name, int degree) {
  const double l = degree;
  if (name == "load-k") return -1.0;
  if (name == "load-h") return -(2.0 * l + 1.0) / 3.0;
  if (degree == 1) throw Failure{kDomain, "tidal fluid limits are undefined at degree 1"};
  if (name == "tidal-k") return 3.0 / (2.0 * (l - 1.0));
  return (2.0 * l + 1.0) / (2.0 * (l - 1.0));  // tidal-h
}

int cmd_spectrum(const SpectrumArgs& args) {
  ProblemPtr problem = load_problem(args.source);
  gmbl_problem_info info{};
  check(gmbl_problem_get_info(problem.get(), &info), "problem");
  std::optional<double> fluid = args.fluid_limit;
  if (!args.preset.empty()) fluid = fluid_limit_preset(args.preset, info.degree);
  if (fluid) {
    gmbl_problem* raw = nullptr;
    check(gmbl_problem_with_fluid_limit(problem.get(), *fluid, &raw), "fluid limit");
    problem.reset(raw);
    check(gmbl_problem_get_info(problem.get(), &info), "problem");
  }

  SpectrumPtr spectrum = solve(problem.get());
  const std::size_t n = gmbl_spectrum_size(spectrum.get());
  const double residual = gmbl_spectrum_sum_rule_residual(spectrum.get());

  std::vector<double> closed(info.n_elements);
  std::optional<double> deviation;
  if (info.n_elements <= 4) {
    std::size_t count = 0;
    double dev = 0.0;
    check(gmbl_closed_form_roots(problem.get(), closed.data(), closed.size(), &count, &dev),
          "closed-form roots");
    closed.resize(count);
    deviation = dev;
  }

  nlohmann::json doc;
  {
    char* raw = nullptr;
    check(gmbl_spectrum_to_json(spectrum.get(), &raw), "spectrum");
    StringPtr text(raw);
    doc = nlohmann::json::parse(text.get());
  }
  doc["degree"] = info.degree;
  doc["lambda2"] = info.lambda2;
  doc["fluid_limit"] = info.fluid_limit;
  doc["sum_rule_residual"] = residual;
  if (deviation) {
    doc["closed_form_roots"] = closed;
    doc["max_root_deviation"] = *deviation;
  }

  if (!args.out.empty()) {
    Sink sink(args.out);
    sink.stream() << doc.dump(2) << '\n';
  }
  if (args.json) {
    std::cout << doc.dump(2) << '\n';
    return kOk;
  }

  auto& os = std::cout;
  os << "degree " << info.degree << ", N = " << info.n_elements
     << ", lambda^2 = " << fmt(info.lambda2) << ", fluid limit L_f = " << fmt(info.fluid_limit)
     << "\n\n";
  os << "  n  s_n [1/s]                 L_n (normalized)          L_n * L_f\n";
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    double amp = 0.0;
    check(gmbl_spectrum_mode(spectrum.get(), i, &s, &amp), "mode");
    char line[160];
    std::snprintf(line, sizeof line, "%3zu  %-24s  %-24s  %s\n", i + 1, fmt(s).c_str(),
                  fmt(amp).c_str(), fmt(amp * info.fluid_limit).c_str());
    os << line;
  }
  const double le = gmbl_spectrum_elastic_amp(spectrum.get());
  os << "\nL_e (elastic, normalized) = " << fmt(le) << "  (times L_f: "
     << fmt(le * info.fluid_limit) << ")\n";
  os << "sum-rule residual |L_e + sum L_n/(-s_n) - 1| = " << fmt(residual) << '\n';
  if (deviation) {
    os << "\nroots by radicals:   ";
    for (double r : closed) os << ' ' << fmt(r);
    os << "\nroots by bracketing: ";
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      check(gmbl_spectrum_mode(spectrum.get(), i, &s, nullptr), "mode");
      os << ' ' << fmt(s);
    }
    os << "\nmax relative deviation = " << fmt(*deviation) << '\n';
  }
  return kOk;
}

// ---- invert ----------------------------------------------------------------

struct InvertArgs {
  ProblemSource source;
  GridSpec grid;
  std::string method = "heaviside";
  PwOptions pw;
  std::string out;
};

int cmd_invert(const InvertArgs& args) {
  ProblemPtr problem = load_problem(args.source);
  const auto grid = make_grid(args.grid);
  Sink sink(args.out);
  auto& os = sink.stream();

  if (args.method == "heaviside") {
    SpectrumPtr spectrum = solve(problem.get());
    os << "t_seconds,impulse_regular,heaviside_response\n";
    for (double t : grid) {
      double regular = 0.0;
      double step = 0.0;
      check(gmbl_impulse_response(spectrum.get(), t, &regular, nullptr), "t = " + fmt(t));
      check(gmbl_heaviside_response(spectrum.get(), t, &step), "t = " + fmt(t));
      os << fmt(t) << ',' << fmt(regular) << ',' << fmt(step) << '\n';
    }
    return kOk;
  }

  if (grid.front() <= 0.0) {
    throw Failure{kDomain, "the postwidder method needs t > 0; grid starts at t = " +
                               fmt(grid.front())};
  }
  const gmbl_pw_config config = pw_config(args.pw);
  int failed = 0;
  os << "t_seconds,impulse_regular,pw_error_estimate,pw_converged\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    gmbl_pw_result r{};
    check(gmbl_pw_invert(problem.get(), grid[i], &config, &r), "t = " + fmt(grid[i]));
    if (!r.converged) {
      ++failed;
      std::cerr << "warning: row " << i + 1 << " (t = " << fmt(grid[i])
                << "): not converged, error estimate " << fmt(r.error_estimate) << '\n';
    }
    os << fmt(grid[i]) << ',' << fmt(r.value) << ',' << fmt(r.error_estimate) << ','
       << r.converged << '\n';
  }
  if (failed > 0) {
    std::cerr << failed << " of " << grid.size() << " rows did not converge\n";
    return kConvergence;
  }
  return kOk;
}

// ---- compare ---------------------------------------------------------------

struct CompareArgs {
  ProblemSource source;
  GridSpec grid;
  PwOptions pw;
  std::string out;
};

int cmd_compare(const CompareArgs& args) {
  using Clock = std::chrono::steady_clock;
  ProblemPtr problem = load_problem(args.source);
  gmbl_problem_info info{};
  check(gmbl_problem_get_info(problem.get(), &info), "problem");

  const auto t0 = Clock::now();
  SpectrumPtr spectrum = solve(problem.get());

  std::vector<double> grid;
  if (!args.grid.raw.empty()) {
    grid = make_grid(args.grid);
    if (grid.front() <= 0.0) throw Failure{kDomain, "compare needs t > 0"};
  } else {
    // 0.1 min tau .. 10 (1 + lambda^2 sum mu'_n) max tau
    const double stop = 10.0 * info.tau_max / info.elastic_amp;
    grid = make_grid({{0.1 * info.tau_min, stop, 10.0}, true});
  }

  std::vector<double> reference(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    check(gmbl_impulse_response(spectrum.get(), grid[i], &reference[i], nullptr), "heaviside");
  }
  const auto t1 = Clock::now();

  const gmbl_pw_config config = pw_config(args.pw);
  std::vector<gmbl_pw_result> pw(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    check(gmbl_pw_invert(problem.get(), grid[i], &config, &pw[i]), "postwidder");
  }
  const auto t2 = Clock::now();

  std::vector<double> deviations;
  int unconverged = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!pw[i].converged) ++unconverged;
    if (std::abs(reference[i]) > 1e-6 * info.initial_regular) {
      deviations.push_back(std::abs(pw[i].value - reference[i]) / std::abs(reference[i]));
    }
  }
  double max_dev = 0.0;
  double median = 0.0;
  if (!deviations.empty()) {
    std::sort(deviations.begin(), deviations.end());
    max_dev = deviations.back();
    const std::size_t m = deviations.size();
    median = m % 2 ? deviations[m / 2] : 0.5 * (deviations[m / 2 - 1] + deviations[m / 2]);
  }

  const double heaviside_s = std::chrono::duration<double>(t1 - t0).count();
  const double pw_s = std::chrono::duration<double>(t2 - t1).count();
  Sink sink(args.out);
  auto& os = sink.stream();
  os << "elements: " << info.n_elements << ", degree: " << info.degree;
  if (args.source.random_n) os << ", seed: " << *args.source.seed;
  os << "\ntime points: " << grid.size() << " (" << fmt(grid.front()) << " .. "
     << fmt(grid.back()) << " s)\n";
  os << "points compared (|value| > 1e-6 of its initial value): " << deviations.size() << '\n';
  os << "max relative deviation: " << fmt(max_dev) << '\n';
  os << "median relative deviation: " << fmt(median) << '\n';
  os << "postwidder rows not converged: " << unconverged << '\n';
  os << "wall-clock heaviside: " << fmt(heaviside_s) << " s\n";
  os << "wall-clock postwidder: " << fmt(pw_s) << " s\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gmblove: generalized Maxwell body rheology and Love numbers of a homogeneous "
      "incompressible sphere.\n"
      "Inputs and outputs use SI units (Pa, Pa s, s, 1/s). Love-number outputs are "
      "normalized by the fluid limit L_f."};
  app.set_version_flag("--version", gmbl_version());
  app.require_subcommand(1);

  ModulusArgs modulus;
  auto* c_mod = app.add_subcommand("modulus", "complex shear modulus mu(s) on a real s grid");
  c_mod->add_option("--model", modulus.model_path, "GMB model JSON")->required();
  add_grid(c_mod, modulus.grid, true);
  c_mod->add_option("--out", modulus.out, "CSV output (default stdout)");

  PowerlawArgs powerlaw;
  auto* c_pl = app.add_subcommand(
      "powerlaw",
      "normalized power-law modulus M(z; p, q) = sum_n z / (n^p z + n^q), z = s tau*");
  c_pl->add_option("--pq", powerlaw.pq, "integer exponents P Q")->expected(2);
  c_pl->add_option("--model", powerlaw.model_path, "power-law body JSON (supplies p, q, N)");
  add_grid(c_pl, powerlaw.grid, true);
  c_pl->add_flag("--closed", powerlaw.closed, "evaluate the closed form");
  c_pl->add_flag("--series", powerlaw.series, "evaluate the series with its tail bound");
  c_pl->add_option("--n-terms", powerlaw.n_terms, "series terms, or 'auto'");
  c_pl->add_option("--tol", powerlaw.tol, "absolute target for --n-terms auto")
      ->default_val(1e-12);
  c_pl->add_option("--out", powerlaw.out, "CSV output (default stdout)");

  SpectrumArgs spectrum;
  auto* c_sp = app.add_subcommand("spectrum", "relaxation spectrum (s_n, L_n) and L_e");
  add_problem_source(c_sp, spectrum.source);
  auto* preset =
      c_sp->add_option("--fluid-limit-preset", spectrum.preset,
                       "override L_f with a standard fluid limit of the homogeneous sphere")
          ->check(CLI::IsMember({"tidal-k", "tidal-h", "load-k", "load-h"}));
  c_sp->add_option("--fluid-limit", spectrum.fluid_limit, "override L_f")->excludes(preset);
  c_sp->add_flag("--json", spectrum.json, "print JSON instead of the table");
  c_sp->add_option("--out", spectrum.out, "also write JSON to this file");

  InvertArgs invert;
  auto* c_inv = app.add_subcommand("invert", "normalized time-domain response on a t grid");
  add_problem_source(c_inv, invert.source);
  add_grid(c_inv, invert.grid, true);
  c_inv->add_option("--method", invert.method, "inversion method")
      ->check(CLI::IsMember({"heaviside", "postwidder"}))
      ->default_val("heaviside");
  add_pw_options(c_inv, invert.pw);
  c_inv->add_option("--out", invert.out, "CSV output (default stdout)");

  CompareArgs compare;
  auto* c_cmp = app.add_subcommand("compare", "Heaviside expansion versus Post-Widder");
  add_problem_source(c_cmp, compare.source);
  add_grid(c_cmp, compare.grid, false);
  add_pw_options(c_cmp, compare.pw);
  c_cmp->add_option("--out", compare.out, "report output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*c_mod) return cmd_modulus(modulus);
    if (*c_pl) return cmd_powerlaw(powerlaw);
    if (*c_sp) return cmd_spectrum(spectrum);
    if (*c_inv) return cmd_invert(invert);
    if (*c_cmp) return cmd_compare(compare);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
