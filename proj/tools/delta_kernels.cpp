// delta-kernels: command-line front end for the delta-approximating kernel
// library.  Subcommands: kernel-eval, converge, validate-asymptotics,
// rl-check, selftest.  Exit codes: 0 success, 1 test failure, 2 usage or
// config error, 3 numerical failure.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "deltakern/asymptotics.hpp"
#include "deltakern/common.hpp"
#include "deltakern/harness.hpp"
#include "deltakern/kernels.hpp"
#include "deltakern/quadrature.hpp"
#include "suites.hpp"

namespace dk = deltakern;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// DELTA_KERNELS_THREADS caps every parallel path; unset or invalid means
// no cap beyond the request.
int thread_cap(int want) {
  want = std::max(1, want);
  if (const char* s = std::getenv("DELTA_KERNELS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) {
      want = static_cast<int>(std::min<long>(want, v));
    }
  }
  return want;
}

int default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return thread_cap(static_cast<int>(std::min(4u, std::max(1u, hw))));
}

std::string dtos(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool parse_double(const std::string& s, double& out) {
  try {
    std::size_t used = 0;
    out = std::stod(s, &used);
    while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used])))
      ++used;
    return used == s.size();
  } catch (...) {
    return false;
  }
}

bool parse_int(const std::string& s, int& out) {
  double v = 0.0;
  if (!parse_double(s, v)) return false;
  if (v != std::rint(v) || std::abs(v) > 1e9) return false;
  out = static_cast<int>(v);
  return true;
}

// f(x) = x everywhere; the ramp used by the built-in oscillation probe.
dk::TestFunction ramp_tf() {
  dk::TestFunction tf;
  tf.id = "ramp";
  tf.domain_lo = -kInf;
  tf.domain_hi = kInf;
  tf.pieces.push_back({-kInf, kInf, [](double x) { return x; }});
  tf.trunc_radius = [](double) { return 1e308; };
  return tf;
}

// Two-angle surface functions available to spherical convergence configs.
const std::function<double(double, double)>* surface_function(
    const std::string& id) {
  static const std::map<std::string, std::function<double(double, double)>>
      registry = {
          {"one", [](double, double) { return 1.0; }},
          {"cos_theta", [](double th, double) { return std::cos(th); }},
          {"exp_sincos",
           [](double th, double ph) {
             return std::exp(std::sin(th) * std::cos(ph));
           }},
      };
  const auto it = registry.find(id);
  return it == registry.end() ? nullptr : &it->second;
}

// ---------------------------------------------------------------------------
// kernel-eval

struct EvalArgs {
  std::string family;
  double nu = 0.0;
  int l = 0;
  double alpha = 0.0;
  double a = 0.0;
  double x = 0.0;
  double R = 0.0;
  double n = 0.0;
  double t = 0.0;
  double theta1 = 0.0, phi1 = 0.0, theta2 = 0.0, phi2 = 0.0;
};

int cmd_kernel_eval(const CLI::App* cmd, const EvalArgs& ev) {
  const auto need = [&](std::initializer_list<const char*> names) {
    for (const char* nm : names) {
      if (cmd->count(nm) == 0) {
        std::cerr << "kernel-eval: missing required flag " << nm << " for family "
                  << ev.family << "\n";
        return false;
      }
    }
    return true;
  };
  dk::Family family;
  try {
    family = dk::family_from_name(ev.family);
  } catch (const std::invalid_argument& e) {
    std::cerr << "kernel-eval: " << e.what() << "\n";
    return 2;
  }
  dk::KernelSpec spec;
  spec.family = family;
  spec.nu = ev.nu;
  spec.l = ev.l;
  spec.alpha = ev.alpha;
  try {
    if (dk::family_is_integral(family)) {
      if (!need({"--a", "--x", "--R"})) return 2;
      spec.a = ev.a;
      spec.R = ev.R;
      spec.validate();
      const dk::KernelValue kv = dk::kernel_closed(spec, ev.x);
      std::printf("kernel_family: %s\n", dk::family_name(family));
      std::printf("params: %s\n", spec.params_string().empty()
                                      ? "(none)"
                                      : spec.params_string().c_str());
      std::printf("anchor: %s\n", dtos(spec.a).c_str());
      std::printf("point: x=%s\n", dtos(ev.x).c_str());
      std::printf("cutoff: R=%s\n", dtos(spec.R).c_str());
      std::printf("value: %s\n", dtos(kv.value).c_str());
      std::printf("near_diagonal: %s\n", kv.near_diagonal ? "yes" : "no");
      std::printf("abs_error_estimate: %s\n",
                  dtos(kv.abs_error_estimate).c_str());
      return 0;
    }
    if (dk::family_is_series(family) && family != dk::Family::kSphericalSeries) {
      if (!need({"--n", "--t", "--x"})) return 2;
      if (ev.n != std::rint(ev.n) || ev.n < 0) {
        std::cerr << "kernel-eval: --n must be a nonnegative integer for "
                     "series families\n";
        return 2;
      }
      spec.n = static_cast<int>(ev.n);
      spec.validate();
      const double v = dk::series_kernel(spec, ev.t, ev.x);
      std::printf("kernel_family: %s\n", dk::family_name(family));
      std::printf("params: %s\n", spec.params_string().empty()
                                      ? "(none)"
                                      : spec.params_string().c_str());
      std::printf("point: t=%s x=%s\n", dtos(ev.t).c_str(),
                  dtos(ev.x).c_str());
      std::printf("cutoff: n=%d\n", spec.n);
      std::printf("value: %s\n", dtos(v).c_str());
      return 0;
    }
    if (family == dk::Family::kSphericalSeries) {
      if (!need({"--n", "--theta1", "--phi1", "--theta2", "--phi2"})) return 2;
      if (ev.n != std::rint(ev.n) || ev.n < 0) {
        std::cerr << "kernel-eval: --n must be a nonnegative integer\n";
        return 2;
      }
      const int n = static_cast<int>(ev.n);
      const double v =
          dk::spherical_kernel(n, ev.theta1, ev.phi1, ev.theta2, ev.phi2);
      std::printf("kernel_family: %s\n", dk::family_name(family));
      std::printf("params: (none)\n");
      std::printf("point: theta1=%s phi1=%s theta2=%s phi2=%s\n",
                  dtos(ev.theta1).c_str(), dtos(ev.phi1).c_str(),
                  dtos(ev.theta2).c_str(), dtos(ev.phi2).c_str());
      std::printf("cutoff: n=%d\n", n);
      std::printf("value: %s\n", dtos(v).c_str());
      return 0;
    }
    // Classical sequences.
    if (!need({"--n", "--x", "--a"})) return 2;
    spec.a = ev.a;
    spec.R = ev.n;
    spec.validate();
    const double v = dk::classical_sequence(family, ev.n, ev.x, ev.a);
    std::printf("kernel_family: %s\n", dk::family_name(family));
    std::printf("params: (none)\n");
    std::printf("anchor: %s\n", dtos(ev.a).c_str());
    std::printf("point: x=%s\n", dtos(ev.x).c_str());
    std::printf("cutoff: n=%s\n", dtos(ev.n).c_str());
    std::printf("value: %s\n", dtos(v).c_str());
    return 0;
  } catch (const std::domain_error& e) {
    std::cerr << "kernel-eval: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "kernel-eval: " << e.what() << "\n";
    return 2;
  } catch (const dk::NumericalError& e) {
    std::cerr << "kernel-eval: numerical failure: " << e.what() << "\n";
    return 3;
  }
}

// ---------------------------------------------------------------------------
// converge

struct ConvergeConfig {
  dk::KernelSpec spec;
  std::string test_function;
  double anchor = 0.0;
  double theta1 = 0.0;
  double phi1 = 0.0;
  std::vector<double> cutoffs;  // reals; validated integral for series
  dk::RunOptions opt;
  std::string output = "json";
  long seed = 0;  // accepted for schema parity; convergence runs are
                  // deterministic and never consult it
};

// Flat key=value lines; '#' starts a comment; last assignment wins.
bool parse_config_file(const std::string& path, ConvergeConfig& cfg,
                       std::string& err) {
  std::ifstream in(path);
  if (!in) {
    err = "cannot open config file: " + path;
    return false;
  }
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  const auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      err = "line " + std::to_string(lineno) + ": expected key = value";
      return false;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty()) {
      err = "line " + std::to_string(lineno) + ": empty key or value";
      return false;
    }
    kv[key] = val;  // duplicate keys: last one wins
  }

  static const char* known[] = {"family",   "nu",      "l",
                                "alpha",    "test_function", "anchor",
                                "theta1",   "phi1",    "cutoffs",
                                "abs_tol",  "rel_tol", "max_subdivisions",
                                "threads",  "output",  "seed"};
  for (const auto& [key, val] : kv) {
    if (std::find_if(std::begin(known), std::end(known), [&](const char* k) {
          return key == k;
        }) == std::end(known)) {
      err = "unknown config key: " + key;
      return false;
    }
  }

  const auto get = [&](const char* key) -> const std::string* {
    const auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };
  const std::string* fam = get("family");
  if (!fam) {
    err = "config must set family";
    return false;
  }
  try {
    cfg.spec.family = dk::family_from_name(*fam);
  } catch (const std::invalid_argument& e) {
    err = e.what();
    return false;
  }
  const bool spherical = cfg.spec.family == dk::Family::kSphericalSeries;

  const auto want_double = [&](const char* key, double& out) {
    if (const std::string* s = get(key)) {
      if (!parse_double(*s, out)) {
        err = std::string(key) + ": not a number: " + *s;
        return false;
      }
    }
    return true;
  };
  if (!want_double("nu", cfg.spec.nu)) return false;
  if (!want_double("alpha", cfg.spec.alpha)) return false;
  if (const std::string* s = get("l")) {
    if (!parse_int(*s, cfg.spec.l)) {
      err = "l: not an integer: " + *s;
      return false;
    }
  }

  if (spherical) {
    if (get("anchor")) {
      err = "spherical configs use theta1/phi1, not anchor";
      return false;
    }
    if (!get("theta1") || !get("phi1")) {
      err = "spherical configs require theta1 and phi1";
      return false;
    }
    if (!want_double("theta1", cfg.theta1)) return false;
    if (!want_double("phi1", cfg.phi1)) return false;
  } else {
    if (get("theta1") || get("phi1")) {
      err = "theta1/phi1 apply only to the spherical family";
      return false;
    }
    if (!get("anchor")) {
      err = "config must set anchor";
      return false;
    }
    if (!want_double("anchor", cfg.anchor)) return false;
  }

  if (const std::string* s = get("test_function")) {
    cfg.test_function = *s;
  } else {
    err = "config must set test_function";
    return false;
  }

  const std::string* cut = get("cutoffs");
  if (!cut) {
    err = "config must set cutoffs";
    return false;
  }
  std::stringstream ss(*cut);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    double v = 0.0;
    if (!parse_double(tok, v)) {
      err = "cutoffs: not a number: " + tok;
      return false;
    }
    cfg.cutoffs.push_back(v);
  }
  if (cfg.cutoffs.empty()) {
    err = "cutoffs: empty list";
    return false;
  }
  for (std::size_t i = 0; i + 1 < cfg.cutoffs.size(); ++i) {
    if (!(cfg.cutoffs[i] < cfg.cutoffs[i + 1])) {
      err = "cutoffs: must be strictly increasing";
      return false;
    }
  }
  if (dk::family_is_series(cfg.spec.family)) {
    for (double v : cfg.cutoffs) {
      if (v != std::rint(v) || v < 0) {
        err = "cutoffs: series orders must be nonnegative integers";
        return false;
      }
    }
  }

  if (!want_double("abs_tol", cfg.opt.quad.abs_tol)) return false;
  if (!want_double("rel_tol", cfg.opt.quad.rel_tol)) return false;
  if (cfg.opt.quad.abs_tol <= 0 || cfg.opt.quad.rel_tol <= 0) {
    err = "abs_tol/rel_tol must be positive";
    return false;
  }
  if (const std::string* s = get("max_subdivisions")) {
    if (!parse_int(*s, cfg.opt.quad.max_subdivisions) ||
        cfg.opt.quad.max_subdivisions < 1) {
      err = "max_subdivisions: not a positive integer: " + *s;
      return false;
    }
  }
  if (const std::string* s = get("threads")) {
    if (!parse_int(*s, cfg.opt.threads) || cfg.opt.threads < 1) {
      err = "threads: not a positive integer: " + *s;
      return false;
    }
  } else {
    cfg.opt.threads = default_threads();
  }
  cfg.opt.threads = thread_cap(cfg.opt.threads);
  if (const std::string* s = get("output")) {
    if (*s != "json" && *s != "csv") {
      err = "output: must be json or csv";
      return false;
    }
    cfg.output = *s;
  }
  if (const std::string* s = get("seed")) {
    int sv = 0;
    if (!parse_int(*s, sv)) {
      err = "seed: not an integer: " + *s;
      return false;
    }
    cfg.seed = sv;
  }
  return true;
}

struct OutRow {
  bool ok = false;
  dk::ConvergenceRecord rec;  // valid when ok
  double cutoff = 0.0;        // valid always
  std::string error;          // valid when !ok
};

// Runs the whole ladder at once (rows in parallel); if the batch trips a
// numerical failure, reruns cutoff-by-cutoff so healthy rows still emit.
std::vector<OutRow> run_rows(const ConvergeConfig& cfg,
                             const dk::TestFunction* tf) {
  std::vector<OutRow> rows;
  const auto push_batch = [&](const std::vector<dk::ConvergenceRecord>& recs) {
    for (const auto& r : recs) rows.push_back({true, r, r.cutoff, {}});
  };
  const auto run_some = [&](std::span<const double> cuts)
      -> std::vector<dk::ConvergenceRecord> {
    if (dk::family_is_series(cfg.spec.family)) {
      if (cfg.spec.family == dk::Family::kSphericalSeries) {
        const std::function<double(double, double)>* f =
            surface_function(cfg.test_function);
        if (!f) throw std::invalid_argument("unknown surface function: " +
                                            cfg.test_function);
        std::vector<int> orders(cuts.begin(), cuts.end());
        return dk::run_spherical_convergence(*f, cfg.test_function, cfg.theta1,
                                             cfg.phi1, orders, cfg.opt);
      }
      std::vector<int> orders(cuts.begin(), cuts.end());
      return dk::run_series_convergence(cfg.spec, *tf, cfg.anchor, orders,
                                        cfg.opt);
    }
    return dk::run_convergence(cfg.spec, *tf, cfg.anchor, cuts, cfg.opt);
  };
  try {
    push_batch(run_some(cfg.cutoffs));
    return rows;
  } catch (const dk::NumericalError&) {
    rows.clear();  // fall through to the per-row pass
  }
  for (double c : cfg.cutoffs) {
    const std::array<double, 1> one{c};
    try {
      push_batch(run_some(one));
    } catch (const dk::NumericalError& e) {
      rows.push_back({false, {}, c, e.what()});
    }
  }
  return rows;
}

int cmd_converge(const std::string& path, bool timings) {
  ConvergeConfig cfg;
  std::string err;
  if (!parse_config_file(path, cfg, err)) {
    std::cerr << "converge: " << err << "\n";
    return 2;
  }
  const dk::TestFunction* tf = nullptr;
  std::vector<OutRow> rows;
  try {
    if (cfg.spec.family != dk::Family::kSphericalSeries) {
      tf = &dk::test_function(cfg.test_function);
    }
    rows = run_rows(cfg, tf);
  } catch (const std::invalid_argument& e) {
    std::cerr << "converge: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "converge: " << e.what() << "\n";
    return 2;
  }

  std::size_t succeeded = 0;
  for (const auto& r : rows) succeeded += r.ok ? 1 : 0;

  if (cfg.output == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json o;
      if (r.ok) {
        o["kernel_family"] = dk::family_name(r.rec.kernel.family);
        o["params"] = r.rec.kernel.params_string();
        o["test_function"] = r.rec.test_function_id;
        o["anchor"] = r.rec.anchor;
        o["cutoff"] = r.rec.cutoff;
        o["computed"] = r.rec.computed;
        o["target"] = r.rec.target;
        o["abs_error"] = r.rec.abs_error;
        o["wall_time_ms"] = timings ? r.rec.wall_time_ms : 0.0;
      } else {
        const bool sph = cfg.spec.family == dk::Family::kSphericalSeries;
        o["kernel_family"] = dk::family_name(cfg.spec.family);
        o["params"] = cfg.spec.params_string();
        o["test_function"] = cfg.test_function;
        o["anchor"] = sph ? cfg.theta1 : cfg.anchor;
        o["cutoff"] = r.cutoff;
        o["error"] = r.error;
      }
      arr.push_back(std::move(o));
    }
    std::fputs(arr.dump(2).c_str(), stdout);
    std::fputc('\n', stdout);
  } else {
    std::printf(
        "kernel_family,params,test_function,anchor,cutoff,computed,target,"
        "abs_error,wall_time_ms\n");
    for (const auto& r : rows) {
      if (!r.ok) {
        std::cerr << "converge: row cutoff=" << dtos(r.cutoff)
                  << " failed: " << r.error << "\n";
        continue;
      }
      std::printf("%s,%s,%s,%s,%s,%s,%s,%s,%s\n",
                  dk::family_name(r.rec.kernel.family),
                  r.rec.kernel.params_string().c_str(),
                  r.rec.test_function_id.c_str(), dtos(r.rec.anchor).c_str(),
                  dtos(r.rec.cutoff).c_str(), dtos(r.rec.computed).c_str(),
                  dtos(r.rec.target).c_str(), dtos(r.rec.abs_error).c_str(),
                  dtos(timings ? r.rec.wall_time_ms : 0.0).c_str());
    }
  }
  for (const auto& r : rows) {
    if (r.ok && !r.rec.quad_converged) {
      std::cerr << "converge: note: outer quadrature did not fully converge "
                   "at cutoff "
                << dtos(r.cutoff) << "\n";
    }
  }
  if (succeeded == 0) return 3;
  return 0;
}

// ---------------------------------------------------------------------------
// validate-asymptotics

int cmd_validate(const CLI::App* cmd, const std::string& family_s, double nu,
                 int l, double a, double x, double t_lo, double t_hi) {
  dk::Family family;
  try {
    family = dk::family_from_name(family_s);
  } catch (const std::invalid_argument& e) {
    std::cerr << "validate-asymptotics: " << e.what() << "\n";
    return 2;
  }
  if (!dk::family_is_integral(family)) {
    std::cerr << "validate-asymptotics: family must be one of bessel, "
                 "coulomb, airy, weber\n";
    return 2;
  }
  if (family == dk::Family::kWeber) {
    if (cmd->count("--a") == 0) {
      std::cerr << "validate-asymptotics: weber requires --a\n";
      return 2;
    }
  } else if (cmd->count("--x") == 0) {
    std::cerr << "validate-asymptotics: missing required flag --x\n";
    return 2;
  }
  if (!(t_lo > 0.0) || !(t_hi > t_lo)) {
    std::cerr << "validate-asymptotics: need 0 < --t-lo < --t-hi\n";
    return 2;
  }
  dk::PhaseSpec ps;
  ps.family = family;
  ps.nu = nu;
  ps.l = l;
  ps.a = a;
  try {
    const dk::AsymptoticReport rep = dk::validate_asymptotic(ps, x, t_lo, t_hi);
    std::printf("family: %s\n", dk::family_name(family));
    std::printf("samples: %zu over [%s, %s]\n", rep.t_samples.size(),
                dtos(t_lo).c_str(), dtos(t_hi).c_str());
    std::printf("first_residual: %s\n", dtos(rep.residuals.front()).c_str());
    std::printf("last_residual: %s\n", dtos(rep.residuals.back()).c_str());
    std::printf("fitted_exponent: %s\n", dtos(rep.fitted_exponent).c_str());
    std::printf("expected_exponent: %s\n",
                dtos(rep.expected_exponent).c_str());
    std::printf("pass: %s\n", rep.pass ? "yes" : "no");
    return rep.pass ? 0 : 1;
  } catch (const std::domain_error& e) {
    std::cerr << "validate-asymptotics: " << e.what() << "\n";
    return 2;
  } catch (const dk::NumericalError& e) {
    std::cerr << "validate-asymptotics: numerical failure: " << e.what()
              << "\n";
    return 3;
  }
}

// ---------------------------------------------------------------------------
// rl-check

int cmd_rl_check(double ratio_max, int threads) {
  struct Probe {
    const char* tag;
    dk::PhaseSpec ps;
    dk::OscPart part;
    dk::TestFunction tf;
    double lo, hi;
    std::vector<double> Rs;
    double bound_at_last;
  };
  const dk::TestFunction ramp = ramp_tf();
  std::vector<Probe> probes;
  probes.push_back({"coulomb-sin, psi=1 on (1,2)",
                    {dk::Family::kCoulomb, 0.0, 0, 0.0},
                    dk::OscPart::kSinPhase,
                    dk::test_function("const_one"),
                    1.0,
                    2.0,
                    {25, 50, 100, 200},
                    0.05});
  probes.push_back({"sin(Rx), psi=x on (0,1)",
                    {dk::Family::kBesselHankel, -0.5, 0, 0.0},
                    dk::OscPart::kSinPhase,
                    ramp,
                    0.0,
                    1.0,
                    {12.5, 25, 50, 100},
                    0.02});
  probes.push_back({"cos(Rx), psi=gauss on (-8,8)",
                    {dk::Family::kBesselHankel, -0.5, 0, 0.0},
                    dk::OscPart::kCosPhase,
                    dk::test_function("gauss"),
                    -8.0,
                    8.0,
                    {2.5, 5, 10},
                    1e-10});
  dk::RunOptions opt;
  opt.threads = threads;
  opt.quad.abs_tol = 1e-13;
  opt.quad.rel_tol = 1e-11;
  bool all_ok = true;
  try {
    for (const auto& p : probes) {
      const auto vals = dk::riemann_lebesgue_check(p.ps, p.part, p.tf, p.lo,
                                                   p.hi, p.Rs, opt);
      const double first = std::abs(vals.front());
      const double last = std::abs(vals.back());
      const double ratio = last / first;
      const bool ok = last <= p.bound_at_last && ratio <= ratio_max;
      all_ok = all_ok && ok;
      std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", p.tag);
      std::printf("  |integral|:");
      for (std::size_t i = 0; i < vals.size(); ++i) {
        std::printf(" R=%s -> %.6e", dtos(p.Rs[i]).c_str(),
                    std::abs(vals[i]));
      }
      std::printf("\n  last/first = %.3e (max %.3g), |last| bound %.3g\n",
                  ratio, ratio_max, p.bound_at_last);
    }
  } catch (const dk::NumericalError& e) {
    std::cerr << "rl-check: numerical failure: " << e.what() << "\n";
    return 3;
  }
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------------------
// selftest

int cmd_selftest(const std::string& level, int threads, unsigned seed) {
  std::vector<dk::selftest::SuiteResult> results;
  if (level == "fast") {
    results = dk::selftest::run_fast(threads, seed);
  } else if (level == "full") {
    results = dk::selftest::run_full(threads, seed);
  } else {
    std::cerr << "selftest: unknown level '" << level
              << "' (expected fast or full)\n";
    return 2;
  }
  std::size_t passed = 0;
  for (const auto& r : results) {
    std::printf("[%s] %s: %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str());
    std::fflush(stdout);
    passed += r.pass ? 1 : 0;
  }
  std::printf("%zu/%zu suites passed\n", passed, results.size());
  return passed == results.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "delta-kernels: partial-integral and series delta-kernel experiments"};
  app.require_subcommand(0, 1);

  // kernel-eval
  EvalArgs ev;
  CLI::App* ke = app.add_subcommand(
      "kernel-eval", "Evaluate one kernel at one point");
  ke->add_option("--family", ev.family,
                 "bessel|coulomb|airy|weber|legendre|hermite|laguerre|"
                 "spherical|gaussian|cauchy|sinc")
      ->required();
  ke->add_option("--nu", ev.nu, "Bessel order");
  ke->add_option("--l", ev.l, "Coulomb angular momentum");
  ke->add_option("--alpha", ev.alpha, "Laguerre weight exponent");
  ke->add_option("--a", ev.a, "anchor (weber: first parameter)");
  ke->add_option("--x", ev.x, "evaluation point (weber: second parameter)");
  ke->add_option("--R", ev.R, "integral cutoff");
  ke->add_option("--n", ev.n, "series order / classical index");
  ke->add_option("--t", ev.t, "series integration variable");
  ke->add_option("--theta1", ev.theta1, "spherical anchor polar angle");
  ke->add_option("--phi1", ev.phi1, "spherical anchor azimuth");
  ke->add_option("--theta2", ev.theta2, "spherical point polar angle");
  ke->add_option("--phi2", ev.phi2, "spherical point azimuth");

  // converge
  std::string config_path;
  bool timings = false;
  CLI::App* cv = app.add_subcommand(
      "converge", "Run a convergence ladder from a key=value config file");
  cv->add_option("config", config_path, "path to config file")->required();
  cv->add_flag("--timings", timings,
               "emit measured wall_time_ms instead of 0 (output no longer "
               "byte-reproducible)");

  // validate-asymptotics
  std::string va_family;
  double va_nu = 0.0, va_a = 0.0, va_x = 0.0, va_lo = 0.0, va_hi = 0.0;
  int va_l = 0;
  CLI::App* va = app.add_subcommand(
      "validate-asymptotics",
      "Fit the residual decay of a family's large-argument form");
  va->add_option("--family", va_family, "bessel|coulomb|airy|weber")
      ->required();
  va->add_option("--nu", va_nu, "Bessel order");
  va->add_option("--l", va_l, "Coulomb angular momentum");
  va->add_option("--a", va_a, "Weber parameter");
  va->add_option("--x", va_x, "fixed spatial argument (not used by weber)");
  va->add_option("--t-lo", va_lo, "window start")->required();
  va->add_option("--t-hi", va_hi, "window end")->required();

  // rl-check
  double ratio_max = 0.2;
  CLI::App* rl = app.add_subcommand(
      "rl-check", "Built-in oscillatory-decay probe battery");
  rl->add_option("--ratio-max", ratio_max,
                 "largest-R to smallest-R magnitude ratio bound");

  // selftest
  std::string level;
  unsigned seed = 42;
  CLI::App* st = app.add_subcommand("selftest",
                                    "Run the invariant (fast) or acceptance "
                                    "(full) suite battery");
  st->add_option("level", level, "fast|full")->required();
  st->add_option("--seed", seed, "seed for randomized sweeps");

  int threads = 0;
  app.add_option("--threads", threads,
                 "worker thread cap (further capped by DELTA_KERNELS_THREADS)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const int worker_threads =
      threads > 0 ? thread_cap(threads) : default_threads();

  if (*ke) return cmd_kernel_eval(ke, ev);
  if (*cv) return cmd_converge(config_path, timings);
  if (*va)
    return cmd_validate(va, va_family, va_nu, va_l, va_a, va_x, va_lo, va_hi);
  if (*rl) return cmd_rl_check(ratio_max, worker_threads);
  if (*st) return cmd_selftest(level, worker_threads, seed);

  std::cerr << app.help();
  return 2;
}
