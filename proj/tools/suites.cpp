#include "suites.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "deltakern/airy.hpp"
#include "deltakern/asymptotics.hpp"
#include "deltakern/bessel.hpp"
#include "deltakern/common.hpp"
#include "deltakern/coulomb.hpp"
#include "deltakern/harness.hpp"
#include "deltakern/kernels.hpp"
#include "deltakern/orthopoly.hpp"
#include "deltakern/quadrature.hpp"
#include "deltakern/spherical.hpp"
#include "deltakern/weber.hpp"

namespace deltakern::selftest {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(const char* f, ...) {
  char buf[768];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& work) {
  const int want = std::max(1, std::min(threads, static_cast<int>(n)));
  if (want == 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr err;
  std::mutex err_mu;
  auto drain = [&] {
    for (std::size_t i;
         !stop.load(std::memory_order_relaxed) &&
         (i = next.fetch_add(1, std::memory_order_relaxed)) < n;) {
      try {
        work(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(err_mu);
        if (!err) err = std::current_exception();
        stop.store(true, std::memory_order_relaxed);
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(want) - 1);
  for (int t = 0; t + 1 < want; ++t) pool.emplace_back(drain);
  drain();
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

template <typename Fn>
SuiteResult guarded(const char* name, Fn&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, false, std::string("exception: ") + e.what()};
  }
}

bool strictly_decreasing(const std::vector<ConvergenceRecord>& rows) {
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (!(rows[i + 1].abs_error < rows[i].abs_error)) return false;
  }
  return true;
}

std::string err_list(const std::vector<ConvergenceRecord>& rows) {
  std::string s;
  for (const auto& r : rows) {
    if (!s.empty()) s += " ";
    s += fmt("%.3e", r.abs_error);
  }
  return s;
}

QuadratureConfig quad_cfg(double abs_tol, double rel_tol,
                          int subdivisions = 10000) {
  QuadratureConfig cfg;
  cfg.abs_tol = abs_tol;
  cfg.rel_tol = rel_tol;
  cfg.max_subdivisions = subdivisions;
  return cfg;
}

// Everything-by-zero test function for the polynomial-exactness rows.
TestFunction poly_tf(int degree) {
  TestFunction tf;
  tf.id = fmt("t^%d", degree);
  tf.domain_lo = -kInf;
  tf.domain_hi = kInf;
  tf.pieces.push_back(
      {-kInf, kInf, [degree](double t) { return std::pow(t, degree); }});
  tf.trunc_radius = [](double) { return 1e308; };  // no decay to exploit
  return tf;
}

// ---------------------------------------------------------------------------
// Closed form vs the defining integral, random parameter draws.

SuiteResult oracle_equivalence(const char* name, int threads, unsigned seed,
                               int count, double r_lo, double r_hi) {
  struct Draw {
    double nu;
    int l;
    double a;
    double x;
    double R;
  };
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> da(0.5, 2.0);
  std::uniform_real_distribution<double> dx(0.2, 3.0);
  std::uniform_real_distribution<double> dR(r_lo, r_hi);
  const double nus[] = {0.0, 0.5, 2.0};
  std::vector<Draw> draws(static_cast<std::size_t>(count));
  for (auto i = 0u; i < draws.size(); ++i) {
    Draw& d = draws[i];
    d.nu = nus[i % 3];
    d.l = static_cast<int>(i % 3);
    d.a = da(rng);
    d.x = dx(rng);
    d.R = dR(rng);
    // Keep the draw off the blended diagonal branch; diagonal continuity has
    // its own test, this one compares the generic two-point form.
    while (std::abs(d.x - d.a) < 5e-3) d.x = dx(rng);
  }
  std::vector<double> eb(draws.size()), ec(draws.size()), ea(draws.size()),
      ew(draws.size());
  parallel_for(draws.size(), threads, [&](std::size_t i) {
    const Draw& d = draws[i];
    KernelSpec s;
    s.a = d.a;
    s.R = d.R;
    s.family = Family::kBesselHankel;
    s.nu = d.nu;
    eb[i] = std::abs(kernel_closed(s, d.x).value -
                     detail::kernel_bruteforce(s, d.x, 1e-11));
    s.family = Family::kAiry;
    ea[i] = std::abs(kernel_closed(s, d.x).value -
                     detail::kernel_bruteforce(s, d.x, 1e-11));
    s.family = Family::kCoulomb;
    s.l = d.l;
    ec[i] = std::abs(kernel_closed(s, d.x).value -
                     detail::kernel_bruteforce(s, d.x, 1e-8));
    s.family = Family::kWeber;
    ew[i] = std::abs(kernel_closed(s, d.x).value -
                     detail::kernel_bruteforce(s, d.x, 1e-8));
  });
  const double mb = *std::max_element(eb.begin(), eb.end());
  const double mc = *std::max_element(ec.begin(), ec.end());
  const double ma = *std::max_element(ea.begin(), ea.end());
  const double mw = *std::max_element(ew.begin(), ew.end());
  const bool pass = mb <= 1e-8 && ma <= 1e-8 && mc <= 1e-5 && mw <= 1e-5;
  return {name, pass,
          fmt("%d draws; max |closed - integral|: bessel %.2e (<=1e-8), "
              "airy %.2e (<=1e-8), coulomb %.2e (<=1e-5), weber %.2e (<=1e-5)",
              count, mb, ma, mc, mw)};
}

// ---------------------------------------------------------------------------
// Convergence-to-half-sum experiments.

SuiteResult bessel_convergence(int threads) {
  RunOptions opt;
  opt.threads = threads;
  KernelSpec spec;
  spec.family = Family::kBesselHankel;
  spec.nu = 0.0;
  spec.a = 1.0;
  const std::array<double, 4> cuts{25, 50, 100, 200};
  const auto smooth = run_convergence(spec, test_function("exp_decay"), 1.0,
                                      cuts, opt);
  const auto jump = run_convergence(spec, test_function("step_decay"), 1.0,
                                    cuts, opt);
  const double half = 0.5 * std::exp(-1.0);
  const bool mono = strictly_decreasing(smooth);
  const bool tail_ok = smooth.back().abs_error <= 0.02;
  const bool target_ok = std::abs(jump.back().target - half) <= 1e-14;
  const bool jump_ok = std::abs(jump.back().computed - half) <= 0.03;
  return {"bessel-convergence", mono && tail_ok && target_ok && jump_ok,
          fmt("exp_decay errs %s (decreasing %s, final<=0.02 %s); "
              "step_decay final |I - e^{-1}/2| = %.3e (<=0.03 %s)",
              err_list(smooth).c_str(), mono ? "yes" : "NO",
              tail_ok ? "yes" : "NO",
              std::abs(jump.back().computed - half), jump_ok ? "yes" : "NO")};
}

SuiteResult airy_convergence(int threads) {
  RunOptions opt;
  opt.threads = threads;
  KernelSpec spec;
  spec.family = Family::kAiry;
  spec.a = 0.0;
  const std::array<double, 3> cuts{25, 50, 100};
  const auto rows =
      run_convergence(spec, test_function("gauss"), 0.0, cuts, opt);
  const bool ok = rows.back().abs_error <= 0.02;
  return {"airy-convergence", ok,
          fmt("gauss errs %s (final<=0.02 %s)", err_list(rows).c_str(),
              ok ? "yes" : "NO")};
}

SuiteResult coulomb_convergence(int threads) {
  RunOptions opt;
  opt.threads = threads;
  KernelSpec spec;
  spec.family = Family::kCoulomb;
  spec.l = 0;
  spec.a = 1.0;
  const std::array<double, 3> cuts{30, 60, 120};
  const auto rows =
      run_convergence(spec, test_function("exp_decay"), 1.0, cuts, opt);
  const bool mono = strictly_decreasing(rows);
  const bool ok = rows.back().abs_error <= 0.05;
  return {"coulomb-convergence", mono && ok,
          fmt("exp_decay errs %s (decreasing %s, final<=0.05 %s)",
              err_list(rows).c_str(), mono ? "yes" : "NO", ok ? "yes" : "NO")};
}

SuiteResult weber_ratio(int threads) {
  RunOptions opt;
  opt.threads = threads;
  KernelSpec spec;
  spec.family = Family::kWeber;
  spec.a = 0.0;
  const std::array<double, 3> cuts{10, 20, 40};
  const auto rows =
      run_convergence(spec, test_function("gauss_narrow"), 0.0, cuts, opt);
  // run_convergence reports I_R / (pi sqrt(1+e^{2 pi a})); undo that to get
  // the raw ratio I_R / phi(0) the stabilization check is stated against.
  const double c = weber_theorem_constant(0.0);
  std::vector<double> raw;
  for (const auto& r : rows) raw.push_back(r.computed * c);
  const double drift =
      std::abs(raw.back() - raw[raw.size() - 2]) / std::abs(raw.back());
  const bool ok = drift <= 0.10;
  const double cand1 = PI * std::sqrt(2.0);
  const double cand2 = 2.0 * std::sqrt(2.0) * (PI / 2.0);
  return {"weber-ratio", ok,
          fmt("I_R/phi(0) = %.6f %.6f %.6f; last-doubling drift %.2f%% "
              "(<=10%% %s); candidate normalizations pi*sqrt(2)=%.6f, "
              "2*sqrt(2)*(pi/2)=%.6f (ratio sits near twice both)",
              raw[0], raw[1], raw[2], 100.0 * drift, ok ? "yes" : "NO", cand1,
              cand2)};
}

// ---------------------------------------------------------------------------
// Series kernels: unit mass, polynomial reproduction, Christoffel-Darboux.

SuiteResult series_exactness(int threads, unsigned seed) {
  RunOptions opt;
  opt.threads = threads;
  opt.quad = quad_cfg(1e-11, 1e-11);

  struct FamilyAt {
    Family family;
    double alpha;
    double x;
  };
  const std::array<FamilyAt, 3> fams{{{Family::kLegendreSeries, 0.0, 0.3},
                                      {Family::kHermiteSeries, 0.0, 0.7},
                                      {Family::kLaguerreSeries, 0.0, 1.2}}};

  double worst_mass = 0.0;
  double worst_poly = 0.0;
  const std::array<int, 3> orders{0, 5, 20};
  const std::array<int, 1> order3{3};
  for (const auto& fa : fams) {
    KernelSpec spec;
    spec.family = fa.family;
    spec.alpha = fa.alpha;
    const auto mass = run_series_convergence(spec, test_function("const_one"),
                                             fa.x, orders, opt);
    for (const auto& r : mass) worst_mass = std::max(worst_mass, r.abs_error);
    for (int deg = 1; deg <= 3; ++deg) {
      const TestFunction tf = poly_tf(deg);
      const auto rows = run_series_convergence(spec, tf, fa.x, order3, opt);
      worst_poly = std::max(worst_poly, rows.back().abs_error);
    }
  }

  // Degree-n Legendre kernel against its Christoffel-Darboux collapse.
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dn(1, 40);
  std::uniform_real_distribution<double> dt(-0.995, 0.995);
  double worst_cd = 0.0;
  std::vector<double> pt, px;
  for (int i = 0; i < 50; ++i) {
    const int n = dn(rng);
    const double t = dt(rng);
    double x = dt(rng);
    while (std::abs(t - x) < 1e-2) x = dt(rng);
    KernelSpec spec;
    spec.family = Family::kLegendreSeries;
    spec.n = n;
    const double direct = series_kernel(spec, t, x);
    legendre_p_all(n + 1, t, pt);
    legendre_p_all(n + 1, x, px);
    const double cd = 0.5 * (n + 1) *
                      (pt[n + 1] * px[n] - pt[n] * px[n + 1]) / (t - x);
    worst_cd = std::max(worst_cd, std::abs(direct - cd));
  }

  const bool pass = worst_mass <= 1e-9 && worst_poly <= 1e-9 &&
                    worst_cd <= 1e-10;
  return {"series-exactness", pass,
          fmt("unit-mass err %.2e (<=1e-9), deg<=3 reproduction err %.2e "
              "(<=1e-9), legendre CD err %.2e over 50 draws n<=40 (<=1e-10)",
              worst_mass, worst_poly, worst_cd)};
}

SuiteResult spherical_addition(unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dth(0.02, PI - 0.02);
  std::uniform_real_distribution<double> dph(-PI, PI);
  double worst = 0.0;
  for (int pair = 0; pair < 100; ++pair) {
    const double th1 = dth(rng), th2 = dth(rng);
    const double ph1 = dph(rng), ph2 = dph(rng);
    double cg = std::cos(th1) * std::cos(th2) +
                std::sin(th1) * std::sin(th2) * std::cos(ph1 - ph2);
    cg = std::clamp(cg, -1.0, 1.0);
    for (int k = 0; k <= 10; ++k) {
      std::complex<double> lhs{0.0, 0.0};
      for (int m = -k; m <= k; ++m) {
        lhs += spherical_harmonic(k, m, th1, ph1) *
               std::conj(spherical_harmonic(k, m, th2, ph2));
      }
      const double rhs = (2.0 * k + 1.0) / (4.0 * PI) * legendre_p(k, cg);
      worst = std::max(worst, std::abs(lhs - std::complex<double>{rhs, 0.0}));
    }
  }
  const bool pass = worst <= 1e-12;
  return {"spherical-addition", pass,
          fmt("max |sum_m Y conj(Y) - (2k+1)/(4pi) P_k(cos gamma)| = %.2e "
              "over 100 pairs, k<=10 (<=1e-12)",
              worst)};
}

// ---------------------------------------------------------------------------
// Residual decay of the large-argument envelope*sinusoid forms.

SuiteResult tail_asymptotics(int threads) {
  struct Leg {
    const char* tag;
    PhaseSpec ps;
    double x;
    double lo;
    double hi;
  };
  const std::array<Leg, 4> legs{
      {{"bessel", {Family::kBesselHankel, 0.0, 0, 0.0}, 1.0, 20.0, 200.0},
       {"coulomb", {Family::kCoulomb, 0.0, 0, 0.0}, 1.0, 20.0, 200.0},
       {"airy", {Family::kAiry, 0.0, 0, 0.0}, 0.0, 10.0, 100.0},
       {"weber", {Family::kWeber, 0.0, 0, 0.0}, 0.0, 8.0, 80.0}}};
  std::array<AsymptoticReport, 4> reps;
  parallel_for(legs.size(), threads, [&](std::size_t i) {
    reps[i] = validate_asymptotic(legs[i].ps, legs[i].x, legs[i].lo,
                                  legs[i].hi);
  });
  bool pass = true;
  std::string detail;
  for (std::size_t i = 0; i < legs.size(); ++i) {
    pass = pass && reps[i].pass;
    if (!detail.empty()) detail += "; ";
    detail += fmt("%s fitted %.3f vs %.2f %s", legs[i].tag,
                  reps[i].fitted_exponent, reps[i].expected_exponent,
                  reps[i].pass ? "ok" : "FAIL");
  }
  return {"tail-asymptotics", pass, detail};
}

// ---------------------------------------------------------------------------
// Classical sequences: monotone convergence and Cauchy unit mass.

double cauchy_mass(double n, double a) {
  QuadratureConfig cfg = quad_cfg(2e-11, 1e-10, 20000);
  cfg.tail_policy = TailPolicy::algebraic_extrapolate(2.0);
  const Integrand right = [n, a](double u) {
    return classical_sequence(Family::kClassicalCauchy, n, u, a);
  };
  const Integrand left = [n, a](double u) {
    return classical_sequence(Family::kClassicalCauchy, n, 2.0 * a - u, a);
  };
  return integrate_semi_infinite(right, a, cfg).value +
         integrate_semi_infinite(left, a, cfg).value;
}

SuiteResult classical_sequences(int threads) {
  RunOptions opt;
  opt.threads = threads;
  const std::array<double, 3> cuts{100, 1000, 10000};
  const std::array<Family, 3> fams{Family::kClassicalGaussian,
                                   Family::kClassicalCauchy,
                                   Family::kClassicalSinc};
  const char* tags[] = {"gaussian", "cauchy", "sinc"};
  bool pass = true;
  std::string detail;
  for (std::size_t i = 0; i < fams.size(); ++i) {
    KernelSpec spec;
    spec.family = fams[i];
    spec.a = 0.5;
    const auto rows =
        run_convergence(spec, test_function("gauss"), 0.5, cuts, opt);
    const bool mono = strictly_decreasing(rows);
    pass = pass && mono;
    if (!detail.empty()) detail += "; ";
    detail += fmt("%s errs %s %s", tags[i], err_list(rows).c_str(),
                  mono ? "decreasing" : "NOT DECREASING");
  }
  double worst_mass = 0.0;
  std::array<double, 3> dev{};
  parallel_for(cuts.size(), threads, [&](std::size_t i) {
    dev[i] = std::abs(cauchy_mass(cuts[i], 0.5) - 1.0);
  });
  for (double d : dev) worst_mass = std::max(worst_mass, d);
  const bool mass_ok = worst_mass <= 1e-10;
  pass = pass && mass_ok;
  detail += fmt("; cauchy |mass-1| max %.2e (<=1e-10 %s)", worst_mass,
                mass_ok ? "yes" : "NO");
  return {"classical-sequences", pass, detail};
}

// ---------------------------------------------------------------------------
// Oscillatory-decay probes.

SuiteResult riemann_lebesgue(int threads) {
  RunOptions opt;
  opt.threads = threads;
  opt.quad = quad_cfg(1e-12, 1e-10);
  struct Probe {
    const char* tag;
    PhaseSpec ps;
    OscPart part;
    const char* tf;
    double lo;
    double hi;
    std::array<double, 4> Rs;
    std::size_t nR;
  };
  const std::array<Probe, 3> probes{
      {{"coulomb/const_one(1,2)/sin",
        {Family::kCoulomb, 0.0, 0, 0.0},
        OscPart::kSinPhase,
        "const_one",
        1.0,
        2.0,
        {25, 50, 100, 200},
        4},
       {"bessel(nu=-1/2)/poly_quad(0,1)/sin",
        {Family::kBesselHankel, -0.5, 0, 0.0},
        OscPart::kSinPhase,
        "poly_quad",
        0.0,
        1.0,
        {12.5, 25, 50, 100},
        4},
       {"bessel(nu=-1/2)/gauss(-8,8)/cos",
        {Family::kBesselHankel, -0.5, 0, 0.0},
        OscPart::kCosPhase,
        "gauss",
        -8.0,
        8.0,
        {2.5, 5, 10, 0},
        3}}};
  bool pass = true;
  std::string detail;
  for (const auto& p : probes) {
    const std::span<const double> Rs(p.Rs.data(), p.nR);
    const auto vals = riemann_lebesgue_check(p.ps, p.part, test_function(p.tf),
                                             p.lo, p.hi, Rs, opt);
    const double ratio = std::abs(vals.back()) / std::abs(vals.front());
    const bool ok = ratio <= 0.2;
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += fmt("%s |I| %.3e -> %.3e, ratio %.2e (<=0.2 %s)", p.tag,
                  std::abs(vals.front()), std::abs(vals.back()), ratio,
                  ok ? "yes" : "NO");
  }
  return {"riemann-lebesgue", pass, detail};
}

// ---------------------------------------------------------------------------
// Dirichlet half-neighbourhood weights.

SuiteResult dirichlet_halves(int threads) {
  struct Ladder {
    const char* tag;
    PhaseSpec ps;
    double a;
    double eta;
  };
  const std::array<Ladder, 3> ladders{
      {{"bessel", {Family::kBesselHankel, 0.0, 0, 0.0}, 1.0, 0.3},
       {"coulomb", {Family::kCoulomb, 0.0, 0, 0.0}, 1.0, 0.2},
       {"airy", {Family::kAiry, 0.0, 0, 0.0}, 0.0, 0.5}}};
  const std::array<double, 3> Rs{50, 100, 200};
  std::array<std::vector<DirichletRow>, 3> rows;
  parallel_for(ladders.size(), threads, [&](std::size_t i) {
    const Ladder& ld = ladders[i];
    const PhaseSpec ps = ld.ps;
    const double a = ld.a;
    const auto diff = [ps, a](double x, double R) {
      return phase(ps, x, R) - phase(ps, a, R);
    };
    rows[i] = dirichlet_limit(diff, a, ld.eta, Rs);
  });
  bool pass = true;
  std::string detail;
  for (std::size_t i = 0; i < ladders.size(); ++i) {
    const auto& last = rows[i].back();
    const double dl = std::abs(last.left - 0.5);
    const double dr = std::abs(last.right - 0.5);
    const bool ok = dl <= 0.05 && dr <= 0.05;
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += fmt("%s at R=%g: left %.4f right %.4f (within 0.05 of 1/2 %s)",
                  ladders[i].tag, last.cutoff, last.left, last.right,
                  ok ? "yes" : "NO");
  }
  return {"dirichlet-halves", pass, detail};
}

// ---------------------------------------------------------------------------
// Fast invariant suites.

SuiteResult quadrature_basics() {
  double worst = 0.0;
  const auto upd = [&](double got, double want) {
    worst = std::max(worst, std::abs(got - want));
  };
  const QuadratureConfig cfg = quad_cfg(1e-12, 1e-12);
  upd(integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0, cfg).value,
      1.0 / 3.0);
  upd(integrate_adaptive([](double x) { return std::sin(x); }, 0.0, PI, cfg)
          .value,
      2.0);
  QuadratureConfig semi = quad_cfg(1e-11, 1e-11);
  semi.tail_policy = TailPolicy::exponential_cut();
  upd(integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0,
                              semi)
          .value,
      1.0);
  QuadratureConfig alg = quad_cfg(1e-10, 1e-10);
  alg.tail_policy = TailPolicy::algebraic_extrapolate(3.0);
  upd(integrate_semi_infinite([](double x) { return std::pow(x, -3.0); }, 1.0,
                              alg)
          .value,
      0.5);
  // Damped oscillation with a closed antiderivative.
  const double b = 0.1, L = 10.0 * PI;
  const double damped = (1.0 - std::exp(-b * L) *
                                   (std::cos(L) + b * std::sin(L))) /
                        (1.0 + b * b);
  upd(integrate_oscillatory(
          [b](double x) { return std::exp(-b * x) * std::sin(x); }, 0.0, L,
          [](double x) { return x; }, quad_cfg(1e-12, 1e-12))
          .value,
      damped);
  const bool pass = worst <= 1e-9;
  return {"quadrature-basics", pass,
          fmt("max deviation %.2e over 5 closed-form integrals (<=1e-9)",
              worst)};
}

SuiteResult bessel_recurrence() {
  double worst = 0.0;
  for (double nu : {0.5, 2.0, 3.5}) {
    for (double t : {0.5, 2.0, 10.0, 40.0, 120.0}) {
      const double jm = bessel_j(nu - 1.0, t).value;
      const double jp = bessel_j(nu + 1.0, t).value;
      const double j0 = bessel_j(nu, t).value;
      const double scale =
          std::max({1e-3, std::abs(jm), std::abs(jp), std::abs(j0)});
      worst = std::max(worst,
                       std::abs(jm + jp - (2.0 * nu / t) * j0) / scale);
    }
  }
  double worst_half = 0.0;
  for (double t : {1.0, 5.0, 25.0, 80.0}) {
    const double closed = std::sqrt(2.0 / (PI * t)) * std::sin(t);
    worst_half =
        std::max(worst_half, std::abs(bessel_j(0.5, t).value - closed));
  }
  const bool pass = worst <= 1e-10 && worst_half <= 1e-12;
  return {"bessel-recurrence", pass,
          fmt("three-term residual %.2e (<=1e-10); J_{1/2} vs "
              "sqrt(2/(pi t)) sin t: %.2e (<=1e-12)",
              worst, worst_half)};
}

SuiteResult airy_identities() {
  // Ai(0) and Ai'(0) in closed Gamma form, then the ODE by finite differences.
  const double ai0 = std::pow(3.0, -2.0 / 3.0) / std::tgamma(2.0 / 3.0);
  const double aip0 = -std::pow(3.0, -1.0 / 3.0) / std::tgamma(1.0 / 3.0);
  const double d0 = std::abs(airy_ai(0.0).value - ai0);
  const double d1 = std::abs(airy_ai_prime(0.0).value - aip0);
  double worst_ode = 0.0, worst_fd = 0.0;
  const double h = 1e-3;
  for (double x : {-8.3, -2.0, 0.7, 4.0}) {
    const double f0 = airy_ai(x).value;
    const double fp = airy_ai(x + h).value;
    const double fm = airy_ai(x - h).value;
    worst_ode = std::max(worst_ode,
                         std::abs((fp - 2.0 * f0 + fm) / (h * h) - x * f0));
    worst_fd = std::max(
        worst_fd, std::abs((fp - fm) / (2.0 * h) - airy_ai_prime(x).value));
  }
  const bool pass =
      d0 <= 1e-14 && d1 <= 1e-14 && worst_ode <= 1e-4 && worst_fd <= 1e-5;
  return {"airy-identities", pass,
          fmt("Ai(0) err %.1e, Ai'(0) err %.1e (<=1e-14); ODE residual %.1e "
              "(<=1e-4); derivative FD check %.1e (<=1e-5)",
              d0, d1, worst_ode, worst_fd)};
}

SuiteResult coulomb_consistency() {
  struct Pt {
    double x;
    int l;
    double r;
  };
  double worst_fd = 0.0;
  const double h = 1e-4;
  for (const Pt& p : {Pt{1.0, 0, 5.0}, Pt{2.5, 1, 12.0}, Pt{0.3, 2, 30.0}}) {
    const double sp = coulomb_s(p.x, p.l, p.r).s_prime;
    const double fd = (coulomb_s(p.x, p.l, p.r + h).s -
                       coulomb_s(p.x, p.l, p.r - h).s) /
                      (2.0 * h);
    worst_fd = std::max(worst_fd, std::abs(sp - fd));
  }
  double worst_norm = 0.0;
  for (const auto& [x, l] : {std::pair<double, int>{1.0, 0}, {2.5, 1}}) {
    const double closed = coulomb_norm_constant(x, l);
    const double measured = deltakern::detail::coulomb_norm_measured(x, l);
    worst_norm = std::max(worst_norm, std::abs(closed / measured - 1.0));
  }
  const bool pass = worst_fd <= 1e-6 && worst_norm <= 1e-8;
  return {"coulomb-consistency", pass,
          fmt("s' vs centered difference: %.1e (<=1e-6); normalization "
              "closed-vs-measured rel dev %.1e (<=1e-8)",
              worst_fd, worst_norm)};
}

SuiteResult weber_consistency() {
  double worst_branch = 0.0;
  bool branch_ok = true;
  for (double a : {-1.5, 0.0, 2.0}) {
    for (double x : {31.0, 40.0, 60.0, -31.0, -45.0}) {
      const EvalResult w = weber_w(a, x);
      const EvalResult ref = weber_w_reference(a, x);
      const double gap = std::abs(w.value - ref.value);
      const double budget =
          w.abs_error_estimate + ref.abs_error_estimate + 1e-12;
      worst_branch = std::max(worst_branch, gap / budget);
      branch_ok = branch_ok && gap <= budget;
    }
  }
  double worst_pack = 0.0, worst_fd = 0.0;
  const double h = 1e-4;
  for (double a : {-1.0, 1.3}) {
    for (double x : {0.8, 4.0, 17.0}) {
      const WeberBoundary bd = weber_w_boundary_reference(a, x);
      worst_pack = std::max(
          worst_pack,
          std::abs(bd.w_plus.value - weber_w_reference(a, x).value));
      worst_pack = std::max(
          worst_pack,
          std::abs(bd.w_minus.value - weber_w_reference(a, -x).value));
      const double fd = (weber_w_reference(a, x + h).value -
                         weber_w_reference(a, x - h).value) /
                        (2.0 * h);
      worst_fd = std::max(worst_fd, std::abs(fd - bd.wp_plus.value));
    }
  }
  const bool pass = branch_ok && worst_pack <= 1e-12 && worst_fd <= 1e-5;
  return {"weber-consistency", pass,
          fmt("branch gap / stated budget max %.2f (<=1); boundary packing "
              "%.1e (<=1e-12); W' vs centered difference %.1e (<=1e-5)",
              worst_branch, worst_pack, worst_fd)};
}

SuiteResult series_identities(unsigned seed) {
  // Order-0 Legendre kernel is identically 1/2.
  KernelSpec leg;
  leg.family = Family::kLegendreSeries;
  leg.n = 0;
  const double d0 = std::abs(series_kernel(leg, 0.1, 0.9) - 0.5);

  RunOptions opt;
  opt.quad = quad_cfg(1e-11, 1e-11);
  const std::array<int, 1> order5{5};
  double worst_mass = 0.0;
  const std::array<std::pair<Family, double>, 3> fams{
      {{Family::kLegendreSeries, 0.3},
       {Family::kHermiteSeries, 0.7},
       {Family::kLaguerreSeries, 1.2}}};
  for (const auto& [fam, x] : fams) {
    KernelSpec spec;
    spec.family = fam;
    const auto rows = run_series_convergence(spec, test_function("const_one"),
                                             x, order5, opt);
    worst_mass = std::max(worst_mass, rows.back().abs_error);
  }

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dn(1, 20);
  std::uniform_real_distribution<double> dt(-0.99, 0.99);
  double worst_cd = 0.0;
  std::vector<double> pt, px;
  for (int i = 0; i < 10; ++i) {
    const int n = dn(rng);
    const double t = dt(rng);
    double x = dt(rng);
    while (std::abs(t - x) < 1e-2) x = dt(rng);
    KernelSpec spec;
    spec.family = Family::kLegendreSeries;
    spec.n = n;
    legendre_p_all(n + 1, t, pt);
    legendre_p_all(n + 1, x, px);
    const double cd = 0.5 * (n + 1) *
                      (pt[n + 1] * px[n] - pt[n] * px[n + 1]) / (t - x);
    worst_cd = std::max(worst_cd, std::abs(series_kernel(spec, t, x) - cd));
  }
  const bool pass = d0 <= 1e-15 && worst_mass <= 1e-9 && worst_cd <= 1e-10;
  return {"series-identities", pass,
          fmt("order-0 kernel dev %.1e (<=1e-15); unit mass err %.1e "
              "(<=1e-9); CD err %.1e (<=1e-10)",
              d0, worst_mass, worst_cd)};
}

SuiteResult spherical_identities(unsigned seed) {
  // Order-0 closure kernel is sin(theta2)/(4 pi) independent of the angles.
  double d0 = 0.0;
  for (const auto& [t1, p1, t2, p2] :
       {std::array<double, 4>{0.4, -1.0, 2.2, 0.3},
        {1.3, 2.9, 0.6, -2.0},
        {2.8, 0.0, 1.0, 1.0}}) {
    d0 = std::max(d0, std::abs(spherical_kernel(0, t1, p1, t2, p2) -
                               std::sin(t2) / (4.0 * PI)));
  }
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dth(0.02, PI - 0.02);
  std::uniform_real_distribution<double> dph(-PI, PI);
  double worst = 0.0;
  for (int pair = 0; pair < 20; ++pair) {
    const double th1 = dth(rng), th2 = dth(rng);
    const double ph1 = dph(rng), ph2 = dph(rng);
    double cg = std::cos(th1) * std::cos(th2) +
                std::sin(th1) * std::sin(th2) * std::cos(ph1 - ph2);
    cg = std::clamp(cg, -1.0, 1.0);
    for (int k = 0; k <= 5; ++k) {
      std::complex<double> lhs{0.0, 0.0};
      for (int m = -k; m <= k; ++m) {
        lhs += spherical_harmonic(k, m, th1, ph1) *
               std::conj(spherical_harmonic(k, m, th2, ph2));
      }
      const double rhs = (2.0 * k + 1.0) / (4.0 * PI) * legendre_p(k, cg);
      worst = std::max(worst, std::abs(lhs - std::complex<double>{rhs, 0.0}));
    }
  }
  const bool pass = d0 <= 1e-15 && worst <= 1e-12;
  return {"spherical-identities", pass,
          fmt("order-0 kernel dev %.1e (<=1e-15); addition theorem dev %.1e "
              "over 20 pairs k<=5 (<=1e-12)",
              d0, worst)};
}

SuiteResult phase_identities() {
  double worst = 0.0;
  // Bessel phase is linear in the cutoff at fixed x.
  const PhaseSpec bs{Family::kBesselHankel, 1.5, 0, 0.0};
  worst = std::max(worst, std::abs((phase(bs, 2.0, 7.0) - phase(bs, 2.0, 3.0)) -
                                   2.0 * 4.0));
  // Airy phase at t + x = 1 collapses to 2/3 + pi/4.
  const PhaseSpec as{Family::kAiry, 0.0, 0, 0.0};
  worst = std::max(worst,
                   std::abs(phase(as, 0.0, 1.0) - (2.0 / 3.0 + PI / 4.0)));
  // Weber phase at a = 0: x^2/4 + pi/4 (arg Gamma(1/2) = 0).
  const PhaseSpec ws{Family::kWeber, 0.0, 0, 0.0};
  for (double x : {2.0, 7.0}) {
    worst = std::max(worst,
                     std::abs(phase(ws, 0.0, x) - (x * x / 4.0 + PI / 4.0)));
  }
  // Coulomb split is an exact identity.
  const PhaseSpec cs{Family::kCoulomb, 0.0, 2, 0.0};
  for (double x : {0.4, 1.0, 3.0}) {
    for (double r : {2.0, 20.0, 150.0}) {
      worst = std::max(worst, std::abs(phase(cs, x, r) -
                                       (coulomb_phase_bar(x, r) +
                                        coulomb_phase_theta(x, 2))));
    }
  }
  const bool pass = worst <= 1e-12;
  return {"phase-identities", pass,
          fmt("max identity deviation %.2e (<=1e-12)", worst)};
}

SuiteResult catalog_enforcement() {
  std::string bad;
  const auto expect = [&](bool cond, const char* what) {
    if (!cond) {
      if (!bad.empty()) bad += ", ";
      bad += what;
    }
  };
  const TestFunction& exp_decay = test_function("exp_decay");
  const TestFunction& gauss = test_function("gauss");
  const TestFunction& const_one = test_function("const_one");
  const TestFunction& step_decay = test_function("step_decay");
  expect(exp_decay.has(TheoremFlag::kThm1i) &&
             exp_decay.has(TheoremFlag::kThm2) &&
             exp_decay.has(TheoremFlag::kThm3) &&
             !exp_decay.has(TheoremFlag::kThm4),
         "exp_decay flags");
  expect(gauss.has(TheoremFlag::kThm1i) && gauss.has(TheoremFlag::kThm1ii) &&
             gauss.has(TheoremFlag::kThm1iiPrime) &&
             gauss.has(TheoremFlag::kThm2) && gauss.has(TheoremFlag::kThm3) &&
             gauss.has(TheoremFlag::kThm4),
         "gauss flags");
  expect(!const_one.has(TheoremFlag::kThm1i) &&
             const_one.has(TheoremFlag::kThm1ii) &&
             !const_one.has(TheoremFlag::kThm2) &&
             !const_one.has(TheoremFlag::kThm4),
         "const_one flags");
  const auto [lv, rv] = step_decay.one_sided(1.0);
  expect(std::abs(lv - std::exp(-1.0)) <= 1e-15 && rv == 0.0,
         "step_decay one-sided values");

  // Hypothesis enforcement: running a kernel against a function missing its
  // required certified flag must refuse up front.
  KernelSpec bess;
  bess.family = Family::kBesselHankel;
  bess.a = 1.0;
  const std::array<double, 2> cuts{10, 20};
  bool threw = false;
  try {
    run_convergence(bess, const_one, 1.0, cuts, {});
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  expect(threw, "bessel+const_one refusal");
  KernelSpec web;
  web.family = Family::kWeber;
  web.a = 0.0;
  threw = false;
  try {
    run_convergence(web, exp_decay, 1.0, cuts, {});
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  expect(threw, "weber+exp_decay refusal");
  const std::array<double, 2> flat{10, 10};
  threw = false;
  try {
    run_convergence(bess, test_function("gauss"), 1.0, flat, {});
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  expect(threw, "non-increasing cutoff refusal");
  return {"catalog-enforcement", bad.empty(),
          bad.empty() ? std::string("flags, one-sided values, and refusal "
                                    "paths all as certified")
                      : "unexpected: " + bad};
}

SuiteResult classical_invariants() {
  double worst = 0.0;
  // Peak values and the removable sinc diagonal.
  const double n = 7.0, a = 0.4;
  worst = std::max(
      worst, std::abs(classical_sequence(Family::kClassicalGaussian, n, a, a) -
                      std::sqrt(n / PI)));
  worst = std::max(
      worst, std::abs(classical_sequence(Family::kClassicalCauchy, n, a, a) -
                      n / PI));
  worst = std::max(
      worst, std::abs(classical_sequence(Family::kClassicalSinc, n, a, a) -
                      n / PI));
  worst = std::max(
      worst,
      std::abs(classical_sequence(Family::kClassicalSinc, n, a + 1e-9, a) -
               n / PI));
  const double mass_dev = std::abs(cauchy_mass(10.0, 0.0) - 1.0);

  // Pure Dirichlet half-weights: phase difference R(x - a).
  const std::array<double, 2> Rs{40, 80};
  const auto rows = dirichlet_limit(
      [](double x, double R) { return R * x; }, 0.0, 1.25, Rs);
  const double dl = std::abs(rows.back().left - 0.5);
  const double dr = std::abs(rows.back().right - 0.5);
  const bool pass = worst <= 1e-10 && mass_dev <= 1e-9 && dl <= 0.05 &&
                    dr <= 0.05;
  return {"classical-invariants", pass,
          fmt("peak/diagonal dev %.1e (<=1e-10); cauchy |mass-1| %.1e "
              "(<=1e-9); dirichlet halves off by %.4f/%.4f at R*eta=100 "
              "(<=0.05)",
              worst, mass_dev, dl, dr)};
}

}  // namespace

std::vector<SuiteResult> run_fast(int threads, unsigned seed) {
  std::vector<SuiteResult> out;
  out.push_back(guarded("quadrature-basics", [&] { return quadrature_basics(); }));
  out.push_back(guarded("bessel-recurrence", [&] { return bessel_recurrence(); }));
  out.push_back(guarded("airy-identities", [&] { return airy_identities(); }));
  out.push_back(
      guarded("coulomb-consistency", [&] { return coulomb_consistency(); }));
  out.push_back(
      guarded("weber-consistency", [&] { return weber_consistency(); }));
  out.push_back(guarded("oracle-spot", [&] {
    return oracle_equivalence("oracle-spot", threads, seed + 1, 6, 5.0, 10.0);
  }));
  out.push_back(
      guarded("series-identities", [&] { return series_identities(seed); }));
  out.push_back(guarded("spherical-identities",
                        [&] { return spherical_identities(seed); }));
  out.push_back(guarded("phase-identities", [&] { return phase_identities(); }));
  out.push_back(
      guarded("catalog-enforcement", [&] { return catalog_enforcement(); }));
  out.push_back(
      guarded("classical-invariants", [&] { return classical_invariants(); }));
  return out;
}

std::vector<SuiteResult> run_full(int threads, unsigned seed) {
  std::vector<SuiteResult> out;
  out.push_back(guarded("oracle-equivalence", [&] {
    return oracle_equivalence("oracle-equivalence", threads, seed, 20, 5.0,
                              20.0);
  }));
  out.push_back(
      guarded("bessel-convergence", [&] { return bessel_convergence(threads); }));
  out.push_back(
      guarded("airy-convergence", [&] { return airy_convergence(threads); }));
  out.push_back(guarded("coulomb-convergence",
                        [&] { return coulomb_convergence(threads); }));
  out.push_back(guarded("weber-ratio", [&] { return weber_ratio(threads); }));
  out.push_back(guarded("series-exactness",
                        [&] { return series_exactness(threads, seed); }));
  out.push_back(
      guarded("spherical-addition", [&] { return spherical_addition(seed); }));
  out.push_back(
      guarded("tail-asymptotics", [&] { return tail_asymptotics(threads); }));
  out.push_back(guarded("classical-sequences",
                        [&] { return classical_sequences(threads); }));
  out.push_back(
      guarded("riemann-lebesgue", [&] { return riemann_lebesgue(threads); }));
  out.push_back(
      guarded("dirichlet-halves", [&] { return dirichlet_halves(threads); }));
  return out;
}

}  // namespace deltakern::selftest
