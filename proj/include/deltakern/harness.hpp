#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "deltakern/asymptotics.hpp"
#include "deltakern/kernels.hpp"
#include "deltakern/quadrature.hpp"

namespace deltakern {

// Convergence experiments: integrate each delta family against catalogued
// test functions and record how the half-sum target is approached.

// Hypothesis tags a test function can carry.  Every flag is certified by
// numerically probing the corresponding integral when the catalog is built
// (tail/edge ladders with a geometric-ratio convergence test), never by
// assumption:
//   kThm1i       int_1^inf x^{-1/2} |phi| dx
//   kThm1ii      int_0^1   x^{+1/2} |phi| dx          (nu >= -1/2)
//   kThm1iiPrime int_0^1   x^{nu+1} |phi| dx, certified at the worst
//                admissible power nu+1 -> 0            (-1 < nu < -1/2)
//   kThm2        int_0^1 x^{-1/4}|phi| dx  and  int_1^inf x^{-3/4}|phi| dx
//   kThm3        int_{|x|>=1} |x|^{-3/4}|phi| dx, both sides
//   kThm4        int_{-inf}^{-1}|phi| e^{pi|x|/4} dx/|x|  and
//                int_1^inf |phi| e^{5 pi x/4} dx/x
enum class TheoremFlag : unsigned {
  kThm1i = 1u << 0,
  kThm1ii = 1u << 1,
  kThm1iiPrime = 1u << 2,
  kThm2 = 1u << 3,
  kThm3 = 1u << 4,
  kThm4 = 1u << 5,
};

struct TestFunction {
  struct Piece {
    double lo = 0.0;
    double hi = 0.0;
    std::function<double(double)> f;  // smooth on [lo, hi]
  };

  std::string id;
  double domain_lo = 0.0;  // -inf allowed
  double domain_hi = 0.0;  // +inf allowed
  std::vector<Piece> pieces;        // ordered, abutting
  std::vector<double> breakpoints;  // interior piece joints (jumps or kinks)
  unsigned flags = 0;

  // Radius X with the |x| > X remainder of int |phi| below eps; effectively
  // infinite for functions without usable decay.
  std::function<double(double)> trunc_radius;

  // 0 outside the domain (functions on a sub-domain extend by zero).
  double operator()(double x) const;
  // One-sided limits (phi(a-), phi(a+)) at any interior point; they differ
  // only at a jump breakpoint.
  std::pair<double, double> one_sided(double a) const;
  bool has(TheoremFlag f) const {
    return (flags & static_cast<unsigned>(f)) != 0;
  }
};

// The certified catalog: exp_decay, gauss, step_decay (jump at 1),
// power_edge, bounded_compact, gauss_narrow, const_one, poly_quad,
// sign_step.  Built and certified once per process.
const std::vector<TestFunction>& catalog();
// Lookup by id; throws std::invalid_argument for unknown ids.
const TestFunction& test_function(const std::string& id);

struct ConvergenceRecord {
  KernelSpec kernel;             // family/params with this row's cutoff set
  std::string test_function_id;
  double anchor = 0.0;
  double cutoff = 0.0;           // R for integral/classical, n for series
  double computed = 0.0;
  double target = 0.0;           // half-sum of one-sided values
  double abs_error = 0.0;        // |computed - target|
  double wall_time_ms = 0.0;
  bool quad_converged = true;    // outer quadrature health, non-fatal
};

struct RunOptions {
  QuadratureConfig quad{1e-9, 1e-9, 10000, TailPolicy{}};
  int threads = 1;  // rows run concurrently when > 1
};

// The flags a kernel's theorem demands of its test function (Bessel selects
// (ii) or (ii') by nu; classical families demand none).
unsigned required_flags(const KernelSpec& spec);

// Theorem 4's printed normalization constant pi sqrt(1 + e^{2 pi a}).
double weber_theorem_constant(double a);

// Integrates phi against the family's delta kernel for each cutoff in
// `cutoffs` (strictly increasing) and records the approach to the half-sum
// target.  The outer integral runs over the theorem's interval intersected
// with phi's domain, truncated by phi's decay with budget well under the
// desk-scale errors; panels within |x - a| <= 10 pi/R are capped at width
// pi/(4R), and the oscillatory far field is partitioned by the family phase.
// Weber rows divide the computed integral by weber_theorem_constant(a)
// before differencing against the half-sum target.
// Throws std::invalid_argument when phi lacks the required certified flag
// (hypothesis enforcement) or the anchor is not interior to phi's domain;
// quadrature trouble is recorded per row, not thrown.
std::vector<ConvergenceRecord> run_convergence(const KernelSpec& base,
                                               const TestFunction& phi,
                                               double a,
                                               std::span<const double> cutoffs,
                                               const RunOptions& opt = {});

// Series analogue over expansion orders n: integrates f against the
// Legendre/Hermite/Laguerre degree-n kernel.  Square-integrability against
// the family weight is certified numerically before running.
std::vector<ConvergenceRecord> run_series_convergence(
    const KernelSpec& base, const TestFunction& f, double x,
    std::span<const int> orders, const RunOptions& opt = {});

// Iterated two-angle integral of the spherical closure kernel against a
// continuous f(theta, phi); target is f(theta1, phi1).
std::vector<ConvergenceRecord> run_spherical_convergence(
    const std::function<double(double, double)>& f, const std::string& f_id,
    double theta1, double phi1, std::span<const int> orders,
    const RunOptions& opt = {});

enum class OscPart { kSinPhase, kCosPhase };

// Oscillatory-decay probe: returns int psi(x) g(x, R) dx for each R, where
// g is sin or cos of the family phase.  The values must tend to zero for
// integrable psi; callers assert the decay they expect.
std::vector<double> riemann_lebesgue_check(const PhaseSpec& phase_spec,
                                           OscPart part,
                                           const TestFunction& psi, double lo,
                                           double hi,
                                           std::span<const double> R_list,
                                           const RunOptions& opt = {});

}  // namespace deltakern
