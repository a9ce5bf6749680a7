#ifndef DELTAKERN_QUADRATURE_HPP
#define DELTAKERN_QUADRATURE_HPP

#include <functional>
#include <span>

namespace deltakern {

struct TailPolicy {
  enum class Kind {
    exponential_cut,       // param = magnitude threshold for locating the cut
    algebraic_extrapolate  // param = algebraic decay exponent p (f ~ C x^-p)
  };
  Kind kind = Kind::exponential_cut;
  double param = 1e-14;

  static TailPolicy exponential_cut(double threshold = 1e-14) {
    return {Kind::exponential_cut, threshold};
  }
  static TailPolicy algebraic_extrapolate(double exponent) {
    return {Kind::algebraic_extrapolate, exponent};
  }
};

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 10000;
  TailPolicy tail_policy{};
};

struct IntegralResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int subdivisions_used = 0;
  bool converged = false;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod 7-15 bisection over [lo, hi]. Every breakpoint in
// `breakpoints` that falls strictly inside the interval becomes a panel
// boundary, so no panel ever straddles one. Panels are refined worst-first;
// the final value is a compensated sum over panels ordered by left endpoint,
// so the result does not depend on refinement order.
IntegralResult integrate_adaptive(const Integrand& f, double lo, double hi,
                                  const QuadratureConfig& cfg = {},
                                  std::span<const double> breakpoints = {});

// Integral over [lo, inf). The upper cut T is chosen per cfg.tail_policy:
//   exponential_cut: T doubles until |f| is below the threshold and an
//     exponential tail estimate (decay rate fitted from two samples) is
//     below abs_tol/2;
//   algebraic_extrapolate: tail estimated as |f(T)| T/(p-1).
// The tail estimate is folded into abs_error_estimate.
IntegralResult integrate_semi_infinite(const Integrand& f, double lo,
                                       const QuadratureConfig& cfg = {});

// Oscillatory integral: partitions [lo, hi] at the points where `phase`
// crosses integer multiples of pi (phase must be increasing), integrates
// each arch adaptively and sums arches with compensated accumulation.
IntegralResult integrate_oscillatory(const Integrand& f, double lo, double hi,
                                     const std::function<double(double)>& phase,
                                     const QuadratureConfig& cfg = {});

}  // namespace deltakern

#endif
