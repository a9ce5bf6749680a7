#pragma once

#include "deltakern/common.hpp"

namespace deltakern {

// Weber parabolic-cylinder function W(a, x) and d/dx W(a, x) for |a| <= 5,
// the solution pair of w'' + (x^2/4 - a) w = 0 with the standard
// normalization (DLMF 12.14): as x -> +infinity
//   W(a, x)  ~ sqrt(2 k_a / x) cos(zeta),
//   W(a, -x) ~ sqrt(2 / (k_a x)) sin(zeta),
//   zeta = x^2/4 - a ln x + arg Gamma(1/2 + i a)/2 + pi/4,
//   k_a = sqrt(1 + e^{2 pi a}) - e^{pi a}.
//
// Route for |x| <= 30: the connection to U(i a, x e^{-i pi/4}) evaluated
// through the Laplace-type integral U(b, z) = e^{-z^2/4}/Gamma(1/2 + b) *
// 2 Int_0^inf e^{-z u^2 - u^4/2} u^{2b} du (DLMF 12.5.1 with t = u^2).
// The log-oscillation of u^{2ia} near u = 0 is handled by a Taylor section
// with exact complex moments; the rest by phase-bounded Gauss panels.
// |x| > 30: leading-order asymptotics above, with an honestly reported
// O(x^{-2}) envelope-relative error.
EvalResult weber_w(double a, double x);
EvalResult weber_w_prime(double a, double x);

// Integral-route evaluation regardless of |x| (the branch switch is bypassed).
// Serves as the high-accuracy reference wherever the public function has
// degraded to the leading-order form: kernel assembly, asymptotic-residual
// measurements, and branch-seam tests.
EvalResult weber_w_reference(double a, double x);
EvalResult weber_w_prime_reference(double a, double x);

// All four boundary values W(a, x), W(a, -x), W'(a, x), W'(a, -x) for one
// x >= 0 from a single integral-route evaluation (the route computes both
// sides at once).  Kernel assembly calls this once per parameter value.
struct WeberBoundary {
  EvalResult w_plus;    // W(a, x)
  EvalResult w_minus;   // W(a, -x)
  EvalResult wp_plus;   // W'(a, x)
  EvalResult wp_minus;  // W'(a, -x)
};
WeberBoundary weber_w_boundary_reference(double a, double x);

// k_a evaluated without cancellation for a > 0.
double weber_k(double a);

namespace detail {
inline constexpr double kWeberAsymptoticMinX = 30.0;
}

}  // namespace deltakern
