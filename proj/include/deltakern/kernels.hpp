#pragma once
// Partial-integral kernels delta_R(x, a) in closed form, truncated series
// kernels delta_n(t, x), and the classical delta sequences.
//
// Each integral-family kernel is the boundary term of the Wronskian identity
// for its Sturm-Liouville pair: the defining integral over (0,R), (-R,inf),
// or (-R,R) collapses to function/derivative values at the cutoff.  The
// off-diagonal forms are 0/0 at x = a; below diagonal_switch(a) a dedicated
// diagonal branch (exact limit or symmetric finite difference) is blended in.

#include <string>

#include "deltakern/common.hpp"

namespace deltakern {

enum class Family {
  kBesselHankel,
  kCoulomb,
  kAiry,
  kWeber,
  kLegendreSeries,
  kHermiteSeries,
  kLaguerreSeries,
  kSphericalSeries,
  kClassicalGaussian,
  kClassicalCauchy,
  kClassicalSinc,
};

// Lowercase tag used by the CLI, config files, and CSV/JSON output.
const char* family_name(Family family);
// Inverse of family_name; throws std::invalid_argument for unknown tags.
Family family_from_name(const std::string& name);

bool family_is_integral(Family family);
bool family_is_series(Family family);
bool family_is_classical(Family family);

struct KernelSpec {
  Family family = Family::kBesselHankel;

  // Family parameters.
  double nu = 0.0;     // BesselHankel order, nu > -1
  int l = 0;           // Coulomb angular momentum, l >= 0
  double alpha = 0.0;  // LaguerreSeries weight exponent, alpha > -1

  // Cutoff: R for integral families (and the real index of a classical
  // sequence), n for series families.
  double R = 0.0;
  int n = 0;

  // Anchor: the point a, or the angle pair (theta1, phi1) for SphericalSeries.
  double a = 0.0;
  double theta1 = 0.0;
  double phi1 = 0.0;

  // Throws std::domain_error when a field violates its family's constraints.
  void validate() const;

  // Family parameters only, e.g. "nu=0.5", "l=2", "alpha=0"; "" when none.
  std::string params_string() const;
};

struct KernelValue {
  double value = 0.0;
  bool near_diagonal = false;  // diagonal/blended limit branch was used
  double abs_error_estimate = 0.0;
};

// delta_R(x, a) = x * int_0^R J_nu(x t) J_nu(a t) t dt in closed form:
//   x/(x^2-a^2) * [aR J_nu(xR) J'_nu(aR) - xR J_nu(aR) J'_nu(xR)],
// diagonal (Lommel) form x R^2/2 [J'_nu(aR)^2 + (1 - nu^2/(aR)^2) J_nu(aR)^2].
KernelValue bessel_kernel_closed(const KernelSpec& spec, double x);

// delta_R(x, a) = int_0^R s(x,l;r) s(a,l;r) dr
//              = [s(x,l;R) s'(a,l;R) - s'(x,l;R) s(a,l;R)] / (x - a),
// ' = d/dr; diagonal branch by symmetric finite difference of the numerator.
KernelValue coulomb_kernel_closed(const KernelSpec& spec, double x);

// delta_R(x, a) = int_{-R}^inf Ai(t-x) Ai(t-a) dt
//              = [Ai'(-R-x) Ai(-R-a) - Ai(-R-x) Ai'(-R-a)] / (x - a),
// oriented so the diagonal limit Ai'(s)^2 - s Ai(s)^2 at s = -R-a (positive
// for s < 0) matches the defining integral; diagonal uses that exact form.
KernelValue airy_kernel_closed(const KernelSpec& spec, double x);

// delta_R(a, b) = int_{-R}^R W(a,x) W(b,x) dx
//              = [W(a,x)W'(b,x) - W'(a,x)W(b,x)]/(b-a) at x=R minus at x=-R,
// evaluated through the integral-representation route of weber_w so the
// closed form tracks the defining integral at all cutoffs; diagonal branch
// by symmetric finite difference in b.
KernelValue weber_kernel_closed(const KernelSpec& spec, double b);

// Dispatch over the four integral families; x_or_b is x (b for Weber).
KernelValue kernel_closed(const KernelSpec& spec, double x_or_b);

// Truncated series kernels delta_n(t, x), n = spec.n:
//   Legendre: sum_{k<=n} (k+1/2) P_k(t) P_k(x),            t, x in [-1,1]
//   Hermite:  e^{-t^2} sum_{k<=n} H_k(t)H_k(x)/(2^k k! sqrt(pi))
//   Laguerre: e^{-t} t^alpha sum_{k<=n} k!/Gamma(k+alpha+1) L_k(t)L_k(x)
// Hermite/Laguerre sums accumulate weighted (scaled) recurrences so large
// t never forms e^{t^2/2}-sized intermediates.
double series_kernel(const KernelSpec& spec, double t, double x);

// sin(theta2) * sum_{k<=n} sum_{l=-k}^k Y_kl(theta1,phi1) conj(Y_kl(theta2,phi2));
// the imaginary residue must stay below 1e-12 of the real part (checked).
double spherical_kernel(int n, double theta1, double phi1, double theta2,
                        double phi2);

// Classical sequences, real n > 0:
//   gaussian sqrt(n/pi) e^{-n(x-a)^2}; cauchy (n/pi)/(1+n^2(x-a)^2);
//   sinc sin(n(x-a))/(pi(x-a)) with the continuous value n/pi at x = a.
double classical_sequence(Family kind, double n, double x, double a);

namespace detail {

// |x - a| below this uses the blended diagonal branch.
double diagonal_switch(double a);

// Brute-force adaptive quadrature of the defining integral; the test oracle
// for the closed forms.  Slow; not used by any production path.
double kernel_bruteforce(const KernelSpec& spec, double x_or_b,
                         double abs_tol);

}  // namespace detail

}  // namespace deltakern
