#pragma once

#include <functional>
#include <span>
#include <vector>

#include "deltakern/kernels.hpp"

namespace deltakern {

// Large-argument phase bookkeeping for the four integral families, plus
// validators that measure — not assume — how fast each computed function
// settles onto its leading envelope * sinusoid form.

// Phase parameters. Only the field matching the family is read:
// nu for Bessel, l for Coulomb, a for Weber; Airy needs none.
struct PhaseSpec {
  Family family = Family::kBesselHankel;
  double nu = 0.0;
  int l = 0;
  double a = 0.0;
};

// Leading-order phase zeta(x_or_a, t_or_R):
//   Bessel   x R - nu pi/2 - pi/4                      (x_or_a = x, t_or_R = R)
//   Coulomb  k r + (1/k) ln(2 k r) - l pi/2
//              + arg Gamma(l+1 - i/k),  k = sqrt(x)    (x_or_a = x, t_or_R = r)
//   Airy     (2/3)(t + x)^{3/2} + pi/4                 (x_or_a = x, t_or_R = t)
//   Weber    x^2/4 - a ln x + arg Gamma(1/2 + i a)/2
//              + pi/4                                  (x_or_a = a, t_or_R = x)
// Throws std::domain_error when the second argument leaves the family's
// oscillatory domain (t_or_R <= 0, or t + x <= 0 for Airy).
double phase(const PhaseSpec& spec, double x_or_a, double t_or_R);

// d(phase)/d(t_or_R). Used to locate sampling points and to partition
// oscillatory integrands into arches.
double phase_rate(const PhaseSpec& spec, double x_or_a, double t_or_R);

// Coulomb phase split into an x-smooth cutoff part and an r-free offset:
//   zeta = coulomb_phase_bar(x, r) + coulomb_phase_theta(x, l)
//   bar   = sqrt(x) r + (1/sqrt(x)) ln r
//   theta = (1/sqrt(x)) ln(2 sqrt(x)) - l pi/2 + arg Gamma(l+1 - i/sqrt(x))
// The split is an exact identity, not an approximation.
double coulomb_phase_bar(double x, double r);
double coulomb_phase_theta(double x, int l);

// Decay order of the residual after the leading form is divided out:
// Bessel -1, Coulomb -1, Airy -3/2, Weber -1.
double expected_residual_exponent(Family family);

struct AsymptoticReport {
  Family family = Family::kBesselHankel;
  std::vector<double> t_samples;   // sampling abscissae, increasing
  std::vector<double> residuals;   // |computed/envelope - sinusoid| at each t
  double fitted_exponent = 0.0;    // least-squares slope of log|res| vs log t
  double expected_exponent = 0.0;
  bool pass = false;  // |fitted - expected| <= 0.3 and residuals decreasing
};

// Samples the relative residual of the leading asymptotic form across
// [t_lo, t_hi] (one decade is the intended span) and fits its decay order.
// x is the fixed spatial argument for Bessel/Coulomb/Airy and is ignored
// for Weber, whose parameter a rides in spec.a. Sampling points sit where
// the quadrature complement of the sinusoid peaks, so the leading residual
// component is read off cleanly instead of averaged against its own zeros.
// Throws NumericalError if fewer than 5 usable samples survive.
AsymptoticReport validate_asymptotic(const PhaseSpec& spec, double x,
                                     double t_lo, double t_hi);

struct DirichletRow {
  double cutoff = 0.0;
  double left = 0.0;   // integral over (a - eta, a)
  double right = 0.0;  // integral over (a, a + eta)
};

// Evaluates, for each cutoff R in R_list, the two half-neighbourhood
// integrals of sin(phase_diff(x, R)) / (pi (x - a)) about the anchor a.
// phase_diff is the family's zeta(x; R) - zeta(a; R); each half must
// approach 1/2 as R grows for the kernel to weight a jump symmetrically.
std::vector<DirichletRow> dirichlet_limit(
    const std::function<double(double, double)>& phase_diff, double a,
    double eta, std::span<const double> R_list);

}  // namespace deltakern
