#pragma once

#include <algorithm>
#include <cmath>

#include "deltakern/common.hpp"

namespace deltakern {

// Regular radial Coulomb-attractive wave s(x, l; r): the solution of
//   s'' + (x + 2/r - l(l+1)/r^2) s = 0,   s ~ r^{l+1} as r -> 0,
// normalized so the large-r envelope is pi^{-1/2} x^{-1/4} (equivalently
// s(r) = pi^{-1/2} x^{-1/4} F_l(-1/sqrt(x), sqrt(x) r) in terms of the
// standard regular Coulomb function).
//
// Evaluation: power series about r = 0 up to a wavelength-scaled start
// radius, then an adaptive Dormand-Prince 5(4) integration.  The
// normalization constant is the closed Gamma-function form of the small-r
// coefficient (DLMF 33.2.5/33.2.6), assembled in log space so attractive
// small-x cases neither overflow nor cancel.
struct CoulombEval {
  double s;        // value
  double s_prime;  // d/dr
};

CoulombEval coulomb_s(double x, int l, double r);

// The scale factor mapping the raw (c_0 = 1) series solution onto the
// envelope normalization.  Exposed for tests.
double coulomb_norm_constant(double x, int l);

namespace detail {
// Independent normalization measurement: averages the WKB envelope
// A = sqrt(zeta_r s^2 + s'^2/zeta_r), zeta_r = sqrt(x + 2/r - l(l+1)/r^2),
// over one oscillation at a large radius; two successive period averages
// must agree to 1e-6 or a NumericalError is thrown.  Far slower than the
// closed form; tests use it to confirm coulomb_norm_constant rather than
// trust the Gamma identity blindly.
double coulomb_norm_measured(double x, int l);

// Radius at which the envelope is extracted.  The period-averaged amplitude
// still carries a ~0.27/(r^3 x^2) WKB remainder, so the radius grows like
// k^{-4/3} to pin the normalization near 1e-10 relative.
inline double coulomb_norm_radius(double k) {
  return std::max({200.0, 120.0 / k, 1400.0 / std::pow(k, 4.0 / 3.0)});
}
}  // namespace detail

}  // namespace deltakern
