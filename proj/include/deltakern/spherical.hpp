#pragma once

#include <complex>
#include <vector>

#include "deltakern/common.hpp"

namespace deltakern {

// Spherical harmonics Y_k^l(theta, phi) with the Condon-Shortley phase,
// orthonormal over the sphere with measure sin(theta) dtheta dphi.
// Requires 0 <= theta <= pi and |l| <= k.
std::complex<double> spherical_harmonic(int k, int l, double theta, double phi);

// Closure sum  Sum_{k=0}^{n} Sum_{l=-k}^{k} Y_k^l(th1,ph1) conj(Y_k^l(th2,ph2)).
// Accumulated in complex arithmetic; the imaginary residue must cancel to
// rounding noise (|imag| <= 1e-12 * max(1, |real|)) or a NumericalError is
// thrown.  The real part is returned.
double spherical_closure_sum(int n, double theta1, double phi1, double theta2,
                             double phi2);

// Fully normalized associated Legendre Ptilde_k^m(cos theta) for m >= 0,
// i.e. Y_k^m = Ptilde_k^m(cos theta) e^{i m phi}.  Fills out[k - m] for
// k = m..n.  Exposed for the addition-theorem and closure tests.
void normalized_assoc_legendre_all(int n, int m, double theta,
                                   std::vector<double>& out);

}  // namespace deltakern
