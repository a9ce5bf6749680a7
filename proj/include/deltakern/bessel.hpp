#ifndef DELTAKERN_BESSEL_HPP
#define DELTAKERN_BESSEL_HPP

#include "deltakern/common.hpp"

namespace deltakern {

// Bessel function of the first kind J_nu(t), nu > -1, t >= 0.
//
// Branches: ascending series (long double accumulation) for t <= 12,
// Hankel-type expansion once its optimally truncated tail is negligible
// (t >= max(12, nu^2/4 + 8)), and the cosine integral representation
// (DLMF 10.9.5) in between, where the series cancels catastrophically for
// larger orders. Accuracy is ~1e-12 relative to the envelope sqrt(2/(pi t)).
EvalResult bessel_j(double nu, double t);

// d/dt J_nu(t). Series branch differentiates term-wise; elsewhere uses the
// recurrences J'_nu = (J_{nu-1} - J_{nu+1})/2 (nu >= 1) and
// J'_nu = (nu/t) J_nu - J_{nu+1}, or the derivative Hankel expansion.
EvalResult bessel_j_prime(double nu, double t);

namespace detail {
// Branch boundaries, exposed for the branch-agreement tests.
double bessel_asymptotic_min_t(double nu);
inline constexpr double kBesselSeriesMaxT = 12.0;
}  // namespace detail

}  // namespace deltakern

#endif
