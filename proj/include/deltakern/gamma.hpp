#ifndef DELTAKERN_GAMMA_HPP
#define DELTAKERN_GAMMA_HPP

#include <complex>

namespace deltakern {

// log Gamma(z) for Re z > 0, continuous branch (agrees with the real
// log-gamma on the positive axis). Stirling series after shifting
// Re z above 9; good to ~1e-14 relative there.
std::complex<double> log_gamma(std::complex<double> z);

// arg Gamma(z) = Im log Gamma(z), principal/continuous branch. This is the
// Coulomb-phase constant arg Gamma(l+1 - i/k) and the Weber constant
// arg Gamma(1/2 + i a).
double arg_gamma(std::complex<double> z);

}  // namespace deltakern

#endif
