#include "deltakern/gamma.hpp"

#include <cmath>
#include <stdexcept>

namespace deltakern {

std::complex<double> log_gamma(std::complex<double> z) {
  if (!(z.real() > 0.0)) {
    throw std::domain_error("log_gamma: requires Re z > 0");
  }
  // Shift into the Stirling region, log Gamma(z) = log Gamma(z+1) - log z.
  std::complex<double> shift(0.0, 0.0);
  while (z.real() < 9.0) {
    shift -= std::log(z);
    z += 1.0;
  }
  // Stirling with Bernoulli terms B_{2n} / (2n(2n-1) z^{2n-1}).
  static const double c[7] = {
      1.0 / 12.0,        -1.0 / 360.0,      1.0 / 1260.0, -1.0 / 1680.0,
      1.0 / 1188.0,      -691.0 / 360360.0, 1.0 / 156.0,
  };
  const std::complex<double> zinv = 1.0 / z;
  const std::complex<double> zinv2 = zinv * zinv;
  std::complex<double> series(0.0, 0.0);
  std::complex<double> p = zinv;
  for (int n = 0; n < 7; ++n) {
    series += c[n] * p;
    p *= zinv2;
  }
  const double half_log_2pi = 0.91893853320467274178;
  return (z - 0.5) * std::log(z) - z + half_log_2pi + series + shift;
}

double arg_gamma(std::complex<double> z) { return log_gamma(z).imag(); }

}  // namespace deltakern
