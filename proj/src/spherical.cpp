#include "deltakern/spherical.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace deltakern {
namespace {

void check_angles(double theta) {
  if (!(theta >= 0.0 && theta <= PI)) {
    throw std::domain_error("spherical: requires 0 <= theta <= pi");
  }
}

// Ptilde_m^m = -sqrt((2m+1)/(2m)) sin(theta) Ptilde_{m-1}^{m-1}, seeded by
// Ptilde_0^0 = 1/sqrt(4 pi); then
// Ptilde_{m+1}^m = sqrt(2m+3) cos(theta) Ptilde_m^m and for k >= m+2
// Ptilde_k^m = a_k^m (cos(theta) Ptilde_{k-1}^m - Ptilde_{k-2}^m / a_{k-1}^m)
// with a_k^m = sqrt((4k^2-1)/(k^2-m^2)).
double diagonal_seed(int m, double s) {
  double p = 1.0 / std::sqrt(4.0 * PI);
  for (int j = 1; j <= m; ++j) {
    p *= -std::sqrt((2.0 * j + 1.0) / (2.0 * j)) * s;
  }
  return p;
}

void assoc_all(int n, int m, double c, double s, std::vector<double>& out) {
  out.assign(n - m + 1, 0.0);
  out[0] = diagonal_seed(m, s);
  if (n == m) return;
  out[1] = std::sqrt(2.0 * m + 3.0) * c * out[0];
  double a_prev = 0.0;
  for (int k = m + 2; k <= n; ++k) {
    const double a_k =
        std::sqrt((4.0 * k * k - 1.0) / ((double)k * k - (double)m * m));
    if (k == m + 2) {
      const double a_km1 = std::sqrt(
          (4.0 * (k - 1.0) * (k - 1.0) - 1.0) /
          ((k - 1.0) * (k - 1.0) - (double)m * m));
      a_prev = a_km1;
    }
    out[k - m] = a_k * (c * out[k - m - 1] - out[k - m - 2] / a_prev);
    a_prev = a_k;
  }
}

}  // namespace

void normalized_assoc_legendre_all(int n, int m, double theta,
                                   std::vector<double>& out) {
  if (m < 0 || n < m) {
    throw std::domain_error("normalized_assoc_legendre_all: need 0 <= m <= n");
  }
  check_angles(theta);
  assoc_all(n, m, std::cos(theta), std::sin(theta), out);
}

std::complex<double> spherical_harmonic(int k, int l, double theta,
                                        double phi) {
  if (k < 0 || std::abs(l) > k) {
    throw std::domain_error("spherical_harmonic: requires |l| <= k");
  }
  check_angles(theta);
  const int m = std::abs(l);
  std::vector<double> p;
  assoc_all(k, m, std::cos(theta), std::sin(theta), p);
  const std::complex<double> y =
      p.back() * std::exp(std::complex<double>(0.0, m * phi));
  if (l >= 0) return y;
  return (m % 2 == 0 ? 1.0 : -1.0) * std::conj(y);
}

double spherical_closure_sum(int n, double theta1, double phi1, double theta2,
                             double phi2) {
  if (n < 0) throw std::domain_error("spherical_closure_sum: n >= 0");
  check_angles(theta1);
  check_angles(theta2);
  const double c1 = std::cos(theta1), s1 = std::sin(theta1);
  const double c2 = std::cos(theta2), s2 = std::sin(theta2);
  std::complex<double> acc(0.0, 0.0);
  std::vector<double> p1, p2;
  for (int m = 0; m <= n; ++m) {
    assoc_all(n, m, c1, s1, p1);
    assoc_all(n, m, c2, s2, p2);
    const std::complex<double> phase =
        std::exp(std::complex<double>(0.0, m * (phi1 - phi2)));
    for (int k = m; k <= n; ++k) {
      const double prod = p1[k - m] * p2[k - m];
      if (m == 0) {
        acc += prod;
      } else {
        // l = +m and l = -m; the latter contributes the conjugate phase
        // (the two Condon-Shortley signs cancel in the product).
        acc += prod * phase;
        acc += prod * std::conj(phase);
      }
    }
  }
  if (std::fabs(acc.imag()) > 1e-12 * std::max(1.0, std::fabs(acc.real()))) {
    throw NumericalError("spherical_closure_sum: imaginary residue too large");
  }
  return acc.real();
}

}  // namespace deltakern
