#include "deltakern/orthopoly.hpp"

#include <cmath>
#include <stdexcept>

namespace deltakern {
namespace {

void check_degree(int n) {
  if (n < 0) throw std::domain_error("orthopoly: degree must be >= 0");
}

}  // namespace

double legendre_p(int n, double x) {
  check_degree(n);
  if (n == 0) return 1.0;
  double pm1 = 1.0, p = x;
  for (int k = 1; k < n; ++k) {
    const double pp = ((2.0 * k + 1.0) * x * p - k * pm1) / (k + 1.0);
    pm1 = p;
    p = pp;
  }
  return p;
}

void legendre_p_all(int n, double x, std::vector<double>& out) {
  check_degree(n);
  out.resize(n + 1);
  out[0] = 1.0;
  if (n == 0) return;
  out[1] = x;
  for (int k = 1; k < n; ++k) {
    out[k + 1] = ((2.0 * k + 1.0) * x * out[k] - k * out[k - 1]) / (k + 1.0);
  }
}

double hermite_h(int n, double x) {
  check_degree(n);
  if (n == 0) return 1.0;
  double hm1 = 1.0, h = 2.0 * x;
  for (int k = 1; k < n; ++k) {
    const double hp = 2.0 * x * h - 2.0 * k * hm1;
    hm1 = h;
    h = hp;
  }
  return h;
}

namespace {

// htilde recurrence from an arbitrary seed; linearity makes the weighted
// variant a pure seed change.
void hermite_from_seed(int n, double x, double seed, std::vector<double>& out) {
  out.resize(n + 1);
  out[0] = seed;
  if (n == 0) return;
  out[1] = std::sqrt(2.0) * x * seed;
  for (int k = 1; k < n; ++k) {
    out[k + 1] = std::sqrt(2.0 / (k + 1.0)) * x * out[k] -
                 std::sqrt(k / (k + 1.0)) * out[k - 1];
  }
}

void laguerre_from_seed(int n, double alpha, double x, double seed,
                        std::vector<double>& out) {
  out.resize(n + 1);
  out[0] = seed;
  if (n == 0) return;
  out[1] = (1.0 + alpha - x) * seed / std::sqrt(1.0 + alpha);
  for (int k = 1; k < n; ++k) {
    out[k + 1] = ((2.0 * k + 1.0 + alpha - x) * out[k] -
                  std::sqrt(k * (k + alpha)) * out[k - 1]) /
                 std::sqrt((k + 1.0) * (k + 1.0 + alpha));
  }
}

}  // namespace

void hermite_orthonormal_all(int n, double x, std::vector<double>& out) {
  check_degree(n);
  const double pi_quarter = 0.75112554446494248286;  // pi^{-1/4}
  hermite_from_seed(n, x, pi_quarter, out);
}

double laguerre_l(int n, double alpha, double x) {
  check_degree(n);
  if (!(alpha > -1.0)) throw std::domain_error("laguerre_l: requires alpha > -1");
  if (n == 0) return 1.0;
  double lm1 = 1.0, l = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double lp =
        ((2.0 * k + 1.0 + alpha - x) * l - (k + alpha) * lm1) / (k + 1.0);
    lm1 = l;
    l = lp;
  }
  return l;
}

void laguerre_orthonormal_all(int n, double alpha, double x,
                              std::vector<double>& out) {
  check_degree(n);
  if (!(alpha > -1.0)) {
    throw std::domain_error("laguerre_orthonormal_all: requires alpha > -1");
  }
  laguerre_from_seed(n, alpha, x, std::exp(-0.5 * std::lgamma(alpha + 1.0)),
                     out);
}

void hermite_weighted_all(int n, double x, std::vector<double>& out) {
  check_degree(n);
  const double pi_quarter = 0.75112554446494248286;  // pi^{-1/4}
  hermite_from_seed(n, x, pi_quarter * std::exp(-0.5 * x * x), out);
}

void laguerre_weighted_all(int n, double alpha, double x,
                           std::vector<double>& out) {
  check_degree(n);
  if (!(alpha > -1.0)) {
    throw std::domain_error("laguerre_weighted_all: requires alpha > -1");
  }
  laguerre_from_seed(
      n, alpha, x, std::exp(-0.5 * std::lgamma(alpha + 1.0) - 0.5 * x), out);
}

}  // namespace deltakern
