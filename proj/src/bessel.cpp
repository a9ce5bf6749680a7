#include "deltakern/bessel.hpp"

#include <cfloat>
#include <cmath>

#include "deltakern/detail/gauss_legendre.hpp"

namespace deltakern {
namespace {

constexpr double kLdEps = 1.1e-19;  // 80-bit long double ulp

void check_domain(double nu, double t) {
  if (!(nu > -1.0)) throw std::domain_error("bessel_j: requires nu > -1");
  if (!(t >= 0.0)) throw std::domain_error("bessel_j: requires t >= 0");
}

// Ascending series about t = 0, long double accumulation. The largest term
// is tracked so the cancellation floor shows up in the error estimate.
EvalResult series_j(double nu, double t, bool derivative) {
  if (t == 0.0) {
    if (derivative) {
      if (nu == 1.0) return {0.5, 0.0, Method::series};
      if (nu == 0.0 || nu > 1.0) return {0.0, 0.0, Method::series};
      throw std::range_error("bessel_j_prime: J'_nu diverges at t = 0");
    }
    if (nu == 0.0) return {1.0, 0.0, Method::series};
    if (nu > 0.0) return {0.0, 0.0, Method::series};
    throw std::range_error("bessel_j: J_nu diverges at t = 0 for nu < 0");
  }
  const long double half_t = 0.5L * (long double)t;
  const long double q = half_t * half_t;
  long double term = std::exp((long double)nu * std::log(half_t) -
                              std::lgamma((long double)nu + 1.0L));
  if (!std::isfinite((double)term)) {
    throw std::range_error("bessel_j: series seed overflows");
  }
  long double sum = 0.0L, dsum = 0.0L, max_term = 0.0L;
  for (int n = 0; n < 400; ++n) {
    const long double tn = term;
    sum += tn;
    dsum += tn * ((long double)nu + 2.0L * n) / (long double)t;
    max_term = std::max(max_term, std::fabs(tn));
    term = -term * q / ((n + 1.0L) * ((long double)nu + n + 1.0L));
    if (std::fabs(term) < 1e-25L * std::max<long double>(std::fabs(sum), 1e-300L) &&
        n > 4) {
      break;
    }
  }
  EvalResult r;
  r.value = (double)(derivative ? dsum : sum);
  r.abs_error_estimate =
      (double)(max_term * kLdEps) + 2.0 * DBL_EPSILON * std::fabs(r.value);
  r.method = Method::series;
  return r;
}

// Hankel expansion (DLMF 10.17.3 and 10.17.9), adaptively truncated at the
// smallest term. Valid once the smallest term is below the target accuracy,
// which the branch boundary bessel_asymptotic_min_t guarantees.
EvalResult hankel_j(double nu, double t, bool derivative) {
  const double mu = 4.0 * nu * nu;
  const double omega = t - 0.5 * nu * PI - 0.25 * PI;
  // Even-index terms feed the cos coefficient, odd-index the sin one.
  double even_sum = 1.0, odd_sum = 0.0;
  double a = 1.0;       // a_k
  double pw = 1.0;      // 1/t^k
  double tail = 1.0;    // |last included term|
  for (int k = 1; k < 80; ++k) {
    const double fac_a = (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k);
    const double coef =
        derivative ? a * (mu + 4.0 * k * k - 1.0) / (8.0 * k) : a * fac_a;
    a *= fac_a;
    pw /= t;
    const double term = coef * pw;
    if (std::fabs(term) >= tail && k > 2) break;  // past the optimal cut
    tail = std::fabs(term);
    const int m = k / 2;
    const double s = (m % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      even_sum += s * term;
    } else {
      odd_sum += s * term;
    }
    if (tail < 1e-19) break;
  }
  const double env = std::sqrt(2.0 / (PI * t));
  EvalResult r;
  if (!derivative) {
    r.value = env * (even_sum * std::cos(omega) - odd_sum * std::sin(omega));
  } else {
    r.value = -env * (even_sum * std::sin(omega) + odd_sum * std::cos(omega));
  }
  r.abs_error_estimate = env * (tail + 4.0 * DBL_EPSILON * (1.0 + t * DBL_EPSILON));
  // Phase rounding at huge t dominates: d(omega) ~ t*eps.
  r.abs_error_estimate += env * t * DBL_EPSILON;
  r.method = Method::asymptotic;
  return r;
}

// Cosine integral representation (DLMF 10.9.5/10.9.6):
// J_nu(x) = (1/pi) Int_0^pi cos(nu q - x sin q) dq
//           - sin(nu pi)/pi Int_0^inf exp(-nu u - x sinh u) du.
// Used in the mid-range where the series cancels and the Hankel expansion
// has not yet converged (only matters for larger orders).
double integral_j(double nu, double x) {
  const auto& rule = detail::gauss_legendre(16);
  const int m = std::max(8, (int)std::ceil((x + std::fabs(nu)) * 1.35));
  double osc = 0.0;
  for (int i = 0; i < m; ++i) {
    const double a = PI * i / m;
    const double b = PI * (i + 1) / m;
    osc += detail::gauss_panel(
        [&](double q) { return std::cos(nu * q - x * std::sin(q)); }, a, b,
        rule);
  }
  double result = osc / PI;
  const double snp = std::sin(nu * PI);
  if (snp != 0.0) {
    const double U = std::asinh(45.0 / x);
    const auto& rule24 = detail::gauss_legendre(24);
    double tail = 0.0;
    tail += detail::gauss_panel(
        [&](double u) { return std::exp(-nu * u - x * std::sinh(u)); }, 0.0,
        0.5 * U, rule24);
    tail += detail::gauss_panel(
        [&](double u) { return std::exp(-nu * u - x * std::sinh(u)); },
        0.5 * U, U, rule24);
    result -= snp / PI * tail;
  }
  return result;
}

}  // namespace

namespace detail {
double bessel_asymptotic_min_t(double nu) {
  return std::max(12.0, 0.25 * nu * nu + 8.0);
}
}  // namespace detail

EvalResult bessel_j(double nu, double t) {
  check_domain(nu, t);
  if (t <= detail::kBesselSeriesMaxT) return series_j(nu, t, false);
  if (t >= detail::bessel_asymptotic_min_t(nu)) return hankel_j(nu, t, false);
  EvalResult r;
  r.value = integral_j(nu, t);
  r.abs_error_estimate = 5e-14 * std::max(std::fabs(r.value),
                                          std::sqrt(2.0 / (PI * t)));
  r.method = Method::integral_representation;
  return r;
}

EvalResult bessel_j_prime(double nu, double t) {
  check_domain(nu, t);
  if (t <= detail::kBesselSeriesMaxT) return series_j(nu, t, true);
  if (t >= detail::bessel_asymptotic_min_t(nu) &&
      t >= detail::bessel_asymptotic_min_t(nu + 1.0)) {
    return hankel_j(nu, t, true);
  }
  // J'_nu = (nu/t) J_nu - J_{nu+1}, both factors from the mid-range branch.
  const double jn = integral_j(nu, t);
  const double jn1 = integral_j(nu + 1.0, t);
  EvalResult r;
  r.value = (nu / t) * jn - jn1;
  r.abs_error_estimate =
      5e-14 * (1.0 + std::fabs(nu / t)) *
      std::max(std::fabs(r.value), std::sqrt(2.0 / (PI * t)));
  r.method = Method::recurrence;
  return r;
}

}  // namespace deltakern
