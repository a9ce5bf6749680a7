#include "deltakern/airy.hpp"

#include <cfloat>
#include <cmath>

#include "deltakern/detail/gauss_legendre.hpp"

namespace deltakern {
namespace {

constexpr double kLdEps = 1.1e-19;

// Ai(0) = 3^{-2/3}/Gamma(2/3) and -Ai'(0) = 3^{-1/3}/Gamma(1/3).
constexpr long double kAi0 = 0.35502805388781723926006318600418317640L;
constexpr long double kAip0 = 0.25881940379280679840518356018920396347L;

// Maclaurin series Ai = c1 f - c2 g where f, g solve w'' = z w with
// f = 1 + O(z^3), g = z + O(z^4).  Term recurrences:
//   f_{k+1} = f_k z^3 / ((3k+2)(3k+3)),  g_{k+1} = g_k z^3 / ((3k+3)(3k+4)).
EvalResult series_ai(double z, bool derivative) {
  const long double z3 = (long double)z * z * z;
  long double f = 1.0L, g = (long double)z;
  long double sum_f = 0.0L, sum_g = 0.0L;
  long double dsum_f = 0.0L, dsum_g = 1.0L;  // g' starts at 1
  long double max_term = 1.0L;
  for (int k = 0; k < 200; ++k) {
    sum_f += f;
    sum_g += g;
    if (k > 0 && z != 0.0) {
      dsum_f += f * (3.0L * k) / (long double)z;
      dsum_g += g * (3.0L * k + 1.0L) / (long double)z;
    }
    max_term = std::max({max_term, std::fabs(f), std::fabs(g)});
    f *= z3 / ((3.0L * k + 2.0L) * (3.0L * k + 3.0L));
    g *= z3 / ((3.0L * k + 3.0L) * (3.0L * k + 4.0L));
    if (std::fabs(f) + std::fabs(g) < 1e-24L && k > 3) break;
  }
  EvalResult r;
  r.value = derivative ? (double)(kAi0 * dsum_f - kAip0 * dsum_g)
                       : (double)(kAi0 * sum_f - kAip0 * sum_g);
  r.abs_error_estimate =
      (double)(max_term * kLdEps) + 2.0 * DBL_EPSILON * std::fabs(r.value);
  r.method = Method::series;
  return r;
}

// u_k / v_k coefficient pair of the Airy asymptotic expansions.
struct UV {
  double u, v;
};

UV next_uv(const UV& prev, int k) {
  UV n;
  n.u = prev.u * (6.0 * k - 1.0) * (6.0 * k - 3.0) * (6.0 * k - 5.0) /
        (216.0 * k * (2.0 * k - 1.0));
  n.v = n.u * (6.0 * k + 1.0) / (1.0 - 6.0 * k);
  return n;
}

// Oscillatory side, z = -t with t >= 9: xi = (2/3) t^{3/2} >= 18 so the
// optimally truncated tail is ~e^{-2 xi}, far below working precision.
EvalResult negative_asymptotic(double t, bool derivative) {
  const double xi = (2.0 / 3.0) * std::pow(t, 1.5);
  double even_sum = 1.0, odd_sum = 0.0;  // Sum (-1)^m c_{2m} xi^{-2m}, odd part
  UV c{1.0, 1.0};
  double pw = 1.0, tail = 1.0;
  for (int k = 1; k < 60; ++k) {
    c = next_uv(c, k);
    pw /= xi;
    const double term = (derivative ? c.v : c.u) * pw;
    if (std::fabs(term) >= tail && k > 2) break;
    tail = std::fabs(term);
    const double s = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      even_sum += s * term;
    } else {
      odd_sum += s * term;
    }
    if (tail < 1e-19) break;
  }
  const double q = xi + 0.25 * PI;
  EvalResult r;
  if (!derivative) {
    const double env = 1.0 / (SQRT_PI * std::pow(t, 0.25));
    r.value = env * (std::sin(q) * even_sum - std::cos(q) * odd_sum);
    r.abs_error_estimate = env * (tail + (2.0 + xi) * DBL_EPSILON);
  } else {
    const double env = std::pow(t, 0.25) / SQRT_PI;
    r.value = -env * (std::cos(q) * even_sum + std::sin(q) * odd_sum);
    r.abs_error_estimate = env * (tail + (2.0 + xi) * DBL_EPSILON);
  }
  r.method = Method::asymptotic;
  return r;
}

// Exponentially small side, z >= 8: Sum (-1)^k u_k xi^{-k} (or v_k).
EvalResult positive_asymptotic(double z, bool derivative) {
  const double xi = (2.0 / 3.0) * std::pow(z, 1.5);
  double sum = 1.0;
  UV c{1.0, 1.0};
  double pw = 1.0, sign = 1.0, tail = 1.0;
  for (int k = 1; k < 60; ++k) {
    c = next_uv(c, k);
    pw /= xi;
    sign = -sign;
    const double term = (derivative ? c.v : c.u) * pw;
    if (std::fabs(term) >= tail && k > 2) break;
    tail = std::fabs(term);
    sum += sign * term;
    if (tail < 1e-19) break;
  }
  const double ex = std::exp(-xi);
  EvalResult r;
  if (!derivative) {
    const double env = ex / (2.0 * SQRT_PI * std::pow(z, 0.25));
    r.value = env * sum;
    r.abs_error_estimate = env * (tail + (2.0 + xi) * DBL_EPSILON);
  } else {
    const double env = std::pow(z, 0.25) * ex / (2.0 * SQRT_PI);
    r.value = -env * sum;
    r.abs_error_estimate = env * (tail + (2.0 + xi) * DBL_EPSILON);
  }
  r.method = Method::asymptotic;
  return r;
}

// K_nu(xi) * e^{xi} * sqrt(2 xi / pi), i.e. the slowly varying factor of the
// modified Bessel function, from the Laplace-type integral
//   K_nu(xi) = sqrt(pi/(2 xi)) e^{-xi} / Gamma(nu + 1/2)
//              * Int_0^inf e^{-t} t^{nu - 1/2} (1 + t/(2 xi))^{nu - 1/2} dt.
// The substitution t = u^6 removes the t^{nu-1/2} endpoint singularity for
// nu = 1/3 and 2/3 (the two orders we need).
double bessel_k_scaled(double nu, double xi) {
  const auto& rule = detail::gauss_legendre(32);
  const double panel_edges[] = {0.0, 0.7, 1.2, 1.7, 2.2};
  double integral = 0.0;
  for (int i = 0; i < 4; ++i) {
    integral += detail::gauss_panel(
        [&](double u) {
          const double t = std::pow(u, 6.0);
          return 6.0 * std::pow(u, 6.0 * nu + 2.0) * std::exp(-t) *
                 std::pow(1.0 + t / (2.0 * xi), nu - 0.5);
        },
        panel_edges[i], panel_edges[i + 1], rule);
  }
  return integral / std::tgamma(nu + 0.5);
}

// Mid-window 6 < z < 8 where the series cancellation budget runs out before
// the exponentially small expansion becomes accurate.
EvalResult laplace_ai(double z, bool derivative) {
  const double xi = (2.0 / 3.0) * std::pow(z, 1.5);
  const double pre = std::exp(-xi) * std::sqrt(PI / (2.0 * xi));
  EvalResult r;
  if (!derivative) {
    r.value = (1.0 / PI) * std::sqrt(z / 3.0) * pre * bessel_k_scaled(1.0 / 3.0, xi);
  } else {
    r.value = -(z / (PI * std::sqrt(3.0))) * pre * bessel_k_scaled(2.0 / 3.0, xi);
  }
  r.abs_error_estimate = 2e-14 * std::fabs(r.value);
  r.method = Method::integral_representation;
  return r;
}

EvalResult dispatch(double z, bool derivative) {
  if (!std::isfinite(z)) throw std::domain_error("airy_ai: non-finite argument");
  if (z < detail::kAiryNegAsymptotic) return negative_asymptotic(-z, derivative);
  if (z <= detail::kAirySeriesMax) return series_ai(z, derivative);
  if (z < detail::kAiryPosAsymptotic) return laplace_ai(z, derivative);
  return positive_asymptotic(z, derivative);
}

}  // namespace

EvalResult airy_ai(double z) { return dispatch(z, false); }
EvalResult airy_ai_prime(double z) { return dispatch(z, true); }

}  // namespace deltakern
