#include "deltakern/asymptotics.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "deltakern/bessel.hpp"
#include "deltakern/airy.hpp"
#include "deltakern/common.hpp"
#include "deltakern/coulomb.hpp"
#include "deltakern/gamma.hpp"
#include "deltakern/quadrature.hpp"
#include "deltakern/weber.hpp"

namespace deltakern {

namespace {

void require_positive(double t, const char* what) {
  if (!(t > 0.0)) throw std::domain_error(std::string("phase: ") + what);
}

// computed(t) / envelope(t) should settle onto sin(zeta) or cos(zeta).
struct ResidualModel {
  std::function<double(double)> computed;
  std::function<double(double)> envelope;
  bool sin_type = true;
};

ResidualModel residual_model(const PhaseSpec& spec, double x) {
  switch (spec.family) {
    case Family::kBesselHankel: {
      if (!(x > 0.0))
        throw std::domain_error("validate_asymptotic: bessel needs x > 0");
      double nu = spec.nu;
      return {[nu, x](double t) { return bessel_j(nu, x * t).value; },
              [x](double t) { return std::sqrt(2.0 / (PI * x * t)); },
              /*sin_type=*/false};
    }
    case Family::kCoulomb: {
      if (!(x > 0.0))
        throw std::domain_error("validate_asymptotic: coulomb needs x > 0");
      int l = spec.l;
      return {[x, l](double r) { return coulomb_s(x, l, r).s; },
              [x](double) { return std::pow(x, -0.25) / SQRT_PI; },
              /*sin_type=*/true};
    }
    case Family::kAiry:
      return {[x](double t) { return airy_ai(-t - x).value; },
              [x](double t) { return std::pow(t + x, -0.25) / SQRT_PI; },
              /*sin_type=*/true};
    case Family::kWeber: {
      double a = spec.a;
      double ka = weber_k(a);
      return {[a](double t) { return weber_w_reference(a, t).value; },
              [ka](double t) { return std::sqrt(2.0 * ka / t); },
              /*sin_type=*/false};
    }
    default:
      throw std::invalid_argument(
          "validate_asymptotic: family has no oscillatory asymptotic form");
  }
}

// Solves phase(t) == target near t0; the phases here are smooth and strictly
// increasing across every validation window, so plain Newton converges.
double snap_to_phase(const PhaseSpec& spec, double x_or_a, double t0,
                     double target, double lo, double hi) {
  double t = t0;
  for (int iter = 0; iter < 60; ++iter) {
    double miss = phase(spec, x_or_a, t) - target;
    double step = miss / phase_rate(spec, x_or_a, t);
    t -= step;
    if (t < 0.5 * lo) t = 0.5 * lo;
    if (t > 2.0 * hi) t = 2.0 * hi;
    if (std::abs(step) <= 1e-13 * t) return t;
  }
  throw NumericalError("validate_asymptotic: phase inversion did not settle");
}

}  // namespace

double phase(const PhaseSpec& spec, double x_or_a, double t_or_R) {
  switch (spec.family) {
    case Family::kBesselHankel:
      require_positive(t_or_R, "bessel cutoff R must be positive");
      return x_or_a * t_or_R - 0.5 * spec.nu * PI - 0.25 * PI;
    case Family::kCoulomb: {
      require_positive(x_or_a, "coulomb energy x must be positive");
      require_positive(t_or_R, "coulomb radius r must be positive");
      double k = std::sqrt(x_or_a);
      return k * t_or_R + std::log(2.0 * k * t_or_R) / k - 0.5 * spec.l * PI +
             arg_gamma({spec.l + 1.0, -1.0 / k});
    }
    case Family::kAiry: {
      double s = t_or_R + x_or_a;
      if (s < 0.0)
        throw std::domain_error("phase: airy needs t + x >= 0");
      return (2.0 / 3.0) * s * std::sqrt(s) + 0.25 * PI;
    }
    case Family::kWeber:
      require_positive(t_or_R, "weber argument x must be positive");
      return 0.25 * t_or_R * t_or_R - x_or_a * std::log(t_or_R) +
             0.5 * arg_gamma({0.5, x_or_a}) + 0.25 * PI;
    default:
      throw std::invalid_argument("phase: family has no oscillatory phase");
  }
}

double phase_rate(const PhaseSpec& spec, double x_or_a, double t_or_R) {
  switch (spec.family) {
    case Family::kBesselHankel:
      return x_or_a;
    case Family::kCoulomb: {
      double k = std::sqrt(x_or_a);
      return k + 1.0 / (k * t_or_R);
    }
    case Family::kAiry:
      return std::sqrt(t_or_R + x_or_a);
    case Family::kWeber:
      return 0.5 * t_or_R - x_or_a / t_or_R;
    default:
      throw std::invalid_argument("phase_rate: family has no oscillatory phase");
  }
}

double coulomb_phase_bar(double x, double r) {
  require_positive(x, "coulomb energy x must be positive");
  require_positive(r, "coulomb radius r must be positive");
  double k = std::sqrt(x);
  return k * r + std::log(r) / k;
}

double coulomb_phase_theta(double x, int l) {
  require_positive(x, "coulomb energy x must be positive");
  double k = std::sqrt(x);
  return std::log(2.0 * k) / k - 0.5 * l * PI + arg_gamma({l + 1.0, -1.0 / k});
}

double expected_residual_exponent(Family family) {
  switch (family) {
    case Family::kBesselHankel:
      return -1.0;
    case Family::kCoulomb:
      return -1.0;
    case Family::kAiry:
      return -1.5;
    case Family::kWeber:
      return -1.0;
    default:
      throw std::invalid_argument(
          "expected_residual_exponent: family has no asymptotic residual");
  }
}

AsymptoticReport validate_asymptotic(const PhaseSpec& spec, double x,
                                     double t_lo, double t_hi) {
  if (!(t_lo > 0.0) || !(t_hi > t_lo * 1.5))
    throw std::domain_error(
        "validate_asymptotic: need 0 < t_lo and t_hi comfortably above t_lo");
  double x_eff = (spec.family == Family::kWeber) ? spec.a : x;
  ResidualModel model = residual_model(spec, x);

  // One sample per log-spaced slot, snapped to the nearest peak of the
  // sinusoid's quadrature complement (sin zeros for sin-type families, cos
  // zeros for cos-type). There the leading residual term is extremal, so
  // successive samples trace the decay envelope instead of crossing zero.
  double complement_offset = model.sin_type ? 0.0 : 0.5 * PI;
  constexpr int kSlots = 18;
  AsymptoticReport report;
  report.family = spec.family;
  report.expected_exponent = expected_residual_exponent(spec.family);

  double last_arch = -1.0;
  for (int i = 0; i < kSlots; ++i) {
    double t_goal = t_lo * std::pow(t_hi / t_lo, (i + 0.5) / kSlots);
    double arch =
        std::round((phase(spec, x_eff, t_goal) - complement_offset) / PI);
    if (arch == last_arch) continue;
    last_arch = arch;
    double t = snap_to_phase(spec, x_eff, t_goal, complement_offset + arch * PI,
                             t_lo, t_hi);
    if (t < t_lo * 0.99 || t > t_hi * 1.01) continue;
    double zeta = phase(spec, x_eff, t);
    double sinusoid = model.sin_type ? std::sin(zeta) : std::cos(zeta);
    double residual = model.computed(t) / model.envelope(t) - sinusoid;
    if (!std::isfinite(residual) || residual == 0.0) continue;
    report.t_samples.push_back(t);
    report.residuals.push_back(std::abs(residual));
  }

  size_t n = report.t_samples.size();
  if (n < 5)
    throw NumericalError(
        "validate_asymptotic: fewer than 5 usable residual samples");

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double lx = std::log(report.t_samples[i]);
    double ly = std::log(report.residuals[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  report.fitted_exponent =
      (n * sxy - sx * sy) / (n * sxx - sx * sx);

  bool decreasing = true;
  for (size_t i = 1; i < n; ++i)
    decreasing = decreasing && report.residuals[i] < report.residuals[i - 1];
  report.pass =
      decreasing &&
      std::abs(report.fitted_exponent - report.expected_exponent) <= 0.3;
  return report;
}

std::vector<DirichletRow> dirichlet_limit(
    const std::function<double(double, double)>& phase_diff, double a,
    double eta, std::span<const double> R_list) {
  if (!(eta > 0.0))
    throw std::domain_error("dirichlet_limit: eta must be positive");
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-10;
  cfg.rel_tol = 1e-9;
  std::vector<DirichletRow> rows;
  rows.reserve(R_list.size());
  for (double R : R_list) {
    // sin(dzeta)/(pi (x - a)) is smooth through x = a (dzeta vanishes
    // linearly there); Gauss-Kronrod nodes never land on the endpoint.
    auto f = [&phase_diff, a, R](double x) {
      return std::sin(phase_diff(x, R)) / (PI * (x - a));
    };
    DirichletRow row;
    row.cutoff = R;
    row.left = integrate_adaptive(f, a - eta, a, cfg).value;
    row.right = integrate_adaptive(f, a, a + eta, cfg).value;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace deltakern
