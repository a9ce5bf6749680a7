#include "deltakern/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "deltakern/airy.hpp"
#include "deltakern/bessel.hpp"
#include "deltakern/coulomb.hpp"
#include "deltakern/orthopoly.hpp"
#include "deltakern/quadrature.hpp"
#include "deltakern/spherical.hpp"
#include "deltakern/weber.hpp"

namespace deltakern {
namespace {

constexpr double kEps = 2.220446049250313e-16;

// ---------------------------------------------------------------- families

struct FamilyRow {
  Family family;
  const char* name;
};

constexpr FamilyRow kFamilies[] = {
    {Family::kBesselHankel, "bessel"},
    {Family::kCoulomb, "coulomb"},
    {Family::kAiry, "airy"},
    {Family::kWeber, "weber"},
    {Family::kLegendreSeries, "legendre"},
    {Family::kHermiteSeries, "hermite"},
    {Family::kLaguerreSeries, "laguerre"},
    {Family::kSphericalSeries, "spherical"},
    {Family::kClassicalGaussian, "gaussian"},
    {Family::kClassicalCauchy, "cauchy"},
    {Family::kClassicalSinc, "sinc"},
};

// ------------------------------------------------------- diagonal blending

// Quadratic Lagrange through (a-d, lo), (a, center), (a+d, hi): exact at the
// knots, so the kernel is continuous across the diag_switch boundary by
// construction.  The error adds the second-difference scale, weighted to
// vanish at the knots and at the center.
KernelValue blend_window(double x, double a, double d, const KernelValue& lo,
                         const KernelValue& center, const KernelValue& hi) {
  const double u = (x - a) / d;
  KernelValue out;
  out.value = 0.5 * u * (u - 1.0) * lo.value + (1.0 - u * u) * center.value +
              0.5 * u * (u + 1.0) * hi.value;
  out.near_diagonal = true;
  const double wiggle = std::fabs(u) * (1.0 - std::fabs(u));
  out.abs_error_estimate =
      std::max({lo.abs_error_estimate, center.abs_error_estimate,
                hi.abs_error_estimate}) +
      wiggle * std::fabs(lo.value - 2.0 * center.value + hi.value);
  return out;
}

// 4th-order symmetric difference f'(0) ~ [8(f(h)-f(-h)) - (f(2h)-f(-2h))] /
// (12h).  The 2nd-order stencil at the mandated step h = 10 diag_switch
// would leave h^2/6 |N'''| truncation above the diagonal oracle tolerances
// (3e-6 relative for Airy at R = 20, 4e-5 for Coulomb at R = 30), so the
// extrapolated stencil is used; phase_rate is d(phase)/d(spectral
// parameter), which sets |N^(5)| ~ |N'| phase_rate^4.
template <typename F>
KernelValue fd_derivative(const F& numerator, double h, double value_noise,
                          double phase_rate) {
  const double n1 = numerator(h), n2 = numerator(-h);
  const double n3 = numerator(2.0 * h), n4 = numerator(-2.0 * h);
  KernelValue out;
  out.value = (8.0 * (n1 - n2) - (n3 - n4)) / (12.0 * h);
  out.near_diagonal = true;
  const double hp = h * phase_rate;
  out.abs_error_estimate =
      std::fabs(out.value) * hp * hp * hp * hp / 30.0 +
      1.5 * value_noise / h +
      kEps * (std::fabs(n1) + std::fabs(n2) + std::fabs(n3) + std::fabs(n4)) /
          h;
  return out;
}

// ----------------------------------------------------------------- Bessel

KernelValue bessel_offdiag(const KernelSpec& s, double x) {
  const double a = s.a, R = s.R;
  const EvalResult jx = bessel_j(s.nu, x * R);
  const EvalResult jpx = bessel_j_prime(s.nu, x * R);
  const EvalResult ja = bessel_j(s.nu, a * R);
  const EvalResult jpa = bessel_j_prime(s.nu, a * R);
  const double t1 = (a * R) * jx.value * jpa.value;
  const double t2 = (x * R) * ja.value * jpx.value;
  const double pref = x / ((x - a) * (x + a));
  KernelValue out;
  out.value = pref * (t1 - t2);
  const double e1 = (a * R) * (std::fabs(jx.value) * jpa.abs_error_estimate +
                               std::fabs(jpa.value) * jx.abs_error_estimate);
  const double e2 = (x * R) * (std::fabs(ja.value) * jpx.abs_error_estimate +
                               std::fabs(jpx.value) * ja.abs_error_estimate);
  out.abs_error_estimate =
      std::fabs(pref) * (e1 + e2 + kEps * (std::fabs(t1) + std::fabs(t2)));
  return out;
}

// Lommel diagonal: a Int_0^R J_nu(a t)^2 t dt
//   = a R^2/2 [J'_nu(aR)^2 + (1 - nu^2/(aR)^2) J_nu(aR)^2].
KernelValue bessel_diag(const KernelSpec& s) {
  const double z = s.a * s.R;
  const EvalResult j = bessel_j(s.nu, z);
  const EvalResult jp = bessel_j_prime(s.nu, z);
  const double ratio = (s.nu == 0.0) ? 0.0 : (s.nu * s.nu) / (z * z);
  const double q = jp.value * jp.value + (1.0 - ratio) * j.value * j.value;
  const double pref = s.a * s.R * s.R * 0.5;
  KernelValue out;
  out.value = pref * q;
  out.near_diagonal = true;
  const double prop = 2.0 * std::fabs(jp.value) * jp.abs_error_estimate +
                      2.0 * std::fabs((1.0 - ratio) * j.value) *
                          j.abs_error_estimate;
  // The two terms cancel as (aR)^{2 nu} when aR << 1 and nu > 0.
  const double cancel =
      kEps * (jp.value * jp.value + (1.0 + ratio) * j.value * j.value);
  out.abs_error_estimate = pref * (prop + cancel);
  return out;
}

// ---------------------------------------------------------------- Coulomb

struct CoulombPoint {
  CoulombEval e;
  double err_s, err_sp;
};

// Model error: the normalization constant and accumulated ODE tolerance are
// good to ~1e-9 relative to the oscillation envelope pi^{-1/2} x^{-1/4}.
CoulombPoint coulomb_point(double x, int l, double r) {
  CoulombPoint p;
  p.e = coulomb_s(x, l, r);
  const double env = std::pow(x, -0.25) / SQRT_PI;
  const double zr = std::sqrt(std::max(x + 2.0 / r, 0.25 * x));
  p.err_s = 1e-9 * env;
  p.err_sp = 1e-9 * env * zr;
  return p;
}

KernelValue coulomb_offdiag(const KernelSpec& s, double x) {
  const CoulombPoint X = coulomb_point(x, s.l, s.R);
  const CoulombPoint A = coulomb_point(s.a, s.l, s.R);
  const double t1 = X.e.s * A.e.s_prime;
  const double t2 = X.e.s_prime * A.e.s;
  KernelValue out;
  out.value = (t1 - t2) / (x - s.a);
  out.abs_error_estimate =
      (std::fabs(X.e.s) * A.err_sp + std::fabs(A.e.s_prime) * X.err_s +
       std::fabs(X.e.s_prime) * A.err_s + std::fabs(A.e.s) * X.err_sp +
       kEps * (std::fabs(t1) + std::fabs(t2))) /
      std::fabs(x - s.a);
  return out;
}

KernelValue coulomb_diag(const KernelSpec& s) {
  const double h = 10.0 * detail::diagonal_switch(s.a);
  const CoulombPoint A = coulomb_point(s.a, s.l, s.R);
  const auto numerator = [&](double dx) {
    const CoulombPoint X = coulomb_point(s.a + dx, s.l, s.R);
    return X.e.s * A.e.s_prime - X.e.s_prime * A.e.s;
  };
  const double env = std::pow(s.a, -0.25) / SQRT_PI;
  const double noise =
      2.0 * (env * A.err_sp + env * std::sqrt(s.a + 2.0 / s.R) * A.err_s);
  // d(zeta)/dx ~ R/(2 sqrt(x)): the spectral phase rate at the boundary.
  const double rate = s.R / (2.0 * std::sqrt(s.a));
  return fd_derivative(numerator, h, noise, rate);
}

// ------------------------------------------------------------------- Airy

KernelValue airy_offdiag(const KernelSpec& s, double x) {
  const EvalResult fx = airy_ai(-s.R - x);
  const EvalResult fpx = airy_ai_prime(-s.R - x);
  const EvalResult fa = airy_ai(-s.R - s.a);
  const EvalResult fpa = airy_ai_prime(-s.R - s.a);
  const double t1 = fpx.value * fa.value;
  const double t2 = fx.value * fpa.value;
  KernelValue out;
  out.value = (t1 - t2) / (x - s.a);
  out.abs_error_estimate =
      (std::fabs(fpx.value) * fa.abs_error_estimate +
       std::fabs(fa.value) * fpx.abs_error_estimate +
       std::fabs(fx.value) * fpa.abs_error_estimate +
       std::fabs(fpa.value) * fx.abs_error_estimate +
       kEps * (std::fabs(t1) + std::fabs(t2))) /
      std::fabs(x - s.a);
  return out;
}

// Exact limit: d/dw [Ai'(w)^2 - w Ai(w)^2] = -Ai(w)^2 integrates the
// defining integral, so the diagonal is Ai'(s)^2 - s Ai(s)^2 at s = -R-a.
KernelValue airy_diag(const KernelSpec& s) {
  const double z = -s.R - s.a;
  const EvalResult f = airy_ai(z);
  const EvalResult fp = airy_ai_prime(z);
  KernelValue out;
  out.value = fp.value * fp.value - z * f.value * f.value;
  out.near_diagonal = true;
  out.abs_error_estimate =
      2.0 * std::fabs(fp.value) * fp.abs_error_estimate +
      2.0 * std::fabs(z * f.value) * f.abs_error_estimate +
      kEps * (fp.value * fp.value + std::fabs(z) * f.value * f.value);
  return out;
}

// ------------------------------------------------------------------ Weber

// N(b) at one boundary side: W(a,.) W'(b,.) - W'(a,.) W(b,.).
double weber_bracket(const WeberBoundary& A, const WeberBoundary& B,
                     bool minus_side) {
  if (minus_side) {
    return A.w_minus.value * B.wp_minus.value -
           A.wp_minus.value * B.w_minus.value;
  }
  return A.w_plus.value * B.wp_plus.value - A.wp_plus.value * B.w_plus.value;
}

double weber_bracket_noise(const WeberBoundary& A, const WeberBoundary& B,
                           bool minus_side) {
  const EvalResult& aw = minus_side ? A.w_minus : A.w_plus;
  const EvalResult& awp = minus_side ? A.wp_minus : A.wp_plus;
  const EvalResult& bw = minus_side ? B.w_minus : B.w_plus;
  const EvalResult& bwp = minus_side ? B.wp_minus : B.wp_plus;
  return std::fabs(aw.value) * bwp.abs_error_estimate +
         std::fabs(bwp.value) * aw.abs_error_estimate +
         std::fabs(awp.value) * bw.abs_error_estimate +
         std::fabs(bw.value) * awp.abs_error_estimate +
         kEps * (std::fabs(aw.value * bwp.value) +
                 std::fabs(awp.value * bw.value));
}

KernelValue weber_offdiag(const KernelSpec& s, double b) {
  const WeberBoundary A = weber_w_boundary_reference(s.a, s.R);
  const WeberBoundary B = weber_w_boundary_reference(b, s.R);
  const double num =
      weber_bracket(A, B, false) - weber_bracket(A, B, true);
  KernelValue out;
  out.value = num / (b - s.a);
  out.abs_error_estimate = (weber_bracket_noise(A, B, false) +
                            weber_bracket_noise(A, B, true)) /
                           std::fabs(b - s.a);
  return out;
}

KernelValue weber_diag(const KernelSpec& s) {
  const double h = 10.0 * detail::diagonal_switch(s.a);
  const WeberBoundary A = weber_w_boundary_reference(s.a, s.R);
  const auto numerator = [&](double db) {
    const WeberBoundary B = weber_w_boundary_reference(s.a + db, s.R);
    return weber_bracket(A, B, false) - weber_bracket(A, B, true);
  };
  const double noise = weber_bracket_noise(A, A, false) +
                       weber_bracket_noise(A, A, true);
  // d(zeta)/da = -ln x + Re psi(1/2 + i a)/2: logarithmic in the cutoff.
  const double rate = std::log(std::max(s.R, 2.0)) + 1.0;
  return fd_derivative(numerator, h, noise, rate);
}

// --------------------------------------------------------------- validate

[[noreturn]] void fail_domain(const std::string& msg) {
  throw std::domain_error("KernelSpec: " + msg);
}

void check_angles(double theta, double phi, const char* which) {
  if (!(theta >= 0.0 && theta <= PI)) {
    fail_domain(std::string(which) + " theta must lie in [0, pi]");
  }
  if (!(phi >= -PI && phi <= PI)) {
    fail_domain(std::string(which) + " phi must lie in [-pi, pi]");
  }
}

}  // namespace

const char* family_name(Family family) {
  for (const FamilyRow& row : kFamilies) {
    if (row.family == family) return row.name;
  }
  throw std::invalid_argument("family_name: unknown family tag");
}

Family family_from_name(const std::string& name) {
  for (const FamilyRow& row : kFamilies) {
    if (name == row.name) return row.family;
  }
  throw std::invalid_argument("unknown kernel family '" + name + "'");
}

bool family_is_integral(Family family) {
  return family == Family::kBesselHankel || family == Family::kCoulomb ||
         family == Family::kAiry || family == Family::kWeber;
}

bool family_is_series(Family family) {
  return family == Family::kLegendreSeries ||
         family == Family::kHermiteSeries ||
         family == Family::kLaguerreSeries ||
         family == Family::kSphericalSeries;
}

bool family_is_classical(Family family) {
  return family == Family::kClassicalGaussian ||
         family == Family::kClassicalCauchy ||
         family == Family::kClassicalSinc;
}

void KernelSpec::validate() const {
  if (family_is_integral(family) || family_is_classical(family)) {
    if (!(R > 0.0) || !std::isfinite(R)) fail_domain("cutoff R must be > 0");
  } else {
    if (n < 0) fail_domain("series order n must be >= 0");
  }
  switch (family) {
    case Family::kBesselHankel:
      if (!(nu > -1.0) || !std::isfinite(nu)) fail_domain("requires nu > -1");
      if (!(a > 0.0)) fail_domain("Bessel anchor must be > 0");
      break;
    case Family::kCoulomb:
      if (l < 0) fail_domain("requires l >= 0");
      if (!(a > 0.0)) fail_domain("Coulomb anchor must be > 0");
      break;
    case Family::kAiry:
      if (!std::isfinite(a)) fail_domain("Airy anchor must be finite");
      break;
    case Family::kWeber:
      if (!(std::fabs(a) <= 5.0)) {
        fail_domain("Weber parameters are limited to |a| <= 5");
      }
      break;
    case Family::kLegendreSeries:
      if (!(a > -1.0 && a < 1.0)) {
        fail_domain("Legendre anchor must lie in (-1, 1)");
      }
      break;
    case Family::kHermiteSeries:
      if (!std::isfinite(a)) fail_domain("Hermite anchor must be finite");
      break;
    case Family::kLaguerreSeries:
      if (!(alpha > -1.0)) fail_domain("requires alpha > -1");
      if (!(a > 0.0)) fail_domain("Laguerre anchor must be > 0");
      break;
    case Family::kSphericalSeries:
      check_angles(theta1, phi1, "anchor");
      break;
    case Family::kClassicalGaussian:
    case Family::kClassicalCauchy:
    case Family::kClassicalSinc:
      if (!std::isfinite(a)) fail_domain("anchor must be finite");
      break;
  }
}

std::string KernelSpec::params_string() const {
  char buf[64];
  switch (family) {
    case Family::kBesselHankel:
      std::snprintf(buf, sizeof buf, "nu=%g", nu);
      return buf;
    case Family::kCoulomb:
      std::snprintf(buf, sizeof buf, "l=%d", l);
      return buf;
    case Family::kLaguerreSeries:
      std::snprintf(buf, sizeof buf, "alpha=%g", alpha);
      return buf;
    default:
      return "";
  }
}

KernelValue bessel_kernel_closed(const KernelSpec& spec, double x) {
  spec.validate();
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("bessel_kernel_closed: requires x > 0");
  }
  const double d = detail::diagonal_switch(spec.a);
  if (std::fabs(x - spec.a) >= d) return bessel_offdiag(spec, x);
  return blend_window(x, spec.a, d, bessel_offdiag(spec, spec.a - d),
                      bessel_diag(spec), bessel_offdiag(spec, spec.a + d));
}

KernelValue coulomb_kernel_closed(const KernelSpec& spec, double x) {
  spec.validate();
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("coulomb_kernel_closed: requires x > 0");
  }
  const double d = detail::diagonal_switch(spec.a);
  if (std::fabs(x - spec.a) >= d) return coulomb_offdiag(spec, x);
  return blend_window(x, spec.a, d, coulomb_offdiag(spec, spec.a - d),
                      coulomb_diag(spec), coulomb_offdiag(spec, spec.a + d));
}

KernelValue airy_kernel_closed(const KernelSpec& spec, double x) {
  spec.validate();
  if (!std::isfinite(x)) {
    throw std::domain_error("airy_kernel_closed: requires finite x");
  }
  const double d = detail::diagonal_switch(spec.a);
  if (std::fabs(x - spec.a) >= d) return airy_offdiag(spec, x);
  return blend_window(x, spec.a, d, airy_offdiag(spec, spec.a - d),
                      airy_diag(spec), airy_offdiag(spec, spec.a + d));
}

KernelValue weber_kernel_closed(const KernelSpec& spec, double b) {
  spec.validate();
  if (!(std::fabs(b) <= 5.0)) {
    throw std::domain_error(
        "weber_kernel_closed: parameters are limited to |b| <= 5");
  }
  const double d = detail::diagonal_switch(spec.a);
  if (std::fabs(b - spec.a) >= d) return weber_offdiag(spec, b);
  return blend_window(b, spec.a, d, weber_offdiag(spec, spec.a - d),
                      weber_diag(spec), weber_offdiag(spec, spec.a + d));
}

KernelValue kernel_closed(const KernelSpec& spec, double x_or_b) {
  switch (spec.family) {
    case Family::kBesselHankel: return bessel_kernel_closed(spec, x_or_b);
    case Family::kCoulomb: return coulomb_kernel_closed(spec, x_or_b);
    case Family::kAiry: return airy_kernel_closed(spec, x_or_b);
    case Family::kWeber: return weber_kernel_closed(spec, x_or_b);
    default:
      throw std::invalid_argument(
          "kernel_closed: not an integral kernel family");
  }
}

double series_kernel(const KernelSpec& spec, double t, double x) {
  const int n = spec.n;
  if (n < 0) throw std::domain_error("series_kernel: requires n >= 0");
  switch (spec.family) {
    case Family::kLegendreSeries: {
      if (!(std::fabs(t) <= 1.0 && std::fabs(x) <= 1.0)) {
        throw std::domain_error("series_kernel: Legendre needs t, x in [-1,1]");
      }
      std::vector<double> pt, px;
      legendre_p_all(n, t, pt);
      legendre_p_all(n, x, px);
      detail::KahanSum sum;
      for (int k = 0; k <= n; ++k) sum.add((k + 0.5) * pt[k] * px[k]);
      return sum.value();
    }
    case Family::kHermiteSeries: {
      // e^{-t^2} sum htilde_k(t) htilde_k(x)
      //   = e^{(x^2-t^2)/2} sum [htilde_k(t) e^{-t^2/2}][htilde_k(x) e^{-x^2/2}].
      if (!(std::fabs(t) <= 30.0 && std::fabs(x) <= 30.0)) {
        throw std::domain_error(
            "series_kernel: Hermite arguments limited to |t|, |x| <= 30");
      }
      std::vector<double> ut, ux;
      hermite_weighted_all(n, t, ut);
      hermite_weighted_all(n, x, ux);
      detail::KahanSum sum;
      for (int k = 0; k <= n; ++k) sum.add(ut[k] * ux[k]);
      return std::exp(0.5 * (x * x - t * t)) * sum.value();
    }
    case Family::kLaguerreSeries: {
      // e^{-t} t^alpha sum ltilde_k(t) ltilde_k(x)
      //   = t^alpha e^{(x-t)/2} sum [ltilde_k(t) e^{-t/2}][ltilde_k(x) e^{-x/2}].
      if (!(t > 0.0 && x > 0.0)) {
        throw std::domain_error("series_kernel: Laguerre needs t, x > 0");
      }
      if (!(t <= 1200.0 && x <= 1200.0)) {
        throw std::domain_error(
            "series_kernel: Laguerre arguments limited to t, x <= 1200");
      }
      std::vector<double> vt, vx;
      laguerre_weighted_all(n, spec.alpha, t, vt);
      laguerre_weighted_all(n, spec.alpha, x, vx);
      detail::KahanSum sum;
      for (int k = 0; k <= n; ++k) sum.add(vt[k] * vx[k]);
      return std::pow(t, spec.alpha) * std::exp(0.5 * (x - t)) * sum.value();
    }
    default:
      throw std::invalid_argument("series_kernel: not a 1-D series family");
  }
}

double spherical_kernel(int n, double theta1, double phi1, double theta2,
                        double phi2) {
  if (n < 0) throw std::domain_error("spherical_kernel: requires n >= 0");
  check_angles(theta1, phi1, "first");
  check_angles(theta2, phi2, "second");
  return std::sin(theta2) *
         spherical_closure_sum(n, theta1, phi1, theta2, phi2);
}

double classical_sequence(Family kind, double n, double x, double a) {
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::domain_error("classical_sequence: requires n > 0");
  }
  const double u = x - a;
  switch (kind) {
    case Family::kClassicalGaussian:
      return std::sqrt(n / PI) * std::exp(-n * u * u);
    case Family::kClassicalCauchy:
      return (n / PI) / (1.0 + n * n * u * u);
    case Family::kClassicalSinc: {
      const double w = n * u;
      // sin(w)/w evaluates the continuous limit n/pi at w = 0 exactly.
      return (n / PI) * (w == 0.0 ? 1.0 : std::sin(w) / w);
    }
    default:
      throw std::invalid_argument(
          "classical_sequence: not a classical family");
  }
}

namespace detail {

double diagonal_switch(double a) { return 1e-4 * std::max(1.0, std::fabs(a)); }

double kernel_bruteforce(const KernelSpec& spec, double x_or_b,
                         double abs_tol) {
  spec.validate();
  QuadratureConfig cfg;
  cfg.abs_tol = abs_tol;
  cfg.rel_tol = 1e-10;
  cfg.max_subdivisions = 40000;
  switch (spec.family) {
    case Family::kBesselHankel: {
      const double x = x_or_b;
      const auto f = [&](double t) {
        return bessel_j(spec.nu, x * t).value *
               bessel_j(spec.nu, spec.a * t).value * t;
      };
      if (spec.nu >= -0.4) {
        return x * integrate_adaptive(f, 0.0, spec.R, cfg).value;
      }
      // The integrand is ~t^{2nu+1} at 0; t = u^p flattens it to u^{p(2nu+2)-1}.
      const int p = static_cast<int>(std::ceil(1.0 / (1.0 + spec.nu))) + 2;
      const auto g = [&](double u) {
        const double t = std::pow(u, p);
        return f(t) * p * std::pow(u, p - 1);
      };
      return x *
             integrate_adaptive(g, 0.0, std::pow(spec.R, 1.0 / p), cfg).value;
    }
    case Family::kCoulomb: {
      const auto f = [&](double r) {
        return coulomb_s(x_or_b, spec.l, r).s * coulomb_s(spec.a, spec.l, r).s;
      };
      return integrate_adaptive(f, 0.0, spec.R, cfg).value;
    }
    case Family::kAiry: {
      // Upper cut where both factors decay like e^{-(2/3)w^{3/2}}: w = 9
      // leaves a tail below 1e-14 of the oscillation scale.
      const double upper = std::max(x_or_b, spec.a) + 9.0;
      const auto f = [&](double t) {
        return airy_ai(t - x_or_b).value * airy_ai(t - spec.a).value;
      };
      return integrate_adaptive(f, -spec.R, upper, cfg).value;
    }
    case Family::kWeber: {
      const auto f = [&](double xp) {
        return weber_w_reference(spec.a, xp).value *
               weber_w_reference(x_or_b, xp).value;
      };
      return integrate_adaptive(f, -spec.R, spec.R, cfg).value;
    }
    default:
      throw std::invalid_argument(
          "kernel_bruteforce: not an integral kernel family");
  }
}

}  // namespace detail

}  // namespace deltakern
