#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "deltakern/common.hpp"
#include "deltakern/kernels.hpp"
#include "deltakern/orthopoly.hpp"

using namespace deltakern;

namespace {

KernelSpec integral_spec(Family f, double R, double a) {
  KernelSpec s;
  s.family = f;
  s.R = R;
  s.a = a;
  return s;
}

}  // namespace

TEST_CASE("closed forms match the defining integrals at fixed spots") {
  // Random-draw coverage lives in the self-test battery; these are cheap
  // pinned spots that fail loudly if a boundary term picks up a sign.
  {
    KernelSpec s = integral_spec(Family::kBesselHankel, 8.0, 1.2);
    s.nu = 0.5;
    const double closed = kernel_closed(s, 2.0).value;
    const double brute = detail::kernel_bruteforce(s, 2.0, 1e-11);
    CHECK(std::abs(closed - brute) <= 1e-9);
  }
  {
    KernelSpec s = integral_spec(Family::kCoulomb, 6.0, 1.5);
    s.l = 1;
    const double closed = kernel_closed(s, 0.7).value;
    const double brute = detail::kernel_bruteforce(s, 0.7, 1e-8);
    CHECK(std::abs(closed - brute) <= 1e-6);
  }
  {
    KernelSpec s = integral_spec(Family::kAiry, 7.0, 0.4);
    const double closed = kernel_closed(s, -0.3).value;
    const double brute = detail::kernel_bruteforce(s, -0.3, 1e-11);
    CHECK(std::abs(closed - brute) <= 1e-9);
  }
  {
    KernelSpec s = integral_spec(Family::kWeber, 6.0, 0.3);
    const double closed = kernel_closed(s, 1.1).value;
    const double brute = detail::kernel_bruteforce(s, 1.1, 1e-8);
    CHECK(std::abs(closed - brute) <= 1e-6);
  }
}

TEST_CASE("integral kernels have the symmetry of their defining integrals") {
  // Bessel carries a leading factor x, so delta_R(x,a)/x is the symmetric
  // part; the other three defining integrals are symmetric as they stand.
  {
    KernelSpec s = integral_spec(Family::kBesselHankel, 11.0, 0.8);
    s.nu = 1.5;
    KernelSpec sw = s;
    sw.a = 2.3;
    const double k1 = kernel_closed(s, 2.3).value / 2.3;
    const double k2 = kernel_closed(sw, 0.8).value / 0.8;
    CHECK(std::abs(k1 - k2) <= 1e-12 * std::max(1.0, std::abs(k1)));
  }
  {
    KernelSpec s = integral_spec(Family::kCoulomb, 9.0, 1.1);
    KernelSpec sw = s;
    sw.a = 2.6;
    const double k1 = kernel_closed(s, 2.6).value;
    const double k2 = kernel_closed(sw, 1.1).value;
    CHECK(std::abs(k1 - k2) <= 1e-12 * std::max(1.0, std::abs(k1)));
  }
  {
    KernelSpec s = integral_spec(Family::kAiry, 13.0, -0.6);
    KernelSpec sw = s;
    sw.a = 1.4;
    const double k1 = kernel_closed(s, 1.4).value;
    const double k2 = kernel_closed(sw, -0.6).value;
    CHECK(std::abs(k1 - k2) <= 1e-12 * std::max(1.0, std::abs(k1)));
  }
  {
    KernelSpec s = integral_spec(Family::kWeber, 7.0, -0.9);
    KernelSpec sw = s;
    sw.a = 1.7;
    const double k1 = kernel_closed(s, 1.7).value;
    const double k2 = kernel_closed(sw, -0.9).value;
    CHECK(std::abs(k1 - k2) <= 1e-11 * std::max(1.0, std::abs(k1)));
  }
}

TEST_CASE("diagonal blend is continuous across the switch radius") {
  struct Probe {
    Family family;
    double R;
    double a;
    double nu;
    int l;
  };
  const Probe probes[] = {
      {Family::kBesselHankel, 10.0, 1.0, 0.0, 0},
      {Family::kCoulomb, 8.0, 1.3, 0.0, 1},
      {Family::kAiry, 9.0, 0.2, 0.0, 0},
      {Family::kWeber, 6.0, 0.5, 0.0, 0},
  };
  for (const Probe& p : probes) {
    KernelSpec s = integral_spec(p.family, p.R, p.a);
    s.nu = p.nu;
    s.l = p.l;
    const double d = detail::diagonal_switch(p.a);

    // Straddle the branch boundary: the Lagrange window is exact at the knot,
    // so inside/outside values a hair apart must coincide to rounding.
    const KernelValue in = kernel_closed(s, p.a + d * (1.0 - 1e-7));
    const KernelValue out = kernel_closed(s, p.a + d * (1.0 + 1e-7));
    CAPTURE(family_name(p.family));
    CHECK(in.near_diagonal);
    CHECK(!out.near_diagonal);
    CHECK(std::abs(in.value - out.value) <=
          1e-7 * std::max(1.0, std::abs(out.value)));

    // The window reproduces the quadratic through its three knots.
    const double vm = kernel_closed(s, p.a - d).value;
    const double v0 = kernel_closed(s, p.a).value;
    const double vp = kernel_closed(s, p.a + d).value;
    for (double u : {-0.7, -0.3, 0.5, 0.9}) {
      const double interp = 0.5 * u * (u - 1.0) * vm + (1.0 - u * u) * v0 +
                            0.5 * u * (u + 1.0) * vp;
      const double got = kernel_closed(s, p.a + u * d).value;
      CHECK(std::abs(got - interp) <= 1e-10 * std::max(1.0, std::abs(got)));
    }

    // On-diagonal value carries the near_diagonal flag and a finite estimate.
    const KernelValue diag = kernel_closed(s, p.a);
    CHECK(diag.near_diagonal);
    CHECK(std::isfinite(diag.abs_error_estimate));
  }
}

TEST_CASE("legendre series kernel collapses by Christoffel-Darboux") {
  const int n = 12;
  const double t = 0.37, x = -0.54;
  KernelSpec s;
  s.family = Family::kLegendreSeries;
  s.n = n;
  s.a = x;
  std::vector<double> pt, px;
  legendre_p_all(n + 1, t, pt);
  legendre_p_all(n + 1, x, px);
  const double collapsed =
      0.5 * (n + 1.0) * (pt[n + 1] * px[n] - pt[n] * px[n + 1]) / (t - x);
  CHECK(std::abs(series_kernel(s, t, x) - collapsed) <= 1e-12);
}

TEST_CASE("hermite series kernel collapses by Christoffel-Darboux") {
  const int n = 12;
  const double t = 0.8, x = -1.4;
  KernelSpec s;
  s.family = Family::kHermiteSeries;
  s.n = n;
  s.a = x;
  std::vector<double> ht, hx;
  hermite_orthonormal_all(n + 1, t, ht);
  hermite_orthonormal_all(n + 1, x, hx);
  const double b = std::sqrt((n + 1.0) / 2.0);
  const double collapsed = std::exp(-t * t) * b *
                           (ht[n + 1] * hx[n] - ht[n] * hx[n + 1]) / (t - x);
  CHECK(std::abs(series_kernel(s, t, x) - collapsed) <= 1e-12);
}

TEST_CASE("laguerre series kernel collapses by Christoffel-Darboux") {
  const int n = 9;
  const double alpha = 0.7;
  const double t = 2.1, x = 3.9;
  KernelSpec s;
  s.family = Family::kLaguerreSeries;
  s.n = n;
  s.alpha = alpha;
  s.a = x;
  std::vector<double> lt, lx;
  laguerre_orthonormal_all(n + 1, alpha, t, lt);
  laguerre_orthonormal_all(n + 1, alpha, x, lx);
  const double b = -std::sqrt((n + 1.0) * (n + 1.0 + alpha));
  const double collapsed = std::exp(-t) * std::pow(t, alpha) * b *
                           (lt[n + 1] * lx[n] - lt[n] * lx[n + 1]) / (t - x);
  CHECK(std::abs(series_kernel(s, t, x) - collapsed) <= 1e-12);
}

TEST_CASE("spherical kernel at order zero is the uniform density") {
  // sin(theta2) * |Y00|^2 = sin(theta2) / (4 pi), independent of angles.
  for (double th2 : {0.3, 1.6, 2.9}) {
    CHECK(std::abs(spherical_kernel(0, 0.7, -0.2, th2, 2.0) -
                   std::sin(th2) / (4.0 * PI)) <= 1e-15);
  }
}

TEST_CASE("classical sequences: exact closed-point identities") {
  // Peak heights.
  CHECK(std::abs(classical_sequence(Family::kClassicalGaussian, 300.0, 0.5,
                                    0.5) -
                 std::sqrt(300.0 / PI)) <= 1e-12);
  CHECK(std::abs(classical_sequence(Family::kClassicalCauchy, 300.0, 0.5,
                                    0.5) -
                 300.0 / PI) <= 1e-12);
  CHECK(std::abs(classical_sequence(Family::kClassicalSinc, 300.0, 0.5, 0.5) -
                 300.0 / PI) <= 1e-12);
  // Cauchy half maximum exactly at u = 1/n.
  const double n = 40.0;
  CHECK(std::abs(classical_sequence(Family::kClassicalCauchy, n, 1.0 + 1.0 / n,
                                    1.0) -
                 0.5 * n / PI) <= 1e-12);
  // Sinc first zero at u = pi/n.
  CHECK(std::abs(classical_sequence(Family::kClassicalSinc, n, 1.0 + PI / n,
                                    1.0)) <= 1e-13 * n);
  // Sinc is continuous through the removable singularity.
  CHECK(std::abs(classical_sequence(Family::kClassicalSinc, 1e4, 0.5 + 1e-12,
                                    0.5) -
                 1e4 / PI) <= 1e-9);
  // Symmetry about the anchor.
  for (Family f : {Family::kClassicalGaussian, Family::kClassicalCauchy,
                   Family::kClassicalSinc}) {
    const double left = classical_sequence(f, 25.0, 0.8 - 0.13, 0.8);
    const double right = classical_sequence(f, 25.0, 0.8 + 0.13, 0.8);
    CHECK(std::abs(left - right) <= 1e-13 * std::max(1.0, std::abs(left)));
  }
}

TEST_CASE("family tags round-trip and classify") {
  for (Family f : {Family::kBesselHankel, Family::kCoulomb, Family::kAiry,
                   Family::kWeber, Family::kLegendreSeries,
                   Family::kHermiteSeries, Family::kLaguerreSeries,
                   Family::kSphericalSeries, Family::kClassicalGaussian,
                   Family::kClassicalCauchy, Family::kClassicalSinc}) {
    CHECK(family_from_name(family_name(f)) == f);
    const int kinds = int(family_is_integral(f)) + int(family_is_series(f)) +
                      int(family_is_classical(f));
    CHECK(kinds == 1);
  }
  CHECK_THROWS_AS((void)family_from_name("bogus"), std::invalid_argument);
}

TEST_CASE("domain guards refuse out-of-range inputs") {
  KernelSpec s = integral_spec(Family::kBesselHankel, 10.0, 1.0);

  SUBCASE("validate rejects bad family parameters") {
    KernelSpec bad = s;
    bad.nu = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = s;
    bad.R = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = s;
    bad.a = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = integral_spec(Family::kWeber, 6.0, 5.5);
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = KernelSpec{};
    bad.family = Family::kLegendreSeries;
    bad.n = 4;
    bad.a = 1.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = KernelSpec{};
    bad.family = Family::kLaguerreSeries;
    bad.n = 4;
    bad.a = 1.0;
    bad.alpha = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = KernelSpec{};
    bad.family = Family::kHermiteSeries;
    bad.n = -1;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad = KernelSpec{};
    bad.family = Family::kSphericalSeries;
    bad.n = 3;
    bad.theta1 = -0.1;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
  }

  SUBCASE("closed-form evaluators refuse bad points") {
    CHECK_THROWS_AS((void)kernel_closed(s, 0.0), std::domain_error);
    KernelSpec w = integral_spec(Family::kWeber, 6.0, 0.0);
    CHECK_THROWS_AS((void)kernel_closed(w, 5.5), std::domain_error);
    KernelSpec leg;
    leg.family = Family::kLegendreSeries;
    leg.n = 5;
    leg.a = 0.2;
    CHECK_THROWS_AS((void)kernel_closed(leg, 0.2), std::invalid_argument);
  }

  SUBCASE("series kernels refuse points off their weight support") {
    KernelSpec leg;
    leg.family = Family::kLegendreSeries;
    leg.n = 5;
    leg.a = 0.2;
    CHECK_THROWS_AS((void)series_kernel(leg, 1.2, 0.2), std::domain_error);
    KernelSpec lag;
    lag.family = Family::kLaguerreSeries;
    lag.n = 5;
    lag.a = 1.0;
    CHECK_THROWS_AS((void)series_kernel(lag, 0.0, 1.0), std::domain_error);
    KernelSpec neg;
    neg.family = Family::kHermiteSeries;
    neg.n = -1;
    neg.a = 0.0;
    CHECK_THROWS_AS((void)series_kernel(neg, 0.1, 0.0), std::domain_error);
    KernelSpec notseries = s;
    CHECK_THROWS_AS((void)series_kernel(notseries, 1.0, 1.0),
                    std::invalid_argument);
  }

  SUBCASE("classical sequences require n > 0") {
    CHECK_THROWS_AS(
        (void)classical_sequence(Family::kClassicalGaussian, 0.0, 1.0, 0.0),
        std::domain_error);
  }
}
