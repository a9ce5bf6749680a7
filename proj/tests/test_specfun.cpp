#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "deltakern/airy.hpp"
#include "deltakern/bessel.hpp"
#include "deltakern/common.hpp"
#include "deltakern/coulomb.hpp"
#include "deltakern/weber.hpp"

using namespace deltakern;

namespace {

// Reference values computed with mpmath at 40 significant digits.
constexpr double kJ0_25 = -0.048383776468197996327;
constexpr double kJhalf_37 = -0.21977625985052783486;
constexpr double kJ2_73 = -0.26559491188343691053;
constexpr double kJm03_12 = 0.48293308796906803242;
constexpr double kJp15_44 = -0.37377515943592768591;
constexpr double kJ0_120 = 0.071823415829156127576;

constexpr double kAi_17 = 0.054324792732919471188;
constexpr double kAi_m62 = -0.35642107366896141666;
constexpr double kAip_05 = -0.22491053266468389314;
constexpr double kAip_m33 = -0.070963617177835884113;
constexpr double kAi_14 = 9.9202054911923772663e-17;

// s(x, l, r) = F_l(-1/sqrt(x), sqrt(x) r) / (sqrt(pi) x^{1/4}).
constexpr double kS_1_0_5 = 0.51307975982143215912;
constexpr double kS_25_1_8 = 0.15677613079557630413;
constexpr double kS_049_2_12 = 0.5607025960064049353;

constexpr double kW_0_1 = 0.51877216085078408145;
constexpr double kWp_0_1 = -0.54297829410600114285;
constexpr double kW_2_35 = 0.011636561135941845649;
constexpr double kWp_2_35 = -0.03318023402323119806;
constexpr double kW_m15_6 = 0.51738873880904691502;
constexpr double kWp_m15_6 = -0.66860843026697969094;
constexpr double kW_03_m4 = -1.340697491060381871;
constexpr double kWp_03_m4 = 1.7110122540677299855;

constexpr double kWeberK2 = 0.0009337205518038968323;
constexpr double kWeberK3 = 0.000040349758719458735133;

void check_eval(const EvalResult& r, double pin, double floor_abs) {
  const double tol = std::max(floor_abs, 10.0 * r.abs_error_estimate);
  CHECK(std::abs(r.value - pin) <= tol);
}

}  // namespace

TEST_CASE("bessel_j against high-precision references") {
  check_eval(bessel_j(0.0, 2.5), kJ0_25, 1e-13);
  check_eval(bessel_j(0.5, 3.7), kJhalf_37, 1e-13);
  check_eval(bessel_j(2.0, 7.3), kJ2_73, 1e-13);
  check_eval(bessel_j(-0.3, 1.2), kJm03_12, 1e-13);
  check_eval(bessel_j(0.0, 120.0), kJ0_120, 1e-12);
  check_eval(bessel_j_prime(1.5, 4.4), kJp15_44, 1e-12);
}

TEST_CASE("bessel derivative consistent with centered differences") {
  const double h = 1e-5;
  for (double nu : {0.0, 0.7, 2.5}) {
    for (double t : {0.9, 6.0, 33.0}) {
      const double fd =
          (bessel_j(nu, t + h).value - bessel_j(nu, t - h).value) / (2.0 * h);
      CHECK(std::abs(fd - bessel_j_prime(nu, t).value) <= 1e-7);
    }
  }
}

TEST_CASE("airy_ai against high-precision references") {
  check_eval(airy_ai(1.7), kAi_17, 1e-14);
  check_eval(airy_ai(-6.2), kAi_m62, 1e-13);
  check_eval(airy_ai_prime(0.5), kAip_05, 1e-14);
  check_eval(airy_ai_prime(-3.3), kAip_m33, 1e-13);
  // Deep in the decaying tail the relative scale matters, not the absolute.
  const EvalResult tail = airy_ai(14.0);
  CHECK(std::abs(tail.value - kAi_14) <=
        std::max(1e-11 * std::abs(kAi_14), 10.0 * tail.abs_error_estimate));
}

TEST_CASE("coulomb s against regular Coulomb function references") {
  CHECK(std::abs(coulomb_s(1.0, 0, 5.0).s - kS_1_0_5) <= 1e-9);
  CHECK(std::abs(coulomb_s(2.5, 1, 8.0).s - kS_25_1_8) <= 1e-9);
  CHECK(std::abs(coulomb_s(0.49, 2, 12.0).s - kS_049_2_12) <= 1e-9);
}

TEST_CASE("coulomb s satisfies its radial equation") {
  // s'' = -(x + 2/r - l(l+1)/r^2) s, probed by second differences at
  // deterministically drawn (x, l, r).
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dx(0.1, 10.0);
  std::uniform_real_distribution<double> dr(1.0, 100.0);
  const double h = 1e-4;
  for (int i = 0; i < 100; ++i) {
    const double x = dx(rng);
    const int l = i % 3;
    const double r = dr(rng);
    const double s0 = coulomb_s(x, l, r).s;
    const double sp = coulomb_s(x, l, r + h).s;
    const double sm = coulomb_s(x, l, r - h).s;
    const double lhs = (sp - 2.0 * s0 + sm) / (h * h);
    const double rhs = -(x + 2.0 / r - l * (l + 1.0) / (r * r)) * s0;
    CAPTURE(x);
    CAPTURE(l);
    CAPTURE(r);
    CHECK(std::abs(lhs - rhs) <= 1e-5 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("coulomb derivative consistent with centered differences") {
  const double h = 1e-5;
  for (double x : {0.3, 1.0, 4.0}) {
    for (double r : {2.0, 17.0, 60.0}) {
      const CoulombEval e = coulomb_s(x, 1, r);
      const double fd =
          (coulomb_s(x, 1, r + h).s - coulomb_s(x, 1, r - h).s) / (2.0 * h);
      CHECK(std::abs(fd - e.s_prime) <= 1e-6);
    }
  }
}

TEST_CASE("coulomb normalization: closed Gamma form vs WKB measurement") {
  for (const auto& [x, l] :
       {std::pair<double, int>{0.5, 0}, {1.0, 0}, {2.5, 1}, {6.0, 2}}) {
    const double closed = coulomb_norm_constant(x, l);
    const double measured = detail::coulomb_norm_measured(x, l);
    CAPTURE(x);
    CAPTURE(l);
    CHECK(std::abs(closed / measured - 1.0) <= 1e-8);
  }
}

TEST_CASE("weber W against parabolic-cylinder references") {
  check_eval(weber_w(0.0, 1.0), kW_0_1, 1e-10);
  check_eval(weber_w(2.0, 3.5), kW_2_35, 1e-10);
  check_eval(weber_w(-1.5, 6.0), kW_m15_6, 1e-10);
  check_eval(weber_w(0.3, -4.0), kW_03_m4, 1e-10);
  check_eval(weber_w_prime(0.0, 1.0), kWp_0_1, 1e-9);
  check_eval(weber_w_prime(2.0, 3.5), kWp_2_35, 1e-9);
  check_eval(weber_w_prime(-1.5, 6.0), kWp_m15_6, 1e-9);
  check_eval(weber_w_prime(0.3, -4.0), kWp_03_m4, 1e-9);
}

TEST_CASE("weber cross-Wronskian W(a,x)W'(a,-x) + W'(a,x)W(a,-x) = -1") {
  for (double a : {-2.0, -0.4, 0.0, 1.1, 3.0}) {
    for (double x : {0.5, 2.0, 8.0, 15.0}) {
      const WeberBoundary b = weber_w_boundary_reference(a, x);
      const double w = b.w_plus.value * b.wp_minus.value +
                       b.wp_plus.value * b.w_minus.value;
      CAPTURE(a);
      CAPTURE(x);
      CHECK(std::abs(w + 1.0) <= 1e-8);
    }
  }
}

TEST_CASE("weber k(a) avoids cancellation for large a") {
  CHECK(std::abs(weber_k(2.0) / kWeberK2 - 1.0) <= 1e-12);
  CHECK(std::abs(weber_k(3.0) / kWeberK3 - 1.0) <= 1e-12);
  // k(a) k(-a)-free sanity: k(0) = sqrt(2) - 1 exactly.
  CHECK(std::abs(weber_k(0.0) - (std::sqrt(2.0) - 1.0)) <= 1e-15);
}

TEST_CASE("weber asymptotic branch stays inside its stated error") {
  for (double a : {-1.5, 0.0, 2.0}) {
    for (double x : {31.0, 45.0, 70.0, -31.0, -50.0}) {
      const EvalResult w = weber_w(a, x);
      const EvalResult ref = weber_w_reference(a, x);
      CAPTURE(a);
      CAPTURE(x);
      CHECK(std::abs(w.value - ref.value) <=
            w.abs_error_estimate + ref.abs_error_estimate + 1e-12);
    }
  }
}

TEST_CASE("weber amplitude bound at large |x|") {
  // |W(a,x) W(b,x)| stays within the envelope product
  // sqrt(2 k_a / x) * sqrt(2 / (k_b x)) combination; at b = a the envelope of
  // W(a,x)^2 + W(a,-x)^2-type sums is bounded by (k_a + 1/k_a) * (2/x).
  for (double a : {-1.0, 0.0, 1.5}) {
    const double ka = weber_k(a);
    const double bound = (ka + 1.0 / ka) * (2.0 / 40.0) * 1.1;
    const WeberBoundary b = weber_w_boundary_reference(a, 40.0);
    const double sum =
        b.w_plus.value * b.w_plus.value + b.w_minus.value * b.w_minus.value;
    CAPTURE(a);
    CHECK(sum <= bound);
  }
}
