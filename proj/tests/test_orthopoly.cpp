#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "deltakern/common.hpp"
#include "deltakern/orthopoly.hpp"
#include "deltakern/spherical.hpp"

using namespace deltakern;

namespace {

// Reference values computed with mpmath at 40 significant digits.
constexpr double kP7_043 = 0.060820108859314375;
constexpr double kH9_13 = -10607.204468224;
constexpr double kL6_07_21 = 1.0079793;
constexpr double kHtilde5w_11 = -0.19475819764893973068;
constexpr double kLtilde4w_07_21 = -0.076363310322400906483;

const std::complex<double> kY32(-0.21563119457589676494, 0.29623910686696533632);
const std::complex<double> kY11(-0.11242032074408032306, -0.2208789108529227724);
const std::complex<double> kY2m1(-0.26925678142397614144, -0.11383994128532055539);

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

TEST_CASE("pinned polynomial values") {
  CHECK(std::abs(legendre_p(7, 0.43) - kP7_043) <= 1e-15);
  CHECK(std::abs(hermite_h(9, 1.3) / kH9_13 - 1.0) <= 1e-13);
  CHECK(std::abs(laguerre_l(6, 0.7, 2.1) - kL6_07_21) <= 1e-13);
}

TEST_CASE("legendre_p_all agrees with single evaluations") {
  std::vector<double> all;
  for (double x : {-0.97, -0.2, 0.0, 0.43, 0.999}) {
    legendre_p_all(12, x, all);
    REQUIRE(all.size() == 13);
    for (int k = 0; k <= 12; ++k) {
      CHECK(std::abs(all[k] - legendre_p(k, x)) <= 1e-14);
    }
  }
}

TEST_CASE("legendre three-term recurrence") {
  // (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dx(-1.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const double x = dx(rng);
    const int n = 1 + trial % 20;
    const double lhs = (n + 1.0) * legendre_p(n + 1, x);
    const double rhs = (2.0 * n + 1.0) * x * legendre_p(n, x) -
                       n * legendre_p(n - 1, x);
    CHECK(std::abs(lhs - rhs) <= 1e-13);
  }
}

TEST_CASE("legendre endpoint values") {
  for (int n : {0, 1, 5, 12, 31}) {
    CHECK(legendre_p(n, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    const double expect = (n % 2 == 0) ? 1.0 : -1.0;
    CHECK(legendre_p(n, -1.0) == doctest::Approx(expect).epsilon(1e-14));
  }
}

TEST_CASE("hermite three-term recurrence") {
  // H_{n+1} = 2x H_n - 2n H_{n-1}, checked in relative scale since H grows fast.
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> dx(-3.0, 3.0);
  for (int trial = 0; trial < 40; ++trial) {
    const double x = dx(rng);
    const int n = 1 + trial % 15;
    const double lhs = hermite_h(n + 1, x);
    const double rhs = 2.0 * x * hermite_h(n, x) - 2.0 * n * hermite_h(n - 1, x);
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
  }
}

TEST_CASE("hermite orthonormal scaling") {
  // htilde_k = H_k / sqrt(2^k k! sqrt(pi))
  std::vector<double> all;
  for (double x : {-1.9, 0.0, 1.1, 2.6}) {
    hermite_orthonormal_all(10, x, all);
    REQUIRE(all.size() == 11);
    for (int k = 0; k <= 10; ++k) {
      const double norm = std::sqrt(std::pow(2.0, k) * factorial(k) * SQRT_PI);
      const double expect = hermite_h(k, x) / norm;
      CHECK(std::abs(all[k] - expect) <=
            1e-13 * std::max(1.0, std::abs(expect)));
    }
  }
}

TEST_CASE("hermite weighted values stay bounded and hit the pin") {
  std::vector<double> w;
  hermite_weighted_all(5, 1.1, w);
  REQUIRE(w.size() == 6);
  CHECK(std::abs(w[5] - kHtilde5w_11) <= 1e-14);
  // The half-weight functions htilde_k e^{-x^2/2} are uniformly bounded.
  hermite_weighted_all(60, 3.7, w);
  for (double v : w) CHECK(std::abs(v) <= 1.0);
}

TEST_CASE("laguerre three-term recurrence") {
  // (n+1) L_{n+1} = (2n+1+alpha-x) L_n - (n+alpha) L_{n-1}
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> dx(0.05, 18.0);
  for (int trial = 0; trial < 40; ++trial) {
    const double x = dx(rng);
    const double alpha = 0.25 * (trial % 4);
    const int n = 1 + trial % 15;
    const double lhs = (n + 1.0) * laguerre_l(n + 1, alpha, x);
    const double rhs = (2.0 * n + 1.0 + alpha - x) * laguerre_l(n, alpha, x) -
                       (n + alpha) * laguerre_l(n - 1, alpha, x);
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
  }
}

TEST_CASE("laguerre weighted pin") {
  std::vector<double> w;
  laguerre_weighted_all(4, 0.7, 2.1, w);
  REQUIRE(w.size() == 5);
  CHECK(std::abs(w[4] - kLtilde4w_07_21) <= 1e-14);
}

TEST_CASE("laguerre orthonormal scaling at alpha = 0") {
  // At alpha = 0 the orthonormal polynomials coincide with L_n.
  std::vector<double> all;
  laguerre_orthonormal_all(8, 0.0, 1.3, all);
  REQUIRE(all.size() == 9);
  for (int k = 0; k <= 8; ++k) {
    CHECK(std::abs(all[k] - laguerre_l(k, 0.0, 1.3)) <= 1e-13);
  }
}

TEST_CASE("spherical harmonic pins") {
  CHECK(std::abs(spherical_harmonic(3, 2, 0.8, 1.1) - kY32) <= 1e-14);
  CHECK(std::abs(spherical_harmonic(1, 1, 0.8, 1.1) - kY11) <= 1e-14);
  CHECK(std::abs(spherical_harmonic(2, -1, 2.0, -0.4) - kY2m1) <= 1e-14);
  // l = 0, k = 0 is the constant 1 / sqrt(4 pi).
  CHECK(std::abs(spherical_harmonic(0, 0, 1.234, 5.0) -
                 std::complex<double>(1.0 / std::sqrt(4.0 * PI), 0.0)) <=
        1e-15);
}

TEST_CASE("spherical harmonic conjugation symmetry") {
  // Y_k^{-m} = (-1)^m conj(Y_k^m)
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> dth(0.05, PI - 0.05);
  std::uniform_real_distribution<double> dph(-PI, PI);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = trial % 9;
    const int m = k == 0 ? 0 : 1 + trial % k;
    const double th = dth(rng);
    const double ph = dph(rng);
    const std::complex<double> lhs = spherical_harmonic(k, -m, th, ph);
    const std::complex<double> rhs =
        ((m % 2 == 0) ? 1.0 : -1.0) * std::conj(spherical_harmonic(k, m, th, ph));
    CHECK(std::abs(lhs - rhs) <= 1e-14);
  }
}

TEST_CASE("normalized associated Legendre matches Y on the phi = 0 meridian") {
  // Y_k^m = Ptilde_k^m(cos theta) e^{i m phi}; at phi = 0 the harmonic is real.
  std::vector<double> p;
  for (int m : {0, 1, 3}) {
    for (double th : {0.4, 1.3, 2.8}) {
      normalized_assoc_legendre_all(m + 6, m, th, p);
      REQUIRE(p.size() == 7u);
      for (int k = m; k <= m + 6; ++k) {
        const std::complex<double> y = spherical_harmonic(k, m, th, 0.0);
        CHECK(std::abs(y.imag()) <= 1e-15);
        CHECK(std::abs(y.real() - p[k - m]) <= 1e-14);
      }
    }
  }
}

TEST_CASE("spherical harmonics are orthonormal against closure at order 0") {
  // Order-0 closure sum is Y_0^0(x1) conj(Y_0^0(x2)) = 1 / (4 pi).
  CHECK(std::abs(spherical_closure_sum(0, 0.7, 0.3, 2.1, -1.0) -
                 1.0 / (4.0 * PI)) <= 1e-15);
}

TEST_CASE("addition theorem across random orientation pairs") {
  // Sum_m Y_k^m(x1) conj(Y_k^m(x2)) = (2k+1)/(4 pi) P_k(cos gamma)
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> dth(0.05, PI - 0.05);
  std::uniform_real_distribution<double> dph(-PI, PI);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 1 + trial % 8;
    const double t1 = dth(rng), p1 = dph(rng);
    const double t2 = dth(rng), p2 = dph(rng);
    std::complex<double> sum = 0.0;
    for (int m = -k; m <= k; ++m) {
      sum += spherical_harmonic(k, m, t1, p1) *
             std::conj(spherical_harmonic(k, m, t2, p2));
    }
    double cg = std::sin(t1) * std::sin(t2) * std::cos(p1 - p2) +
                std::cos(t1) * std::cos(t2);
    cg = std::clamp(cg, -1.0, 1.0);
    const double expect = (2.0 * k + 1.0) / (4.0 * PI) * legendre_p(k, cg);
    CHECK(std::abs(sum.real() - expect) <= 1e-13);
    CHECK(std::abs(sum.imag()) <= 1e-13);
  }
}
