#include "deltakern/detail/gauss_legendre.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace deltakern::detail {

namespace {

GaussRule build_rule(int n) {
  GaussRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  const long double pi = 3.141592653589793238462643383279502884L;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-like initial guess for the i-th root of P_n.
    long double x = std::cos(pi * (i + 0.75L) / (n + 0.5L));
    long double pp = 0.0L;
    for (int it = 0; it < 100; ++it) {
      long double p0 = 1.0L, p1 = x;
      for (int k = 2; k <= n; ++k) {
        long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0L);
      const long double dx = p1 / pp;
      x -= dx;
      if (std::fabs((double)dx) < 1e-17) {
        // one more pass after convergence, then stop
        p0 = 1.0L;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
          long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        pp = n * (x * p1 - p0) / (x * x - 1.0L);
        break;
      }
    }
    const long double w = 2.0L / ((1.0L - x * x) * pp * pp);
    rule.x[i] = (double)(-x);
    rule.w[i] = (double)w;
    rule.x[n - 1 - i] = (double)x;
    rule.w[n - 1 - i] = (double)w;
  }
  if (n % 2 == 1) rule.x[n / 2] = 0.0;
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static std::mutex mtx;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

}  // namespace deltakern::detail
