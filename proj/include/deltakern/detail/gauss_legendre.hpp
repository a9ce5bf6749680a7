#ifndef DELTAKERN_DETAIL_GAUSS_LEGENDRE_HPP
#define DELTAKERN_DETAIL_GAUSS_LEGENDRE_HPP

#include <cstddef>
#include <vector>

namespace deltakern::detail {

struct GaussRule {
  std::vector<double> x;  // nodes on (-1, 1)
  std::vector<double> w;
};

// n-point Gauss-Legendre rule, computed once per n by Newton iteration on
// P_n and cached. Nodes converge to machine precision in a few iterations
// from the Chebyshev initial guess.
const GaussRule& gauss_legendre(int n);

// Sum f over the rule mapped to [a, b].
template <typename F>
double gauss_panel(const F& f, double a, double b, const GaussRule& rule) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.x.size(); ++i) {
    s += rule.w[i] * f(c + h * rule.x[i]);
  }
  return s * h;
}

}  // namespace deltakern::detail

#endif
