#pragma once

#include <vector>

#include "deltakern/common.hpp"

namespace deltakern {

// Classical orthogonal polynomials via three-term recurrences.  The *_all
// variants fill out[k] for k = 0..n and exist because the series kernels
// need every order at once.

// Legendre P_n on [-1, 1].
double legendre_p(int n, double x);
void legendre_p_all(int n, double x, std::vector<double>& out);

// Physicists' Hermite H_n (plain, overflows near n ~ 150 for |x| ~ 1; use
// the normalized variant for sums).
double hermite_h(int n, double x);

// Orthonormal Hermite functions-without-weight: htilde_k = H_k /
// sqrt(2^k k! sqrt(pi)), so Int htilde_j htilde_k e^{-x^2} dx = delta_jk.
// Magnitudes stay ~e^{x^2/2}, so sums to large n do not overflow.
void hermite_orthonormal_all(int n, double x, std::vector<double>& out);

// Generalized Laguerre L_n^alpha, alpha > -1.
double laguerre_l(int n, double alpha, double x);

// Orthonormal variant: ltilde_k = L_k^alpha sqrt(k! / Gamma(k+alpha+1)),
// so Int ltilde_j ltilde_k e^{-t} t^alpha dt = delta_jk.
void laguerre_orthonormal_all(int n, double alpha, double x,
                              std::vector<double>& out);

// Weighted variants: the same recurrences seeded with half the orthogonality
// weight folded in, out[k] = htilde_k(x) e^{-x^2/2} (resp. ltilde_k(x)
// e^{-x/2}).  The recurrences are linear, so scaling the seed scales every
// term; all intermediates stay O(1) even for large |x|.
void hermite_weighted_all(int n, double x, std::vector<double>& out);
void laguerre_weighted_all(int n, double alpha, double x,
                           std::vector<double>& out);

}  // namespace deltakern
