#pragma once

#include "deltakern/common.hpp"

namespace deltakern {

// Airy function Ai and its derivative on the real line.
//
// Branches:
//   z <  -9 : oscillatory asymptotic expansion (DLMF 9.7.9 / 9.7.10),
//   -9..6   : Maclaurin series, long double accumulation,
//   6..8    : Laplace integral for the modified Bessel forms
//             Ai(z) = sqrt(z/3)/pi K_{1/3}(xi), Ai'(z) = -z/(pi sqrt(3))
//             K_{2/3}(xi) with xi = (2/3) z^{3/2}  (DLMF 9.6.1, 10.32.8),
//   z >= 8  : exponentially small asymptotic expansion (DLMF 9.7.5 / 9.7.6).
//
// The branch seams keep the relative error (envelope-relative on the
// oscillatory side) at or below ~1e-11 for |z| <= 200.
EvalResult airy_ai(double z);
EvalResult airy_ai_prime(double z);

namespace detail {
// Branch boundaries, exposed so seam-agreement tests can probe both sides.
inline constexpr double kAiryNegAsymptotic = -9.0;
inline constexpr double kAirySeriesMax = 6.0;
inline constexpr double kAiryPosAsymptotic = 8.0;
}  // namespace detail

}  // namespace deltakern
