#ifndef DELTAKERN_COMMON_HPP
#define DELTAKERN_COMMON_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace deltakern {

inline constexpr double PI = 3.14159265358979323846;
inline constexpr double SQRT_PI = 1.7724538509055160273;
inline constexpr long double PI_L = 3.141592653589793238462643383279502884L;

// Thrown when an evaluation fails for numerical reasons (non-convergence,
// tail-estimate failure, loss of monotonicity in a phase partition, ...).
// Domain violations use std::domain_error directly.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

enum class Method {
  series,
  asymptotic,
  recurrence,
  ode,
  integral_representation,
};

inline const char* method_name(Method m) {
  switch (m) {
    case Method::series: return "series";
    case Method::asymptotic: return "asymptotic";
    case Method::recurrence: return "recurrence";
    case Method::ode: return "ode";
    case Method::integral_representation: return "integral-representation";
  }
  return "?";
}

// Value plus an absolute error estimate and the evaluation branch taken.
struct EvalResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  Method method = Method::series;
};

namespace detail {

// Compensated (Kahan) accumulator; used wherever a long deterministic sum
// feeds a tolerance decision.
class KahanSum {
public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

private:
  double s_ = 0.0;
  double c_ = 0.0;
};

}  // namespace detail

}  // namespace deltakern

#endif
