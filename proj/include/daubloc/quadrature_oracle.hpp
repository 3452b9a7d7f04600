#pragma once

// Brute-force reference integrator. Shares no code with gamma_core: it has
// its own long-double f_k and its own adaptive rule, so agreement between
// the two is meaningful. Only tests, the verify suites and the CLI's
// debugging flag link against it.

#include <cstdint>
#include <functional>

namespace daubloc::oracle {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::int64_t evaluations = 0;
};

/// f_k(r) = r^k e^{-r} / k! in extended precision.
double reference_fk(std::int64_t k, double r);

/// Adaptive bisection with a 7/15-point Gauss-Kronrod pair. A panel is accepted
/// once |K15 - G7| <= tol * (panel width / total width).
/// Throws ConvergenceError past 60 levels of bisection.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double tol);

/// int_a^b f_k with the range pre-split at the mode r = k. Requires 0 <= a <= b < inf.
QuadratureResult integrate_fk(std::int64_t k, double a, double b, double tol);

}  // namespace daubloc::oracle
