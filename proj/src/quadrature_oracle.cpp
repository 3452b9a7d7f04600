#include "daubloc/quadrature_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "daubloc/error.hpp"

namespace daubloc::oracle {

namespace {

constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5 and the centre.
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kMaxDepth = 60;

struct Panel {
  double a;
  double b;
  int depth;
};

struct PanelEstimate {
  double kronrod;
  double gauss;
};

PanelEstimate gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double sum = f(centre - dx) + f(centre + dx);
    kronrod += kKronrodWeights[j] * sum;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * sum;
  }
  return {kronrod * half, gauss * half};
}

}  // namespace

double reference_fk(std::int64_t k, double r) {
  if (r < 0.0) throw DomainError("reference_fk: negative radius");
  if (r == 0.0) return k == 0 ? 1.0 : 0.0;
  const long double rl = r;
  const long double log_value =
      static_cast<long double>(k) * std::log(rl) - rl - std::lgamma(static_cast<long double>(k) + 1.0L);
  return static_cast<double>(std::exp(log_value));
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  if (!(tol > 0.0)) throw DomainError("integrate: tolerance must be positive");
  if (!(a <= b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate: need finite a <= b");
  }
  QuadratureResult result;
  if (a == b) return result;

  const double total_width = b - a;
  std::vector<Panel> stack{{a, b, 0}};
  while (!stack.empty()) {
    const Panel panel = stack.back();
    stack.pop_back();
    const PanelEstimate est = gauss_kronrod(f, panel.a, panel.b);
    result.evaluations += 15;
    const double error = std::fabs(est.kronrod - est.gauss);
    const double budget = tol * (panel.b - panel.a) / total_width;
    const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * std::fabs(est.kronrod);
    if (error <= budget || error <= roundoff) {
      result.value += est.kronrod;
      result.error_estimate += std::min(error, budget);
      continue;
    }
    if (panel.depth >= kMaxDepth) {
      throw ConvergenceError("integrate: bisection depth exceeded 60 on [" +
                             std::to_string(panel.a) + ", " + std::to_string(panel.b) + "]");
    }
    const double mid = 0.5 * (panel.a + panel.b);
    stack.push_back({mid, panel.b, panel.depth + 1});
    stack.push_back({panel.a, mid, panel.depth + 1});
  }
  return result;
}

QuadratureResult integrate_fk(std::int64_t k, double a, double b, double tol) {
  if (k < 0) throw DomainError("integrate_fk: negative index");
  if (!(a >= 0.0) || !(a <= b) || !std::isfinite(b)) {
    throw DomainError("integrate_fk: need 0 <= a <= b < inf");
  }
  auto integrand = [k](double r) { return reference_fk(k, r); };
  const double mode = static_cast<double>(k);
  if (a < mode && mode < b) {
    // Each side gets a share of the tolerance proportional to its width.
    const double left_tol = tol * (mode - a) / (b - a);
    const double right_tol = tol - left_tol;
    QuadratureResult left = integrate(integrand, a, mode, left_tol);
    const QuadratureResult right = integrate(integrand, mode, b, right_tol);
    left.value += right.value;
    left.error_estimate += right.error_estimate;
    left.evaluations += right.evaluations;
    return left;
  }
  return integrate(integrand, a, b, tol);
}

}  // namespace daubloc::oracle
