#include "daubloc/cantor_analysis.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "daubloc/error.hpp"
#include "daubloc/spectrum.hpp"

namespace daubloc {

namespace {

constexpr double kDegenerateDenominator = 1e-300;
const double kCantorDimension = std::numbers::ln2 / std::log(3.0);

void check_window(double s, double threeL) {
  if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("relative area: start must be >= 0 and finite");
  if (!(threeL > 0.0) || !std::isfinite(threeL)) {
    throw DomainError("relative area: length must be positive and finite");
  }
}

void check_iterate(int n) {
  if (n < 0) throw DomainError("Cantor iterate must be >= 0, got " + std::to_string(n));
}

double one_minus_exp(double t) { return -std::expm1(-t); }

}  // namespace

double relative_area(Index k, double s, double threeL) {
  detail::check_index(k);
  check_window(s, threeL);
  const double L = threeL / 3.0;
  const double whole = fk_integral(k, s, s + threeL);
  if (whole < kDegenerateDenominator) {
    throw DegenerateInputError("relative area: int_s^{s+3L} f_k is below 1e-300 at k = " + std::to_string(k) +
                               ", s = " + std::to_string(s));
  }
  const double kept = fk_integral(k, s, s + L) + fk_integral(k, s + 2.0 * L, s + threeL);
  return kept / whole;
}

double relative_area_identity(Index k, double s, double threeL) {
  detail::check_index(k);
  check_window(s, threeL);
  const double L = threeL / 3.0;
  double kept = 0.0;
  double whole = 0.0;
  for (Index j = 0; j <= k; ++j) {
    const double p0 = fk(j, s);
    const double p1 = fk(j, s + L);
    const double p2 = fk(j, s + 2.0 * L);
    const double p3 = fk(j, s + threeL);
    kept += p0 - p1 + p2 - p3;
    whole += p0 - p3;
  }
  if (std::fabs(whole) < kDegenerateDenominator) {
    throw DegenerateInputError("relative area identity: denominator below 1e-300");
  }
  return kept / whole;
}

double relative_area_first(double threeL) {
  if (!(threeL >= 0.0)) throw DomainError("relative_area_first: length must be >= 0");
  if (threeL == 0.0) return 2.0 / 3.0;
  const double L = threeL / 3.0;
  return (1.0 + std::exp(-2.0 * L)) * one_minus_exp(L) / one_minus_exp(threeL);
}

double lambda0_closed(double x, int n) {
  if (!(x >= 0.0)) throw DomainError("lambda0_closed: x must be >= 0");
  check_iterate(n);
  double value = one_minus_exp(x / std::pow(3.0, n));
  double power = 1.0;
  for (int j = 1; j <= n; ++j) {
    power *= 3.0;
    value *= 1.0 + std::exp(-2.0 * x / power);
  }
  return value;
}

double lambda0_recursive(double x, int n) {
  if (!(x >= 0.0)) throw DomainError("lambda0_recursive: x must be >= 0");
  check_iterate(n);
  double value = one_minus_exp(x);
  double power = 1.0;
  for (int j = 0; j < n; ++j) {
    value *= relative_area_first(x / power);
    power *= 3.0;
  }
  return value;
}

IntervalUnion cantor_profile(double x, int n) {
  if (!(x > 0.0)) throw DomainError("cantor_profile: x must be positive");
  return cantor_expand(CantorSpec(x / std::numbers::pi, n));
}

double normalized_ratio_formula(double x, int n, double norm) {
  check_iterate(n);
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("normalized ratio: x must be positive and finite");
  if (!(norm > 0.0)) throw DomainError("normalized ratio: norm must be positive");
  const double numerator = std::pow(2.0 * x + 1.0, kCantorDimension);
  const double denominator = std::ldexp(one_minus_exp(x / std::pow(3.0, n)), n);
  return numerator / denominator * norm;
}

double normalized_ratio(double x, int n, double norm) {
  check_iterate(n);
  if (!in_ratio_range(x, n)) {
    throw DomainError("normalized ratio: x = " + std::to_string(x) + " lies outside (0, 3^n/2] for n = " +
                      std::to_string(n));
  }
  return normalized_ratio_formula(x, n, norm);
}

SeriesEstimate log_product_series(double y, int J) {
  if (!(y >= 0.0 && y <= 1.0)) throw DomainError("log_product_series: y must lie in [0, 1]");
  if (J < 1) throw DomainError("log_product_series: need at least one term");
  const double log_y = std::log(y);
  double total = 0.0;
  double previous = 0.0;
  double last = 0.0;
  double power = 1.0;
  for (int j = 1; j <= J; ++j) {
    power *= 3.0;
    // u = y^{1/3^j} - 1, and the term is ln(2 + u) - (1 + u) ln 2.
    const double u = std::expm1(log_y / power);
    const double term = std::log1p(0.5 * u) - u * std::numbers::ln2;
    total += term;
    previous = last;
    last = term;
  }
  double tail = 0.0;
  if (last != 0.0) {
    const double ratio = J >= 2 && previous != 0.0 ? std::fabs(last / previous) : 1.0;
    tail = ratio < 1.0 ? std::fabs(last) * ratio / (1.0 - ratio) : std::numeric_limits<double>::infinity();
  }
  return {total, tail, J};
}

double exp_sum_deviation(double x, int n) {
  check_iterate(n);
  if (!(x >= 0.0)) throw DomainError("exp_sum_deviation: x must be >= 0");
  if (x > std::pow(3.0, n)) {
    throw DomainError("exp_sum_deviation: x = " + std::to_string(x) + " exceeds 3^n for n = " + std::to_string(n));
  }
  double sum = 0.0;
  double power = 1.0;
  for (int j = 1; j <= n; ++j) {
    power *= 3.0;
    sum += std::exp(-x / power);
  }
  return sum - (static_cast<double>(n) - std::log1p(x) / std::log(3.0));
}

double relative_area_gap(Index k, double s, double threeL) {
  return relative_area_first(threeL) - relative_area(k, s, threeL);
}

double area_slope_numerator(Index k, double s, double L) {
  detail::check_index(k);
  check_window(s, 3.0 * L);
  const double whole = fk_integral(k, s, s + 3.0 * L);
  const double middle = fk_integral(k, s + L, s + 2.0 * L);
  return (fk(k, s + L) - fk(k, s + 2.0 * L)) * whole - (fk(k, s) - fk(k, s + 3.0 * L)) * middle;
}

double slope_bracket(Index k, double r, double s, double L, double y) {
  return fk(k, r + s + y) * fk(k, s + L) - fk(k, r + s + L - y) * fk(k, s + 2.0 * y);
}

double slope_integrand(Index k, double r, double s, double L) {
  return slope_bracket(k, r, s, L, 0.0) + slope_bracket(k, r, s, L, L);
}

ShiftComparison shift_comparison(const CantorSpec& spec, Index k) {
  detail::check_index(k);
  if (spec.iterate > 16) throw CapacityError("shift_comparison: iterate above 16");
  const IntervalUnion cantor = cantor_expand(spec);
  const double cut = static_cast<double>(k);
  const IntervalUnion lower = intersect_halfline(cantor, cut, Side::left);
  ShiftComparison out{};
  out.upper_part = mass(intersect_halfline(cantor, cut, Side::right), k);
  out.lower_part = mass(lower, k);
  out.shifted = mass(shift(cantor, cut), k);
  out.reflected = mass(reflect_about(lower, cut), k);
  return out;
}

RatioStats summarize_ratios(int n, std::vector<double> grid, std::vector<double> ratios) {
  if (grid.size() != ratios.size()) throw PreconditionError("summarize_ratios: grid and ratios differ in size");
  RatioStats stats;
  stats.n = n;
  for (const double r : ratios) {
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("summarize_ratios: ratio must be positive and finite");
  }
  if (!ratios.empty()) {
    const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    stats.min = *lo;
    stats.max = *hi;
  }
  stats.grid = std::move(grid);
  stats.ratios = std::move(ratios);
  return stats;
}

}  // namespace daubloc
