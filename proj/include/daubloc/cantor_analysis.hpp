#pragma once

// Relative areas under f_k on mid-third Cantor iterates, the closed form and
// recursion for the first eigenvalue of the Cantor disk, the normalized
// ratio that stays bounded as n grows, and numeric checks of the supporting
// inequalities.
//
// Throughout, x = pi R^2 and the Cantor iterate in the r-domain is C_n(x).

#include <cmath>
#include <vector>

#include "daubloc/gamma_core.hpp"
#include "daubloc/radial_sets.hpp"

namespace daubloc {

/// Share of int_s^{s+3L} f_k left after removing the open middle third
/// (s + L, s + 2L). Computed from three integrals.
/// Throws DegenerateInputError when the full integral is below 1e-300.
double relative_area(Index k, double s, double threeL);

/// The same quantity from the finite-sum identity. Both sums are divided by
/// e^s, so each term becomes a Poisson probability f_j(.). Cancels badly for large s.
double relative_area_identity(Index k, double s, double threeL);

/// k = 0 relative area, which does not depend on s:
/// (1 + e^{-2L})(1 - e^{-L}) / (1 - e^{-3L}).
double relative_area_first(double threeL);

/// First eigenvalue of the Cantor disk: (1 - e^{-x/3^n}) prod_{j=1..n} (1 + e^{-2x/3^j}).
double lambda0_closed(double x, int n);

/// The same through lambda_{n+1} = A_0(x / 3^n) lambda_n, starting at 1 - e^{-x}.
double lambda0_recursive(double x, int n);

/// The Cantor disk profile C_n(x / pi), so that eigenvalue() integrates over C_n(x).
IntervalUnion cantor_profile(double x, int n);

/// (2x + 1)^{ln 2 / ln 3} / (2^n (1 - e^{-x/3^n})) * norm.
/// Throws DomainError unless 0 < x <= 3^n / 2 and norm > 0.
double normalized_ratio(double x, int n, double norm);

/// The same expression with only x > 0 and norm > 0 required.
double normalized_ratio_formula(double x, int n, double norm);

inline bool in_ratio_range(double x, int n) { return x > 0.0 && x <= 0.5 * std::pow(3.0, n); }

struct SeriesEstimate {
  double value;
  double tail_estimate;  ///< geometric extrapolation of the last two terms
  int terms;
};

/// sum_{j=1..J} [ln(1 + y^{1/3^j}) - y^{1/3^j} ln 2] for y in [0, 1].
SeriesEstimate log_product_series(double y, int J = 60);

/// sum_{j=1..n} e^{-x/3^j} - (n - ln(x + 1)/ln 3) for 0 <= x <= 3^n.
double exp_sum_deviation(double x, int n);

/// relative_area_first(threeL) - relative_area(k, s, threeL); non-negative for s >= k.
double relative_area_gap(Index k, double s, double threeL);

/// Numerator of d/ds relative_area(k, s, 3L):
/// (f_k(s+L) - f_k(s+2L)) int_s^{s+3L} f_k - (f_k(s) - f_k(s+3L)) int_{s+L}^{s+2L} f_k.
double area_slope_numerator(Index k, double s, double L);

/// area_slope_numerator(k, s, L) equals the integral over r in [0, L] of
/// slope_integrand(k, r, s, L) - slope_integrand(k, r, s + L, L).
double slope_integrand(Index k, double r, double s, double L);

/// One bracket of slope_integrand: slope_integrand = slope_bracket(.., 0) + slope_bracket(.., L).
double slope_bracket(Index k, double r, double s, double L, double y);

struct ShiftComparison {
  double upper_part;  ///< int over C_n(L) intersected with [k, inf) of f_k
  double lower_part;  ///< int over C_n(L) intersected with [0, k] of f_k
  double shifted;     ///< int over C_n(L) + k of f_k
  double reflected;   ///< int over the lower part reflected about k
};

/// Requires spec.iterate <= 16.
ShiftComparison shift_comparison(const CantorSpec& spec, Index k);

struct RatioStats {
  int n = 0;
  std::vector<double> grid;
  std::vector<double> ratios;
  double min = 0.0;
  double max = 0.0;
};

/// Envelope of a ratio sweep. Throws DomainError on a non-positive or non-finite ratio.
RatioStats summarize_ratios(int n, std::vector<double> grid, std::vector<double> ratios);

}  // namespace daubloc
