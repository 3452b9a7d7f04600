#pragma once

// Gamma(k+1, 1) densities f_k(r) = r^k e^{-r} / k! and their integrals.
//
// Every integral here is a difference of regularized incomplete gamma
// functions with integer shape k+1:
//   fk_tail(k, a) = Q(k+1, a) = int_a^inf f_k,
//   fk_head(k, b) = P(k+1, b) = int_0^b  f_k.
// Values are evaluated through log-space prefactors so that k up to the
// index cap and r up to ~1e7 neither overflow nor underflow prematurely.

#include <cstdint>

namespace daubloc {

using Index = std::int64_t;

/// Largest eigenvalue index any operation accepts.
inline constexpr Index kMaxIndex = 10'000'000;

/// ln f_k(r); -inf when f_k(r) == 0 exactly (k >= 1, r == 0).
double log_fk(Index k, double r);

double fk(Index k, double r);

/// int_a^b f_k(r) dr. `b` may be +inf. Absolute error <= 1e-12; the
/// relative error stays small in the flanks as well.
double fk_integral(Index k, double a, double b);

double fk_tail(Index k, double a);
double fk_head(Index k, double b);

/// The value of f_k at its mode r = k.
inline double fk_mode_value(Index k) { return fk(k, static_cast<double>(k)); }

/// An interval [lo, hi] outside which f_k carries at most 2 e^{-log_cut} of
/// mass (Chernoff bound for the Gamma(k+1, 1) law, so the guarantee is rigorous).
struct Support {
  double lo;
  double hi;
};
Support fk_support(Index k, double log_cut = 50.0);

namespace detail {

/// ln k! - ln(sqrt(2 pi k) (k/e)^k), the Stirling remainder.
double stirlerr(Index k);

/// x ln(x / np) + np - x without cancellation (Loader's deviance term).
double bd0(double x, double np);

/// Evaluates ln f_k(r) for one fixed k with the k-dependent constants hoisted.
class LogFk {
 public:
  explicit LogFk(Index k);
  double operator()(double r) const;
  Index k() const { return k_; }

 private:
  Index k_;
  double offset_;
};

/// Composite Gauss-Legendre rule for int_a^b f_k with `panels` equal panels.
/// order is 8, 16 or 64.
double gauss_legendre_fk(const LogFk& log_f, double a, double b, int panels, int order);

/// Number of panels so that ln f_k varies by at most `max_log_change` across each
/// panel and no panel is wider than sqrt(k+1)/2. Requires a > 0 unless k == 0.
Index panel_count(Index k, double a, double b, double max_log_change);

/// P(k+1, x) by its power series; requires x < k+1.
double lower_series(Index k, double x);

/// Q(k+1, x) by the Legendre continued fraction; requires x >= k+1.
double upper_continued_fraction(Index k, double x);

void check_index(Index k);

}  // namespace detail

}  // namespace daubloc
