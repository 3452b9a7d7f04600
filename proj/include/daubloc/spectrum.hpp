#pragma once

// Eigenvalues of the radial time-frequency localization operator P_E.
//
// For a profile E (a union of r^2-intervals) the k-th Hermite function is an
// eigenfunction with eigenvalue
//   lambda_k(E) = int_{pi E} f_k(r) dr,
// so the whole spectrum is a table of Gamma(k+1) probabilities.

#include <optional>
#include <span>
#include <vector>

#include "daubloc/gamma_core.hpp"
#include "daubloc/radial_sets.hpp"

namespace daubloc {

inline constexpr double kAutoCutoffThreshold = 1e-14;

/// e / (e - 1), the comb constant.
inline constexpr double kCombConstant = 1.5819767068693264243;

struct Spectrum {
  std::vector<double> lambdas;
  double tail_bound = 0.0;
  double set_measure_scaled = 0.0;

  Index K() const { return static_cast<Index>(lambdas.size()) - 1; }
};

struct NormEstimate {
  double value = 0.0;
  Index argmax_k = 0;
  double tail_bound = 0.0;
  Index k_searched = 0;
};

/// E(s) = union over n >= 0 of (1/pi)[n, n + s].
struct CombSpec {
  double s;
  explicit CombSpec(double s);
};

/// int over `scaled` of f_k, where `scaled` is already in the r-domain.
/// Intervals outside the Chernoff window of f_k are skipped.
double mass(const IntervalUnion& scaled, Index k);

double eigenvalue(const IntervalUnion& E, Index k);

/// Smallest k with P(k+1, x) < kAutoCutoffThreshold, where x = pi sup E is
/// passed directly. Throws CapacityError past kMaxIndex.
Index auto_cutoff(double scaled_sup);

Spectrum spectrum(const IntervalUnion& E, std::optional<Index> K = std::nullopt);

/// max_k lambda_k(E) over k <= auto cutoff. Blocks of k are discarded only
/// through a rigorous upper bound, so the result equals the exhaustive scan.
NormEstimate operator_norm(const IntervalUnion& E);

double comb_eigenvalue(const CombSpec& comb, Index k, double tol);

NormEstimate comb_norm(const CombSpec& comb, double tol);

struct TraceCheck {
  double partial_trace;
  double scaled_measure;
};

TraceCheck trace_check(const IntervalUnion& E, std::optional<Index> K = std::nullopt);

namespace detail {

/// mass() restricted to [lo, hi].
double mass_between(std::span<const Interval> scaled, Index k, double lo, double hi);

/// |scaled intersected with [lo, hi]|.
double measure_between(std::span<const Interval> scaled, double lo, double hi);

/// Upper bound on lambda_k for every k in [k1, k2], k1 >= 1.
double block_bound(std::span<const Interval> scaled, Index k1, Index k2);

/// Bound on |lambda_k(s) - s| from the Fourier series of the comb indicator.
/// Non-increasing in k.
double comb_deviation_bound(double s, Index k);

}  // namespace detail

}  // namespace daubloc
