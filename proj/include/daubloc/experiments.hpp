#pragma once

// Sweeps over families of sets. Each returns plain rows that the CLI and the
// acceptance checks serialize or inspect.

#include <optional>
#include <string>
#include <vector>

#include "daubloc/cantor_analysis.hpp"
#include "daubloc/gamma_core.hpp"

namespace daubloc {

/// count points from lo to hi inclusive, evenly spaced in log(x).
std::vector<double> log_grid(double lo, double hi, int count);
/// count points from lo to hi inclusive, evenly spaced.
std::vector<double> linear_grid(double lo, double hi, int count);

struct RingRow {
  double piR2 = 0.0;
  bool skipped = false;  ///< piR2 < 1; only piR2 and note are meaningful
  std::string note;
  double norm = 0.0;
  Index argmax_k = 0;
  double stirling_lower = 0.0;  ///< f_{n+1}(n), n = floor(piR2)
  double stirling_upper = 0.0;  ///< f_n(n)
  double analytic_lower = 0.0;  ///< (2 pi n)^{-1/2} (1 + 1/n)^{-1} e^{-1/(12n)}
  double analytic_upper = 0.0;  ///< (2 pi n)^{-1/2}
  double asym_residual = 0.0;   ///< sqrt(2 pi piR2) * norm - 1
  bool argmax_adjacent = false; ///< argmax is floor(piR2) or floor(piR2) + 1
};

struct RingReport {
  std::vector<RingRow> rows;
};

/// The ring [R^2, R^2 + 1/pi] for each piR2 in the grid.
RingReport run_ring(const std::vector<double>& grid);

struct CombRow {
  double s = 0.0;
  double lambda0 = 0.0;
  double norm = 0.0;
  double lower = 0.0;  ///< (1 - e^{-s}) C
  double upper = 0.0;  ///< min(C s, 1)
  Index argmax_k = 0;
};

struct CombReport {
  std::vector<CombRow> rows;
  /// sup of the s for which the first eigenvalue is the largest, located by
  /// bisection to 1e-6 starting from the smallest s of the grid.
  double s0_estimate = 0.0;
  /// false when no s in (0, 1] was found where a higher index wins.
  bool transition_found = false;
  bool constant_check = false;  ///< 1 + 4 e^{-2} < C
};

CombReport run_comb(const std::vector<double>& s_grid, double tol = 1e-12);

struct CantorRow {
  int n = 0;
  double piR2 = 0.0;
  std::string kind;  ///< "sweep" or "fup"
  double lambda0 = 0.0;         ///< closed form
  double lambda0_direct = 0.0;  ///< k = 0 eigenvalue over the expanded iterate
  double lambda0_recursive = 0.0;
  bool norm_computed = false;   ///< false for lambda0-only rows; the fields below stay 0
  double norm = 0.0;
  Index argmax_k = 0;
  double tail_bound = 0.0;
  double ratio_norm = 0.0;     ///< normalized ratio of the norm
  double ratio_lambda0 = 0.0;  ///< normalized ratio of lambda0
  bool in_range = false;       ///< 0 < piR2 <= 3^n / 2
  std::optional<double> fup_product;  ///< norm (3/2)^{n/2}, fup rows only
};

struct Envelope {
  double c1_emp = 0.0;
  double c2_emp = 0.0;
};

struct CantorReport {
  std::vector<CantorRow> rows;
  Envelope envelope;          ///< ratio of the norm over in-range sweep rows
  Envelope envelope_lambda0;  ///< ratio of lambda0 over in-range sweep rows
  std::vector<RatioStats> per_n;
};

inline constexpr double kCantorGridFloor = 1e-3;

struct CantorOptions {
  int n_max = 0;
  int x_per_n = 16;
  bool fup = false;
  double fup_const = 1.0;  ///< fup rows use piR2 = fup_const * 3^{n/2}
  bool lambda0_only = false;
};

/// For each n <= n_max: x_per_n log-spaced piR2 in [1e-3, 3^n / 2], plus the
/// coupled row piR2 = fup_const 3^{n/2} when fup is set. Rows sorted by (n, piR2).
CantorReport run_cantor(const CantorOptions& options);

/// One Cantor disk (n, piR2).
CantorRow cantor_row(int n, double piR2, const std::string& kind, bool lambda0_only = false);

/// min/max of ratio_norm (or ratio_lambda0) over in-range sweep rows with n <= n_limit.
Envelope envelope_of(const std::vector<CantorRow>& rows, int n_limit, bool use_lambda0 = false);

}  // namespace daubloc
