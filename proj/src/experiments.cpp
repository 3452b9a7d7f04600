#include "daubloc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <tuple>

#include "daubloc/error.hpp"
#include "daubloc/parallel.hpp"
#include "daubloc/spectrum.hpp"

namespace daubloc {

namespace {

void check_count(int count) {
  if (count < 1) throw ValidationError("grid needs at least one point");
}

IntervalUnion ring_profile(double piR2) {
  const double r2 = piR2 / std::numbers::pi;
  return IntervalUnion::from_pieces({{r2, r2 + 1.0 / std::numbers::pi}});
}

bool first_wins(double s, double tol) { return comb_norm(CombSpec(s), tol).argmax_k == 0; }

}  // namespace

std::vector<double> log_grid(double lo, double hi, int count) {
  check_count(count);
  if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi)) {
    throw ValidationError("log grid needs 0 < min <= max < inf");
  }
  if (count == 1) return {hi};
  std::vector<double> out(static_cast<std::size_t>(count));
  const double a = std::log(lo);
  const double step = (std::log(hi) - a) / (count - 1);
  for (int i = 0; i < count; ++i) out[i] = std::exp(a + step * i);
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<double> linear_grid(double lo, double hi, int count) {
  check_count(count);
  if (!(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi)) throw ValidationError("linear grid needs min <= max");
  if (count == 1) return {hi};
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[i] = lo + (hi - lo) * i / (count - 1);
  out.back() = hi;
  return out;
}

RingReport run_ring(const std::vector<double>& grid) {
  RingReport report;
  report.rows.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    RingRow& row = report.rows[i];
    const double x = grid[i];
    row.piR2 = x;
    if (!(x >= 1.0) || !std::isfinite(x)) {
      row.skipped = true;
      row.note = "skipped: piR2 below 1";
      return;
    }
    const NormEstimate est = operator_norm(ring_profile(x));
    const auto n = static_cast<Index>(std::floor(x));
    const double nd = static_cast<double>(n);
    row.norm = est.value;
    row.argmax_k = est.argmax_k;
    row.argmax_adjacent = est.argmax_k == n || est.argmax_k == n + 1;
    row.stirling_lower = fk(n + 1, nd);
    row.stirling_upper = fk(n, nd);
    row.analytic_upper = 1.0 / std::sqrt(2.0 * std::numbers::pi * nd);
    row.analytic_lower = row.analytic_upper / (1.0 + 1.0 / nd) * std::exp(-1.0 / (12.0 * nd));
    row.asym_residual = std::sqrt(2.0 * std::numbers::pi * x) * est.value - 1.0;
  });
  return report;
}

CombReport run_comb(const std::vector<double>& s_grid, double tol) {
  CombReport report;
  std::vector<double> grid = s_grid;
  std::sort(grid.begin(), grid.end());
  report.rows.resize(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    const CombSpec comb(grid[i]);
    CombRow& row = report.rows[i];
    row.s = comb.s;
    const NormEstimate est = comb_norm(comb, tol);
    row.norm = est.value;
    row.argmax_k = est.argmax_k;
    row.lambda0 = comb_eigenvalue(comb, 0, tol);
    row.lower = -std::expm1(-comb.s) * kCombConstant;
    row.upper = std::min(kCombConstant * comb.s, 1.0);
  });

  // Bracket the end of the initial run of rows where index 0 wins.
  double lo = 0.0;
  std::optional<double> hi;
  for (const CombRow& row : report.rows) {
    if (row.argmax_k != 0) {
      hi = row.s;
      break;
    }
    lo = row.s;
  }
  if (!hi && lo < 1.0) {
    if (first_wins(1.0, tol)) {
      lo = 1.0;
    } else {
      hi = 1.0;
    }
  }
  if (hi) {
    report.transition_found = true;
    double upper = *hi;
    while (upper - lo > 1e-6) {
      const double mid = 0.5 * (lo + upper);
      (first_wins(mid, tol) ? lo : upper) = mid;
    }
  }
  report.s0_estimate = lo;
  report.constant_check = 1.0 + 4.0 * std::exp(-2.0) < kCombConstant;
  return report;
}

CantorRow cantor_row(int n, double piR2, const std::string& kind, bool lambda0_only) {
  if (n < 0 || n > 16) throw DomainError("Cantor rows need 0 <= n <= 16");
  CantorRow row;
  row.n = n;
  row.piR2 = piR2;
  row.kind = kind;
  row.in_range = in_ratio_range(piR2, n);
  row.lambda0 = lambda0_closed(piR2, n);
  row.lambda0_recursive = lambda0_recursive(piR2, n);
  row.ratio_lambda0 = normalized_ratio_formula(piR2, n, row.lambda0);
  if (lambda0_only) return row;

  row.norm_computed = true;
  const IntervalUnion profile = cantor_profile(piR2, n);
  row.lambda0_direct = eigenvalue(profile, 0);
  const NormEstimate est = operator_norm(profile);
  row.norm = est.value;
  row.argmax_k = est.argmax_k;
  row.tail_bound = est.tail_bound;
  row.ratio_norm = normalized_ratio_formula(piR2, n, row.norm);
  if (kind == "fup") row.fup_product = row.norm * std::pow(1.5, 0.5 * n);
  return row;
}

CantorReport run_cantor(const CantorOptions& options) {
  if (options.n_max < 0 || options.n_max > 16) throw ValidationError("--nmax must lie in [0, 16]");
  check_count(options.x_per_n);
  if (!(options.fup_const > 0.0)) throw ValidationError("the coupling constant must be positive");

  std::vector<std::tuple<int, double, std::string>> jobs;
  for (int n = 0; n <= options.n_max; ++n) {
    const double top = 0.5 * std::pow(3.0, n);
    for (const double x : log_grid(std::min(kCantorGridFloor, top), top, options.x_per_n)) {
      jobs.emplace_back(n, x, "sweep");
    }
    if (options.fup) jobs.emplace_back(n, options.fup_const * std::pow(3.0, 0.5 * n), "fup");
  }
  std::stable_sort(jobs.begin(), jobs.end(), [](const auto& l, const auto& r) {
    return std::tie(std::get<0>(l), std::get<1>(l)) < std::tie(std::get<0>(r), std::get<1>(r));
  });

  CantorReport report;
  report.rows.resize(jobs.size());
  // Largest sets first so the slowest rows do not trail at the end.
  std::vector<std::size_t> order(jobs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
  parallel_for(jobs.size(), [&](std::size_t slot) {
    const std::size_t i = order[slot];
    const auto& [n, x, kind] = jobs[i];
    report.rows[i] = cantor_row(n, x, kind, options.lambda0_only);
  });

  for (int n = 0; n <= options.n_max; ++n) {
    std::vector<double> grid;
    std::vector<double> ratios;
    for (const CantorRow& row : report.rows) {
      if (row.n != n || row.kind != "sweep" || !row.in_range) continue;
      grid.push_back(row.piR2);
      ratios.push_back(options.lambda0_only ? row.ratio_lambda0 : row.ratio_norm);
    }
    report.per_n.push_back(summarize_ratios(n, std::move(grid), std::move(ratios)));
  }
  report.envelope_lambda0 = envelope_of(report.rows, options.n_max, true);
  report.envelope = options.lambda0_only ? report.envelope_lambda0 : envelope_of(report.rows, options.n_max);
  return report;
}

Envelope envelope_of(const std::vector<CantorRow>& rows, int n_limit, bool use_lambda0) {
  Envelope env{std::numeric_limits<double>::infinity(), 0.0};
  bool any = false;
  for (const CantorRow& row : rows) {
    if (row.n > n_limit || row.kind != "sweep" || !row.in_range) continue;
    const double r = use_lambda0 ? row.ratio_lambda0 : row.ratio_norm;
    env.c1_emp = std::min(env.c1_emp, r);
    env.c2_emp = std::max(env.c2_emp, r);
    any = true;
  }
  if (!any) return {};
  return env;
}

}  // namespace daubloc
