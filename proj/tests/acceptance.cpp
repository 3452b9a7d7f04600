// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "daubloc/experiments.hpp"
#include "daubloc/gamma_core.hpp"
#include "daubloc/quadrature_oracle.hpp"
#include "daubloc/spectrum.hpp"
#include "daubloc/verify.hpp"

using namespace daubloc;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, pattern, args...);
  return buffer;
}

int failures = 0;

void criterion(int id, const char* title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("threw: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = seconds < budget_seconds;
  const bool pass = outcome.pass && in_time;
  if (!pass) ++failures;
  std::printf("%s %d %s: %s; %.2f s (budget %.0f s)%s\n", pass ? "PASS" : "FAIL", id, title, outcome.detail.c_str(),
              seconds, budget_seconds, in_time ? "" : " over budget");
  std::fflush(stdout);
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(20240601);
  double worst = 0.0;
  int agree = 0;
  for (int i = 0; i < 500; ++i) {
    const Index k = std::uniform_int_distribution<Index>(0, 300)(rng);
    double a = std::uniform_real_distribution<double>(0.0, 1000.0)(rng);
    double b = std::uniform_real_distribution<double>(0.0, 1000.0)(rng);
    if (a > b) std::swap(a, b);
    const double diff = std::fabs(fk_integral(k, a, b) - oracle::integrate_fk(k, a, b, 1e-13).value);
    worst = std::max(worst, diff);
    agree += diff <= 1e-10;
  }
  return {agree == 500, fmt("%d/500 within 1e-10, max |diff| %.3g", agree, worst)};
}

Outcome ring_asymptotics() {
  const RingReport report = run_ring({1e2, 1e3, 1e4, 1e5, 1e6});
  bool sandwich = true;
  bool adjacent = true;
  bool bounded = true;
  bool decreasing = true;
  bool scaled_monotone = true;
  std::string scaled;
  double previous = INFINITY;
  double previous_scaled = INFINITY;
  for (const RingRow& row : report.rows) {
    sandwich = sandwich && !row.skipped && row.stirling_lower <= row.norm && row.norm <= row.stirling_upper;
    adjacent = adjacent && row.argmax_adjacent;
    const double s = row.asym_residual * row.piR2;
    bounded = bounded && s >= -10.0 && s <= 10.0;
    decreasing = decreasing && std::fabs(row.asym_residual) < previous;
    previous = std::fabs(row.asym_residual);
    scaled_monotone = scaled_monotone && std::fabs(s) <= previous_scaled;
    previous_scaled = std::fabs(s);
    scaled += fmt("%s%.6f", scaled.empty() ? "" : ", ", s);
  }
  return {sandwich && adjacent && bounded && decreasing,
          fmt("sandwich %s, argmax in {m, m+1} %s, residual*piR2 in [-10, 10] %s (%s), |residual| decreasing %s, "
              "|residual*piR2| non-increasing %s (informational)",
              sandwich ? "ok" : "broken", adjacent ? "ok" : "broken", bounded ? "ok" : "broken", scaled.c_str(),
              decreasing ? "ok" : "broken", scaled_monotone ? "yes" : "no")};
}

Outcome comb_bounds() {
  std::vector<double> grid;
  for (int j = 1; j <= 100; ++j) grid.push_back(0.01 * j);
  const CombReport report = run_comb(grid);
  int within = 0;
  int exact = 0;
  bool first_region = false;
  for (const CombRow& row : report.rows) {
    within += row.lower - 1e-9 <= row.norm && row.norm <= row.upper + 1e-9;
    exact += std::fabs(row.lambda0 - row.lower) <= 1e-12;
    first_region = first_region || (row.s <= 0.05 && row.argmax_k == 0);
  }
  const bool pass = within == 100 && exact == 100 && first_region && report.s0_estimate > 0.0 && report.constant_check;
  return {pass, fmt("bounds %d/100, lambda0 = lower %d/100, argmax 0 near s = 0 %s, s0_estimate %.6f%s, "
                    "1 + 4e^-2 < C %s",
                    within, exact, first_region ? "yes" : "no", report.s0_estimate,
                    report.transition_found ? "" : " (no transition in (0, 1])", report.constant_check ? "yes" : "no")};
}

Outcome twice_first_eigenvalue(const CantorReport& sweep) {
  int rows = 0;
  int ok = 0;
  double worst_tail = 0.0;
  double worst_excess = -INFINITY;
  for (const CantorRow& row : sweep.rows) {
    ++rows;
    worst_tail = std::max(worst_tail, row.tail_bound);
    worst_excess = std::max(worst_excess, row.norm - 2.0 * row.lambda0);
    ok += row.norm <= 2.0 * row.lambda0 + 1e-10 && row.tail_bound < 1e-14;
  }
  return {rows > 0 && ok == rows, fmt("%d/%d rows with norm <= 2 lambda0 + 1e-10, max(norm - 2 lambda0) %.3g, "
                                      "max tail %.3g",
                                      ok, rows, worst_excess, worst_tail)};
}

Outcome envelope_stability(const CantorReport& sweep) {
  bool finite = true;
  for (const CantorRow& row : sweep.rows) {
    if (row.kind != "sweep") continue;
    finite = finite && std::isfinite(row.ratio_norm) && row.ratio_norm > 0.0 && std::isfinite(row.ratio_lambda0) &&
             row.ratio_lambda0 > 0.0;
  }
  auto close = [](double a, double b) { return std::fabs(a - b) <= 0.05 * std::fabs(b); };
  std::string detail;
  bool stable = true;
  for (const bool use_lambda0 : {true, false}) {
    const Envelope wide = envelope_of(sweep.rows, 14, use_lambda0);
    const Envelope narrow = envelope_of(sweep.rows, 10, use_lambda0);
    stable = stable && close(wide.c1_emp, narrow.c1_emp) && close(wide.c2_emp, narrow.c2_emp);
    detail += fmt("%s%s [%.6f, %.6f] vs n <= 10 [%.6f, %.6f]", detail.empty() ? "" : "; ",
                  use_lambda0 ? "lambda0" : "norm", wide.c1_emp, wide.c2_emp, narrow.c1_emp, narrow.c2_emp);
  }
  return {finite && stable, fmt("ratios positive and finite %s; ", finite ? "yes" : "no") + detail};
}

Outcome fup_products(const CantorReport& sweep) {
  double lo = INFINITY;
  double hi = 0.0;
  int count = 0;
  for (const CantorRow& row : sweep.rows) {
    if (row.kind != "fup" || !row.fup_product) continue;
    lo = std::min(lo, *row.fup_product);
    hi = std::max(hi, *row.fup_product);
    ++count;
  }
  const bool pass = count == 15 && lo > 0.0 && hi / lo <= 10.0;
  return {pass, fmt("%d rows, products in [%.6f, %.6f], max/min %.4f", count, lo, hi, hi / lo)};
}

Outcome consistency(const CantorReport& sweep) {
  double worst = 0.0;
  for (const CantorRow& row : sweep.rows) {
    worst = std::max({worst, std::fabs(row.lambda0 - row.lambda0_recursive), std::fabs(row.lambda0 - row.lambda0_direct)});
  }
  return {worst <= 1e-10, fmt("%zu rows, max disagreement %.3g", sweep.rows.size(), worst)};
}

Outcome property_suites() {
  std::size_t checks = 0;
  std::size_t failed = 0;
  for (const auto& suite : verify::run_suites("all")) {
    checks += suite.checks();
    failed += suite.failures();
  }
  const std::string command = std::string(DAUBLOC_BIN) + " verify --suite all > /dev/null 2>&1";
  const int raw = std::system(command.c_str());
  const int status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return {failed == 0 && status == 0,
          fmt("%zu checks, %zu violations; daubloc verify --suite all exit %d", checks, failed, status)};
}

}  // namespace

int main() {
  criterion(1, "oracle equivalence", 10, oracle_equivalence);
  criterion(2, "ring norm asymptotics", 60, ring_asymptotics);
  criterion(3, "comb bounds", 120, comb_bounds);

  CantorOptions small;
  small.n_max = 10;
  small.x_per_n = 32;
  criterion(4, "norm at most twice the first eigenvalue", 300,
            [&] { return twice_first_eigenvalue(run_cantor(small)); });

  CantorOptions full;
  full.n_max = 14;
  full.x_per_n = 64;
  full.fup = true;
  CantorReport sweep;
  criterion(5, "normalized ratio envelope", 300, [&] {
    sweep = run_cantor(full);
    return envelope_stability(sweep);
  });
  criterion(6, "coupled decay products", 300, [&] { return fup_products(sweep); });
  criterion(7, "first eigenvalue consistency", 60, [&] { return consistency(sweep); });
  criterion(8, "property suites", 300, property_suites);

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
