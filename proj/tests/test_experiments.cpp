#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "daubloc/error.hpp"
#include "daubloc/experiments.hpp"
#include "daubloc/spectrum.hpp"
#include "doctest.h"

using namespace daubloc;

TEST_CASE("grids") {
  const auto lg = log_grid(1e2, 1e6, 5);
  REQUIRE(lg.size() == 5);
  CHECK(lg.front() == 1e2);
  CHECK(lg.back() == 1e6);
  CHECK(lg[2] == doctest::Approx(1e4).epsilon(1e-13));
  CHECK(log_grid(2.0, 3.0, 1) == std::vector<double>{3.0});

  const auto ln = linear_grid(0.01, 1.0, 100);
  CHECK(ln.back() == 1.0);
  CHECK(ln[49] == doctest::Approx(0.5).epsilon(1e-15));

  CHECK_THROWS_AS(log_grid(0.0, 1.0, 3), ValidationError);
  CHECK_THROWS_AS(log_grid(2.0, 1.0, 3), ValidationError);
  CHECK_THROWS_AS(linear_grid(0.0, 1.0, 0), ValidationError);
}

TEST_CASE("ring rows") {
  const RingReport report = run_ring({0.5, 4.0, 100.0, 1e4});
  REQUIRE(report.rows.size() == 4);

  CHECK(report.rows[0].skipped);
  CHECK_FALSE(report.rows[0].note.empty());

  const RingRow& four = report.rows[1];
  CHECK_FALSE(four.skipped);
  CHECK(four.argmax_k == 4);

  const RingRow& hundred = report.rows[2];
  CHECK(hundred.stirling_lower <= hundred.norm);
  CHECK(hundred.norm <= hundred.stirling_upper);
  CHECK(hundred.analytic_lower <= hundred.stirling_lower * (1 + 1e-12));
  CHECK(hundred.stirling_upper <= hundred.analytic_upper * (1 + 1e-12));

  const RingRow& big = report.rows[3];
  CHECK(std::fabs(big.asym_residual) <= 10.0 / 1e4);
  CHECK(big.argmax_adjacent);
}

TEST_CASE("ring sandwich and adjacency over a grid") {
  const RingReport report = run_ring(log_grid(1.0, 5e3, 40));
  for (const RingRow& row : report.rows) {
    CAPTURE(row.piR2);
    CHECK(row.argmax_adjacent);
    CHECK(row.stirling_lower <= row.norm);
    CHECK(row.norm <= row.stirling_upper);
  }
}

TEST_CASE("comb rows") {
  const CombReport report = run_comb({1.0, 0.05, 0.5});
  REQUIRE(report.rows.size() == 3);
  CHECK(report.rows[0].s == 0.05);
  CHECK(report.rows[2].s == 1.0);

  const CombRow& small = report.rows[0];
  CHECK(small.argmax_k == 0);
  CHECK(std::fabs(small.norm - (-std::expm1(-0.05)) * kCombConstant) < 1e-12);

  const CombRow& half = report.rows[1];
  CHECK(half.lower == doctest::Approx(0.6225).epsilon(1e-4));
  CHECK(half.upper == doctest::Approx(0.7909).epsilon(1e-4));
  CHECK(half.lower - 1e-9 <= half.norm);
  CHECK(half.norm <= half.upper + 1e-9);

  CHECK(std::fabs(report.rows[2].norm - 1.0) < 1e-12);
  CHECK(report.constant_check);
  CHECK(report.s0_estimate > 0.0);
}

TEST_CASE("comb bounds and first eigenvalue on a grid") {
  const CombReport report = run_comb(linear_grid(0.02, 1.0, 50));
  for (const CombRow& row : report.rows) {
    CAPTURE(row.s);
    CHECK(row.lower - 1e-9 <= row.norm);
    CHECK(row.norm <= row.upper + 1e-9);
    CHECK(std::fabs(row.lambda0 - row.lower) < 1e-12);
  }
}

TEST_CASE("cantor single interval") {
  const CantorRow row = cantor_row(0, 1.0, "sweep");
  CHECK(row.norm == doctest::Approx(1 - std::exp(-1.0)).epsilon(1e-13));
  CHECK(row.argmax_k == 0);
  CHECK(row.ratio_norm == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(row.lambda0 == doctest::Approx(row.lambda0_direct).epsilon(1e-13));
}

TEST_CASE("cantor report ordering and envelope") {
  CantorOptions options;
  options.n_max = 5;
  options.x_per_n = 8;
  options.fup = true;
  const CantorReport report = run_cantor(options);
  CHECK(report.rows.size() == 6 * 9);
  CHECK(std::is_sorted(report.rows.begin(), report.rows.end(), [](const CantorRow& l, const CantorRow& r) {
    return l.n != r.n ? l.n < r.n : l.piR2 < r.piR2;
  }));
  CHECK(report.per_n.size() == 6);

  for (const CantorRow& row : report.rows) {
    CAPTURE(row.n);
    CAPTURE(row.piR2);
    CHECK(row.norm <= 2.0 * row.lambda0 + 1e-10);
    CHECK(std::fabs(row.lambda0 - row.lambda0_recursive) < 1e-10);
    CHECK(std::fabs(row.lambda0 - row.lambda0_direct) < 1e-10);
    CHECK(row.tail_bound < 1e-14);
    CHECK(std::isfinite(row.ratio_norm));
    CHECK(row.ratio_norm > 0.0);
    if (row.kind == "fup") {
      REQUIRE(row.fup_product.has_value());
      CHECK(*row.fup_product == doctest::Approx(row.norm * std::pow(1.5, 0.5 * row.n)));
    } else {
      CHECK_FALSE(row.fup_product.has_value());
    }
  }
  CHECK(report.envelope.c1_emp > 0.0);
  CHECK(report.envelope.c1_emp <= report.envelope.c2_emp);
}

TEST_CASE("cantor lambda0 only skips the spectrum") {
  CantorOptions options;
  options.n_max = 3;
  options.x_per_n = 4;
  options.lambda0_only = true;
  const CantorReport report = run_cantor(options);
  for (const CantorRow& row : report.rows) CHECK(row.norm == 0.0);
  CHECK(report.envelope.c1_emp == report.envelope_lambda0.c1_emp);
}

TEST_CASE("cantor input errors") {
  CantorOptions options;
  options.n_max = 17;
  CHECK_THROWS_AS(run_cantor(options), ValidationError);
  options.n_max = 2;
  options.x_per_n = 0;
  CHECK_THROWS_AS(run_cantor(options), ValidationError);
  CHECK_THROWS_AS(cantor_row(-1, 1.0, "sweep"), DomainError);
}
