#include <cmath>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "daubloc/error.hpp"
#include "daubloc/radial_sets.hpp"
#include "doctest.h"

using namespace daubloc;

namespace {

IntervalUnion of(std::vector<std::pair<double, double>> pairs) { return make_union(pairs); }

bool canonical(const IntervalUnion& u) {
  const auto pieces = u.intervals();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!(pieces[i].a >= 0.0 && pieces[i].a < pieces[i].b)) return false;
    if (i > 0 && !(pieces[i - 1].b < pieces[i].a)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("make_union sorts and merges") {
  const auto one = of({{0, 1}});
  CHECK(one.size() == 1);
  CHECK(one.measure() == 1.0);
  CHECK(of({{0, 1}, {1, 2}}) == of({{0, 2}}));
  CHECK(of({{0, 1}, {1, 2}}).measure() == 2.0);
  const auto sorted = of({{2, 3}, {0, 1}});
  REQUIRE(sorted.size() == 2);
  CHECK(sorted.intervals()[0] == Interval{0, 1});
  CHECK(sorted.intervals()[1] == Interval{2, 3});
  CHECK(of({{0, 2}, {1, 3}}).measure() == 3.0);
  CHECK(IntervalUnion().measure() == 0.0);
  CHECK(IntervalUnion().sup() == 0.0);
}

TEST_CASE("make_union rejects bad pairs") {
  CHECK_THROWS_AS(of({{1, 1}}), ValidationError);
  CHECK_THROWS_AS(of({{2, 1}}), ValidationError);
  CHECK_THROWS_AS(of({{-1, 1}}), ValidationError);
  CHECK_THROWS_AS(of({{0, INFINITY}}), ValidationError);
  CHECK_THROWS_AS(of({{NAN, 1}}), ValidationError);
  try {
    of({{0, 1}, {5, 4}});
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("(5, 4)") != std::string::npos);
  }
}

TEST_CASE("scale and shift") {
  CHECK(scale(of({{0, 1}}), std::numbers::pi) == of({{0, std::numbers::pi}}));
  CHECK(scale(of({{1, 2}}), 1.0) == of({{1, 2}}));
  CHECK(scale(cantor_expand({1.0, 2}), 3.0) == cantor_expand({3.0, 2}));
  CHECK_THROWS_AS(scale(of({{0, 1}}), 0.0), DomainError);
  CHECK_THROWS_AS(scale(of({{0, 1}}), -2.0), DomainError);
  CHECK(shift(of({{0, 1}}), 2.0) == of({{2, 3}}));
  const auto u = of({{0.5, 1}, {3, 4.25}});
  CHECK(shift(u, 0.0) == u);
  CHECK(shift(cantor_expand({3.0, 1}), 5.0) == of({{5, 6}, {7, 8}}));
}

TEST_CASE("intersect with a half-line") {
  CHECK(intersect_halfline(of({{0, 2}}), 1.0, Side::right) == of({{1, 2}}));
  const auto empty = intersect_halfline(of({{0, 2}}), 3.0, Side::right);
  CHECK(empty.empty());
  CHECK(empty.measure() == 0.0);
  CHECK(intersect_halfline(of({{0, 1}, {2, 3}}), 2.5, Side::left) == of({{0, 1}, {2, 2.5}}));
  CHECK(intersect_halfline(of({{0, 1}, {2, 3}}), 2.0, Side::left) == of({{0, 1}}));
}

TEST_CASE("reflect about a point") {
  CHECK(reflect_about(of({{0, 1}}), 1.0) == of({{1, 2}}));
  CHECK(reflect_about(of({{0, 1}, {2, 3}}), 3.0) == of({{3, 4}, {5, 6}}));
  CHECK(reflect_about(cantor_expand({3.0, 1}), 3.0) == of({{3, 4}, {5, 6}}));
  CHECK_THROWS_AS(reflect_about(of({{0, 4}}), 3.0), PreconditionError);
}

TEST_CASE("cantor expansion") {
  CHECK(cantor_expand({1.0, 0}) == of({{0, 1}}));
  CHECK(cantor_expand({1.0, 1}) == of({{0, 1.0 / 3.0}, {2.0 / 3.0, 1}}));
  CHECK(cantor_expand({9.0, 2}) == of({{0, 1}, {2, 3}, {6, 7}, {8, 9}}));
  CHECK_THROWS_AS(cantor_expand({1.0, 25}), CapacityError);
  CHECK_THROWS_AS(CantorSpec(0.0, 1), DomainError);
  CHECK_THROWS_AS(CantorSpec(1.0, -1), DomainError);

  for (const double L : {1.0, std::numbers::pi, 7.3}) {
    for (int n = 0; n <= 14; ++n) {
      const CantorSpec spec(L, n);
      const auto u = cantor_expand(spec);
      CHECK(u.size() == (std::size_t{1} << n));
      CHECK(u.intervals().front().a == 0.0);
      CHECK(u.intervals().back().b == L);
      CHECK(canonical(u));
      CHECK(u.measure() == doctest::Approx(spec.measure()).epsilon(1e-13));
      for (const Interval& piece : u.intervals()) {
        CHECK(piece.length() == doctest::Approx(spec.piece_length()).epsilon(1e-9));
      }
      if (n > 0) {
        const auto parent = cantor_expand({L, n - 1});
        CHECK(u.measure() == doctest::Approx(parent.measure() * 2.0 / 3.0).epsilon(1e-15 * (1 << n)));
        // Nesting: every child piece sits inside some parent piece.
        std::size_t j = 0;
        for (const Interval& piece : u.intervals()) {
          const double slack = 1e-12 * L;
          while (parent.intervals()[j].b + slack < piece.b) ++j;
          CHECK(parent.intervals()[j].a <= piece.a + slack);
        }
      }
    }
  }
}

TEST_CASE("cantor function values") {
  for (int n = 0; n <= 20; ++n) CHECK(cantor_function(1.0, n, 0.5) == 0.5);
  CHECK(cantor_function(1.0, 1, 1.0 / 3.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(cantor_function(1.0, 2, 1.0 / 9.0) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(cantor_function(2.0, 3, -1.0) == 0.0);
  CHECK(cantor_function(2.0, 3, 0.0) == 0.0);
  CHECK(cantor_function(2.0, 3, 2.0) == 1.0);
  CHECK(cantor_function(2.0, 3, 5.0) == 1.0);
  CHECK(cantor_function(1.0, 0, 0.3) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK_THROWS_AS(cantor_function(0.0, 1, 0.5), DomainError);
  CHECK_THROWS_AS(cantor_function(1.0, -1, 0.5), DomainError);
}

TEST_CASE("cantor function is subadditive") {
  std::mt19937_64 rng(23);
  for (const double L : {1.0, std::numbers::pi, 7.3}) {
    std::uniform_real_distribution<double> point(-L, 2.0 * L);
    for (int n = 0; n <= 12; ++n) {
      for (int trial = 0; trial < 500; ++trial) {
        const double a = point(rng);
        const double b = point(rng);
        CHECK(cantor_function(L, n, a + b) <=
              cantor_function(L, n, a) + cantor_function(L, n, b) + 1e-12);
      }
    }
  }
}

TEST_CASE("cantor function matches the expanded measure") {
  std::mt19937_64 rng(29);
  for (const double L : {1.0, std::numbers::pi, 7.3}) {
    std::uniform_real_distribution<double> point(0.0, L);
    for (int n = 0; n <= 12; ++n) {
      const CantorSpec spec(L, n);
      const auto u = cantor_expand(spec);
      for (int trial = 0; trial < 40; ++trial) {
        const double x = point(rng);
        const double direct = intersect_halfline(u, x, Side::left).measure();
        CHECK(std::fabs(cantor_function(L, n, x) * spec.measure() - direct) <= 1e-10);
      }
    }
  }
}

TEST_CASE("set algebra keeps canonical form") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> point(0.0, 50.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<double, double>> pairs;
    for (int i = 0; i < 8; ++i) {
      const double a = point(rng);
      pairs.emplace_back(a, a + 0.1 + point(rng) / 10.0);
    }
    const auto u = make_union(pairs);
    CHECK(canonical(u));
    CHECK(canonical(scale(u, 1.7)));
    CHECK(canonical(shift(u, 3.0)));
    const double cut = point(rng);
    const auto left = intersect_halfline(u, cut, Side::left);
    const auto right = intersect_halfline(u, cut, Side::right);
    CHECK(canonical(left));
    CHECK(canonical(right));
    CHECK(left.measure() + right.measure() == doctest::Approx(u.measure()).epsilon(1e-13));
    const auto mirrored = reflect_about(left, cut);
    CHECK(canonical(mirrored));
    CHECK(mirrored.measure() == doctest::Approx(left.measure()).epsilon(1e-12));
  }
}
