#include "daubloc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <utility>

#include "daubloc/cantor_analysis.hpp"
#include "daubloc/error.hpp"
#include "daubloc/gamma_core.hpp"
#include "daubloc/quadrature_oracle.hpp"
#include "daubloc/radial_sets.hpp"
#include "daubloc/spectrum.hpp"

namespace daubloc::verify {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kExamplesKept = 5;

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Index pick(Rng& rng, Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(rng); }

std::string describe(std::initializer_list<std::pair<const char*, double>> fields) {
  std::ostringstream out;
  out.precision(17);
  bool first = true;
  for (const auto& [key, value] : fields) {
    out << (first ? "" : ", ") << key << " = " << value;
    first = false;
  }
  return out.str();
}

class Recorder {
 public:
  explicit Recorder(SuiteResult& suite, std::string name) : suite_(suite) { result_.name = std::move(name); }
  ~Recorder() { suite_.properties.push_back(std::move(result_)); }
  Recorder(const Recorder&) = delete;
  Recorder& operator=(const Recorder&) = delete;

  void check(bool ok, const std::function<std::string()>& what) {
    ++result_.checks;
    if (ok) return;
    ++result_.failures;
    if (result_.examples.size() < kExamplesKept) result_.examples.push_back(what());
  }

  /// Runs body and records any library error as a failure.
  void guard(const std::function<void()>& body, const std::function<std::string()>& what) {
    try {
      body();
    } catch (const Error& e) {
      check(false, [&] { return what() + ": " + e.what(); });
    }
  }

 private:
  SuiteResult& suite_;
  PropertyResult result_;
};

IntervalUnion random_union(Rng& rng, double reach) {
  std::vector<std::pair<double, double>> pairs;
  const int count = static_cast<int>(pick(rng, 1, 6));
  for (int i = 0; i < count; ++i) {
    const double a = uniform(rng, 0.0, reach);
    pairs.emplace_back(a, a + 0.01 + uniform(rng, 0.0, reach) / 8.0);
  }
  return make_union(pairs);
}

IntervalUnion ring(double scaled_area) {
  const double r2 = scaled_area / kPi;
  return IntervalUnion::from_pieces({{r2, r2 + 1.0 / kPi}});
}

void gamma_suite(SuiteResult& suite, Rng& rng) {
  {
    Recorder p(suite, "reflection about the mode");
    for (Index k = 1; k <= 200; ++k) {
      const auto kk = static_cast<double>(k);
      for (int i = 0; i < 200; ++i) {
        const double r = uniform(rng, 0.0, kk);
        const double left = fk(k, kk - r);
        const double right = fk(k, kk + r);
        p.check(left <= right + 1e-15, [&] { return describe({{"k", kk}, {"r", r}, {"left", left}, {"right", right}}); });
      }
    }
  }
  {
    Recorder p(suite, "additivity over adjacent intervals");
    for (int i = 0; i < 1000; ++i) {
      const Index k = pick(rng, 0, 12000);
      double pts[3] = {uniform(rng, 0.0, 1e4), uniform(rng, 0.0, 1e4), uniform(rng, 0.0, 1e4)};
      std::sort(pts, pts + 3);
      const double gap = fk_integral(k, pts[0], pts[2]) - fk_integral(k, pts[0], pts[1]) - fk_integral(k, pts[1], pts[2]);
      p.check(std::fabs(gap) <= 1e-12, [&] {
        return describe({{"k", double(k)}, {"a", pts[0]}, {"b", pts[1]}, {"c", pts[2]}, {"gap", gap}});
      });
    }
  }
  {
    Recorder p(suite, "head plus tail is one");
    for (int i = 0; i < 1000; ++i) {
      const Index k = pick(rng, 0, 100000);
      const double b = uniform(rng, 0.0, 2.0 * static_cast<double>(k) + 50.0);
      const double gap = fk_head(k, b) + fk_tail(k, b) - 1.0;
      p.check(std::fabs(gap) <= 1e-13, [&] { return describe({{"k", double(k)}, {"b", b}, {"gap", gap}}); });
    }
  }
  {
    Recorder p(suite, "densities sum to one over the index");
    for (const double r : {0.5, 5.0, 50.0, 500.0}) {
      const auto K = static_cast<Index>(r + 60.0 * std::sqrt(r + 1.0));
      double total = 0.0;
      for (Index k = 0; k <= K; ++k) total += fk(k, r);
      p.check(std::fabs(total - 1.0) <= 1e-10, [&] { return describe({{"r", r}, {"sum", total}}); });
    }
  }
  {
    Recorder p(suite, "agreement with the quadrature oracle");
    for (int i = 0; i < 500; ++i) {
      const Index k = pick(rng, 0, 300);
      double a = uniform(rng, 0.0, 1000.0);
      double b = uniform(rng, 0.0, 1000.0);
      if (a > b) std::swap(a, b);
      const double got = fk_integral(k, a, b);
      const double want = oracle::integrate_fk(k, a, b, 1e-13).value;
      p.check(std::fabs(got - want) <= 1e-10, [&] {
        return describe({{"k", double(k)}, {"a", a}, {"b", b}, {"library", got}, {"oracle", want}});
      });
    }
  }
}

void sets_suite(SuiteResult& suite, Rng& rng) {
  {
    Recorder p(suite, "cantor function is subadditive");
    for (const double L : {1.0, kPi, 7.3}) {
      for (int n = 0; n <= 12; ++n) {
        for (int i = 0; i < 500; ++i) {
          const double a = uniform(rng, -L, 2.0 * L);
          const double b = uniform(rng, -L, 2.0 * L);
          const double lhs = cantor_function(L, n, a + b);
          const double rhs = cantor_function(L, n, a) + cantor_function(L, n, b);
          p.check(lhs <= rhs + 1e-12, [&] {
            return describe({{"L", L}, {"n", double(n)}, {"a", a}, {"b", b}, {"lhs", lhs}, {"rhs", rhs}});
          });
        }
      }
    }
  }
  {
    Recorder p(suite, "cantor function matches the expanded measure");
    for (const double L : {1.0, kPi, 7.3}) {
      for (int n = 0; n <= 12; ++n) {
        const CantorSpec spec(L, n);
        const IntervalUnion expanded = cantor_expand(spec);
        for (int i = 0; i < 20; ++i) {
          const double x = uniform(rng, -0.1 * L, 1.1 * L);
          const double via_function = cantor_function(L, n, x) * spec.measure();
          const double direct = x <= 0.0 ? 0.0 : intersect_halfline(expanded, x, Side::left).measure();
          p.check(std::fabs(via_function - direct) <= 1e-10, [&] {
            return describe({{"L", L}, {"n", double(n)}, {"x", x}, {"function", via_function}, {"direct", direct}});
          });
        }
      }
    }
  }
  {
    Recorder p(suite, "each iterate keeps two thirds of the measure");
    for (const double L : {1.0, kPi, 7.3}) {
      for (int n = 0; n < 14; ++n) {
        const double now = cantor_expand({L, n}).measure();
        const double next = cantor_expand({L, n + 1}).measure();
        const double slack = 1e-15 * L * std::ldexp(1.0, n + 1);
        p.check(std::fabs(next - 2.0 / 3.0 * now) <= slack,
                [&] { return describe({{"L", L}, {"n", double(n)}, {"now", now}, {"next", next}}); });
      }
    }
  }
  {
    Recorder p(suite, "set algebra keeps canonical form");
    auto canonical = [](const IntervalUnion& u) {
      const auto pieces = u.intervals();
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (!(pieces[i].a < pieces[i].b) || pieces[i].a < 0.0) return false;
        if (i > 0 && !(pieces[i - 1].b < pieces[i].a)) return false;
      }
      return true;
    };
    for (int i = 0; i < 300; ++i) {
      const IntervalUnion u = random_union(rng, 50.0);
      const double c = uniform(rng, 0.1, 60.0);
      const IntervalUnion left = intersect_halfline(u, c, Side::left);
      for (const IntervalUnion& v : {scale(u, c), shift(u, c), left, intersect_halfline(u, c, Side::right),
                                     reflect_about(left, c)}) {
        p.check(canonical(v), [&] { return describe({{"trial", double(i)}, {"c", c}}); });
      }
    }
  }
}

void spectrum_suite(SuiteResult& suite, Rng& rng) {
  {
    Recorder p(suite, "eigenvalues below the mass of an initial segment");
    for (int i = 0; i < 300; ++i) {
      const IntervalUnion E = random_union(rng, 30.0);
      const double bound = -std::expm1(-kPi * E.measure());
      const IntervalUnion scaled = scale(E, kPi);
      for (Index k = 0; k <= 100; ++k) {
        const double v = mass(scaled, k);
        p.check(v >= 0.0 && v <= bound + 1e-11,
                [&] { return describe({{"trial", double(i)}, {"k", double(k)}, {"lambda", v}, {"bound", bound}}); });
      }
    }
  }
  {
    Recorder p(suite, "ring eigenvalues rise to the area and fall after");
    for (int m = 0; m <= 50; ++m) {
      for (const double frac : {0.0, 0.25, 0.5, 0.75, 0.999}) {
        const Spectrum sp = spectrum(ring(m + frac));
        for (Index k = 1; k <= sp.K(); ++k) {
          if (k == m + 1) continue;
          const bool ok = k <= m ? sp.lambdas[k - 1] <= sp.lambdas[k] : sp.lambdas[k] <= sp.lambdas[k - 1];
          p.check(ok, [&] { return describe({{"area", m + frac}, {"k", double(k)}}); });
        }
      }
    }
  }
  {
    Recorder p(suite, "shifting outward never raises the first eigenvalue");
    for (int i = 0; i < 100; ++i) {
      const IntervalUnion E = random_union(rng, 10.0);
      const double c = uniform(rng, 0.0, 20.0);
      const double moved = eigenvalue(shift(E, c), 0);
      const double base = eigenvalue(E, 0);
      p.check(moved <= base, [&] { return describe({{"trial", double(i)}, {"c", c}, {"moved", moved}, {"base", base}}); });
    }
  }
  {
    Recorder p(suite, "operator norm dominates recomputed eigenvalues");
    for (int i = 0; i < 30; ++i) {
      const IntervalUnion E = random_union(rng, 200.0);
      const NormEstimate est = operator_norm(E);
      for (int j = 0; j < 20; ++j) {
        const Index k = pick(rng, 0, est.k_searched - 1);
        double direct = 0.0;
        for (const Interval& piece : E.intervals()) {
          direct += oracle::integrate_fk(k, kPi * piece.a, kPi * piece.b, 1e-13).value;
        }
        p.check(est.value >= direct - 1e-10,
                [&] { return describe({{"trial", double(i)}, {"k", double(k)}, {"norm", est.value}, {"direct", direct}}); });
      }
    }
  }
  {
    Recorder p(suite, "comb norm between its bounds");
    for (int j = 1; j <= 100; ++j) {
      const double s = 0.01 * j;
      const double value = comb_norm(CombSpec(s), 1e-12).value;
      const double lower = -std::expm1(-s) * kCombConstant;
      const double upper = std::min(kCombConstant * s, 1.0);
      p.check(lower - 1e-9 <= value && value <= upper + 1e-9,
              [&] { return describe({{"s", s}, {"norm", value}, {"lower", lower}, {"upper", upper}}); });
    }
  }
  {
    Recorder p(suite, "trace equals the scaled measure");
    for (int i = 0; i < 40; ++i) {
      const IntervalUnion E = random_union(rng, 60.0);
      const Spectrum sp = spectrum(E);
      double partial = 0.0;
      bool below = true;
      for (const double v : sp.lambdas) {
        partial += v;
        below = below && partial <= sp.set_measure_scaled + 1e-9;
      }
      p.check(below && std::fabs(partial - sp.set_measure_scaled) <= 1e-9, [&] {
        return describe({{"trial", double(i)}, {"trace", partial}, {"measure", sp.set_measure_scaled}});
      });
    }
  }
}

void cantor_suite(SuiteResult& suite, Rng& rng) {
  {
    Recorder p(suite, "first eigenvalue closed form matches recursion and direct sum");
    for (int n = 0; n <= 14; ++n) {
      for (const double x : {0.1, 1.0, 3.0, 0.5 * std::pow(3.0, n)}) {
        const double closed = lambda0_closed(x, n);
        const double recursive = lambda0_recursive(x, n);
        const double direct = eigenvalue(cantor_profile(x, n), 0);
        p.check(std::fabs(closed - recursive) <= 1e-10 && std::fabs(closed - direct) <= 1e-10, [&] {
          return describe({{"n", double(n)}, {"x", x}, {"closed", closed}, {"recursive", recursive}, {"direct", direct}});
        });
      }
    }
  }
  {
    Recorder p(suite, "relative area gap beyond the mode");
    for (int i = 0; i < 1000; ++i) {
      const Index k = pick(rng, 0, 50);
      const double s = static_cast<double>(k) + uniform(rng, 0.0, 100.0);
      const double threeL = uniform(rng, 1e-6, 20.0);
      p.guard(
          [&] {
            const double gap = relative_area_gap(k, s, threeL);
            p.check(gap >= -1e-11, [&] { return describe({{"k", double(k)}, {"s", s}, {"3L", threeL}, {"gap", gap}}); });
          },
          [&] { return describe({{"k", double(k)}, {"s", s}, {"3L", threeL}}); });
    }
  }
  {
    Recorder p(suite, "slope numerator beyond the mode");
    for (int i = 0; i < 500; ++i) {
      const Index k = pick(rng, 1, 50);
      const double s = static_cast<double>(k) + uniform(rng, 0.0, 100.0);
      const double L = uniform(rng, 1e-3, 10.0);
      const double scale = fk_mode_value(k) * fk_integral(k, s, s + 3.0 * L);
      const double value = area_slope_numerator(k, s, L);
      p.check(value >= -1e-12 * scale, [&] { return describe({{"k", double(k)}, {"s", s}, {"L", L}, {"value", value}}); });
    }
  }
  {
    Recorder p(suite, "shifted iterate dominates both halves");
    for (int i = 0; i < 300; ++i) {
      const double L = uniform(rng, 0.01, 100.0);
      const int n = static_cast<int>(pick(rng, 0, 10));
      const Index k = pick(rng, 0, 40);
      const ShiftComparison v = shift_comparison({L, n}, k);
      p.check(v.upper_part <= v.shifted + 1e-11 && v.lower_part <= v.shifted + 1e-11, [&] {
        return describe({{"L", L}, {"n", double(n)}, {"k", double(k)}, {"upper", v.upper_part},
                         {"lower", v.lower_part}, {"shifted", v.shifted}});
      });
    }
  }
  {
    Recorder p(suite, "norm at most twice the first eigenvalue");
    for (int n = 0; n <= 8; ++n) {
      const double top = 0.5 * std::pow(3.0, n);
      for (int i = 0; i < 8; ++i) {
        const double x = std::min(top, 1e-3 * std::pow(top / 1e-3, i / 7.0));
        const NormEstimate est = operator_norm(cantor_profile(x, n));
        const double first = lambda0_closed(x, n);
        p.check(est.value <= 2.0 * first + 1e-10 && est.tail_bound < 1e-14, [&] {
          return describe({{"n", double(n)}, {"x", x}, {"norm", est.value}, {"lambda0", first}, {"tail", est.tail_bound}});
        });
      }
    }
  }
  {
    Recorder p(suite, "log product series bounded");
    for (int i = 0; i <= 1000; ++i) {
      const double y = std::min(1.0, 0.001 * i);
      const SeriesEstimate est = log_product_series(y);
      p.check(std::isfinite(est.value) && std::fabs(est.value) <= 10.0,
              [&] { return describe({{"y", y}, {"value", est.value}}); });
    }
  }
  {
    Recorder p(suite, "exponential sum deviation bounded");
    for (int n = 0; n <= 40; ++n) {
      const double top = std::pow(3.0, n);
      for (int i = 0; i <= 200; ++i) {
        const double x = std::min(top, std::expm1(std::log1p(top) * i / 200.0));
        const double value = exp_sum_deviation(x, n);
        p.check(std::isfinite(value) && std::fabs(value) <= 10.0,
                [&] { return describe({{"n", double(n)}, {"x", x}, {"value", value}}); });
      }
    }
  }
  {
    Recorder p(suite, "shifted iterates stay below the first eigenvalue");
    for (int i = 0; i < 200; ++i) {
      const int n = static_cast<int>(pick(rng, 0, 10));
      const double x = uniform(rng, 0.01, 0.5 * std::pow(3.0, n));
      const double s = uniform(rng, 0.0, 50.0);
      const Index k = pick(rng, 0, 40);
      const double moved = mass(shift(cantor_expand({x, n}), s + static_cast<double>(k)), k);
      const double first = lambda0_closed(x, n);
      p.check(moved <= first + 1e-10, [&] {
        return describe({{"n", double(n)}, {"x", x}, {"s", s}, {"k", double(k)}, {"mass", moved}, {"lambda0", first}});
      });
    }
  }
}

}  // namespace

std::size_t SuiteResult::checks() const {
  std::size_t total = 0;
  for (const PropertyResult& p : properties) total += p.checks;
  return total;
}

std::size_t SuiteResult::failures() const {
  std::size_t total = 0;
  for (const PropertyResult& p : properties) total += p.failures;
  return total;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"gamma", "sets", "spectrum", "cantor"};
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  SuiteResult suite;
  suite.suite = name;
  Rng rng(seed);
  if (name == "gamma") {
    gamma_suite(suite, rng);
  } else if (name == "sets") {
    sets_suite(suite, rng);
  } else if (name == "spectrum") {
    spectrum_suite(suite, rng);
  } else if (name == "cantor") {
    cantor_suite(suite, rng);
  } else {
    throw ValidationError("unknown suite '" + name + "'; expected gamma, sets, spectrum, cantor or all");
  }
  return suite;
}

std::vector<SuiteResult> run_suites(const std::string& name, std::uint64_t seed) {
  if (name != "all") return {run_suite(name, seed)};
  std::vector<SuiteResult> out;
  for (const std::string& suite : suite_names()) out.push_back(run_suite(suite, seed));
  return out;
}

}  // namespace daubloc::verify
