#include "daubloc/gamma_core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "daubloc/error.hpp"

namespace daubloc {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min() / kEps;
constexpr double kLnSqrt2Pi = 0.91893853320467274178032973640562;

// Stirling remainders for k = 1..15, computed to 22 digits in arbitrary precision.
constexpr std::array<double, 16> kStirlingRemainder = {
    0.0,
    0.08106146679532725821967,
    0.04134069595540929409382,
    0.02767792568499833914879,
    0.02079067210376509311152,
    0.01664469118982119216319,
    0.01387612882307074799875,
    0.01189670994589177009506,
    0.01041126526197209649748,
    0.009255462182712732917729,
    0.008330563433362871256469,
    0.007573675487951840794972,
    0.006942840107209529865664,
    0.00640899418800420706844,
    0.005951370112758847735624,
    0.005554733551962801371039,
};

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

GaussRule make_gauss_rule(int order) {
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    long double z = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (order + 0.5L));
    long double derivative = 0.0L;
    for (int iter = 0; iter < 100; ++iter) {
      long double p1 = 1.0L;
      long double p2 = 0.0L;
      for (int j = 1; j <= order; ++j) {
        const long double p3 = p2;
        p2 = p1;
        p1 = ((2.0L * j - 1.0L) * z * p2 - (j - 1.0L) * p3) / j;
      }
      derivative = order * (z * p1 - p2) / (z * z - 1.0L);
      const long double previous = z;
      z = previous - p1 / derivative;
      if (std::fabs(z - previous) < 1e-19L) break;
    }
    const long double w = 2.0L / ((1.0L - z * z) * derivative * derivative);
    rule.nodes[i] = static_cast<double>(-z);
    rule.nodes[order - 1 - i] = static_cast<double>(z);
    rule.weights[i] = static_cast<double>(w);
    rule.weights[order - 1 - i] = static_cast<double>(w);
  }
  return rule;
}

const GaussRule& gauss_rule(int order) {
  static const GaussRule rule8 = make_gauss_rule(8);
  static const GaussRule rule16 = make_gauss_rule(16);
  static const GaussRule rule64 = make_gauss_rule(64);
  switch (order) {
    case 8: return rule8;
    case 16: return rule16;
    case 64: return rule64;
    default: throw DomainError("gauss_legendre_fk: unsupported order " + std::to_string(order));
  }
}

Index max_iterations(Index k) {
  return 200 + static_cast<Index>(30.0 * std::sqrt(static_cast<double>(k) + 1.0));
}

void check_radius(double r, const char* what) {
  if (std::isnan(r) || r < 0.0) {
    throw DomainError(std::string(what) + ": radius must be >= 0, got " + std::to_string(r));
  }
}

// log f_k(r) without index validation; k may exceed the cap by one.
double log_fk_unchecked(Index k, double r) {
  if (r == 0.0) return k == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  if (std::isinf(r)) return -std::numeric_limits<double>::infinity();
  if (k == 0) return -r;
  const double kd = static_cast<double>(k);
  return -detail::stirlerr(k) - detail::bd0(kd, r) - kLnSqrt2Pi - 0.5 * std::log(kd);
}

}  // namespace

namespace detail {

void check_index(Index k) {
  if (k < 0) throw DomainError("eigenvalue index must be >= 0, got " + std::to_string(k));
  if (k > kMaxIndex) {
    throw CapacityError("eigenvalue index " + std::to_string(k) + " exceeds the cap " +
                        std::to_string(kMaxIndex));
  }
}

double stirlerr(Index k) {
  if (k <= 15) return kStirlingRemainder[static_cast<std::size_t>(k)];
  constexpr double s0 = 1.0 / 12.0;
  constexpr double s1 = 1.0 / 360.0;
  constexpr double s2 = 1.0 / 1260.0;
  constexpr double s3 = 1.0 / 1680.0;
  constexpr double s4 = 1.0 / 1188.0;
  const double n = static_cast<double>(k);
  const double nn = n * n;
  if (k > 500) return (s0 - s1 / nn) / n;
  if (k > 80) return (s0 - (s1 - s2 / nn) / nn) / n;
  if (k > 35) return (s0 - (s1 - (s2 - s3 / nn) / nn) / nn) / n;
  return (s0 - (s1 - (s2 - (s3 - s4 / nn) / nn) / nn) / nn) / n;
}

double bd0(double x, double np) {
  if (std::fabs(x - np) < 0.1 * (x + np)) {
    double v = (x - np) / (x + np);
    double s = (x - np) * v;
    if (std::fabs(s) < std::numeric_limits<double>::min()) return s;
    double ej = 2.0 * x * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const double next = s + ej / (2 * j + 1);
      if (next == s) return next;
      s = next;
    }
  }
  return x * std::log(x / np) + np - x;
}

LogFk::LogFk(Index k) : k_(k), offset_(0.0) {
  if (k > 0) {
    offset_ = -stirlerr(k) - kLnSqrt2Pi - 0.5 * std::log(static_cast<double>(k));
  }
}

double LogFk::operator()(double r) const {
  if (k_ == 0) return -r;
  if (r <= 0.0) return -std::numeric_limits<double>::infinity();
  return offset_ - bd0(static_cast<double>(k_), r);
}

double gauss_legendre_fk(const LogFk& log_f, double a, double b, int panels, int order) {
  const GaussRule& rule = gauss_rule(order);
  const double width = (b - a) / panels;
  const double half = 0.5 * width;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double left = a + p * width;
    const double mid = left + half;
    double panel = 0.0;
    for (int i = 0; i < order; ++i) {
      panel += rule.weights[i] * std::exp(log_f(mid + half * rule.nodes[i]));
    }
    total += panel * half;
  }
  return total;
}

Index panel_count(Index k, double a, double b, double max_log_change) {
  const double width = b - a;
  const double kd = static_cast<double>(k);
  double slope = 1.0;
  if (k > 0) slope = std::max(std::fabs(kd / a - 1.0), std::fabs(kd / b - 1.0));
  const double by_slope = std::ceil(width * slope / max_log_change);
  const double by_width = std::ceil(width / (0.5 * std::sqrt(kd + 1.0)));
  const double panels = std::max({1.0, by_slope, by_width});
  if (!(panels < 1e9)) return std::numeric_limits<Index>::max();
  return static_cast<Index>(panels);
}

double lower_series(Index k, double x) {
  if (x == 0.0) return 0.0;
  const double a = static_cast<double>(k) + 1.0;
  double sum = 1.0;
  double term = 1.0;
  const Index limit = max_iterations(k);
  Index n = 1;
  for (; n <= limit; ++n) {
    term *= x / (a + static_cast<double>(n));
    sum += term;
    if (term < sum * kEps) break;
  }
  if (n > limit) {
    throw ConvergenceError("lower incomplete gamma series did not converge for k=" +
                           std::to_string(k));
  }
  return std::exp(log_fk_unchecked(k + 1, x) + std::log(sum));
}

double upper_continued_fraction(Index k, double x) {
  if (std::isinf(x)) return 0.0;
  const double a = static_cast<double>(k) + 1.0;
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  const Index limit = max_iterations(k);
  Index i = 1;
  for (; i <= limit; ++i) {
    const double id = static_cast<double>(i);
    const double an = -id * (id - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) break;
  }
  if (i > limit) {
    throw ConvergenceError("upper incomplete gamma continued fraction did not converge for k=" +
                           std::to_string(k));
  }
  // e^{-x} x^{k+1} / k! = x f_k(x)
  return std::exp(std::log(x) + log_fk_unchecked(k, x) + std::log(h));
}

}  // namespace detail

double log_fk(Index k, double r) {
  detail::check_index(k);
  check_radius(r, "fk");
  return log_fk_unchecked(k, r);
}

double fk(Index k, double r) { return std::exp(log_fk(k, r)); }

double fk_tail(Index k, double a) {
  detail::check_index(k);
  check_radius(a, "fk_tail");
  if (a == 0.0) return 1.0;
  if (a < static_cast<double>(k) + 1.0) return 1.0 - detail::lower_series(k, a);
  return detail::upper_continued_fraction(k, a);
}

double fk_head(Index k, double b) {
  detail::check_index(k);
  check_radius(b, "fk_head");
  if (b == 0.0) return 0.0;
  if (std::isinf(b)) return 1.0;
  if (b < static_cast<double>(k) + 1.0) return detail::lower_series(k, b);
  return 1.0 - detail::upper_continued_fraction(k, b);
}

double fk_integral(Index k, double a, double b) {
  detail::check_index(k);
  check_radius(a, "fk_integral");
  if (std::isnan(b) || a > b) {
    throw DomainError("fk_integral: need a <= b, got [" + std::to_string(a) + ", " +
                      std::to_string(b) + "]");
  }
  if (a == b) return 0.0;
  if (std::isinf(b)) return fk_tail(k, a);

  const double mode_edge = static_cast<double>(k) + 1.0;
  const double sigma = std::sqrt(mode_edge);
  const bool quadrature_ok = a > 0.0 || k == 0;

  // Short intervals: direct quadrature is both cheaper and free of cancellation.
  if (quadrature_ok && b - a <= 0.5 * sigma) {
    const Index panels = detail::panel_count(k, a, b, 2.0);
    if (panels <= 8) {
      const detail::LogFk log_f(k);
      return std::clamp(detail::gauss_legendre_fk(log_f, a, b, static_cast<int>(panels), 16),
                        0.0, 1.0);
    }
  }

  double diff = 0.0;
  double scale = 1.0;
  if (b <= mode_edge) {
    const double pa = detail::lower_series(k, a);
    const double pb = detail::lower_series(k, b);
    diff = pb - pa;
    scale = pb;
  } else if (a >= mode_edge) {
    const double qa = detail::upper_continued_fraction(k, a);
    const double qb = detail::upper_continued_fraction(k, b);
    diff = qa - qb;
    scale = qa;
  } else {
    const double pa = detail::lower_series(k, a);
    const double qb = detail::upper_continued_fraction(k, b);
    diff = (1.0 - pa) - qb;
  }

  // Both endpoints on the same flank with nearly equal Q values: the
  // difference has lost too many digits, integrate directly instead.
  if (quadrature_ok && diff < 1e-3 * scale) {
    const Index panels = detail::panel_count(k, a, b, 8.0);
    if (panels <= 4096) {
      const detail::LogFk log_f(k);
      diff = detail::gauss_legendre_fk(log_f, a, b, static_cast<int>(panels), 64);
    }
  }
  return std::clamp(diff, 0.0, 1.0);
}

Support fk_support(Index k, double log_cut) {
  detail::check_index(k);
  const double shape = static_cast<double>(k) + 1.0;
  const double target = log_cut / shape;
  // h(u) = u - 1 - ln u; mass below shape*u (u < 1) or above it (u > 1) is <= e^{-shape h(u)}.
  auto h = [](double u) { return u - 1.0 - std::log(u); };

  // lower side, bisect on t = ln u in [-(target + 2), 0]
  double t_far = -(target + 2.0);
  double t_near = 0.0;
  for (int i = 0; i < 200 && t_near - t_far > 1e-12 * (1.0 + std::fabs(t_far)); ++i) {
    const double mid = 0.5 * (t_far + t_near);
    if (h(std::exp(mid)) >= target) {
      t_far = mid;
    } else {
      t_near = mid;
    }
  }
  const double lo = k == 0 ? 0.0 : std::min(shape * std::exp(t_far), static_cast<double>(k));

  double u_near = 1.0;
  double u_far = std::max(4.0, 2.0 * target + 4.0);
  for (int i = 0; i < 200 && u_far - u_near > 1e-12 * u_far; ++i) {
    const double mid = 0.5 * (u_near + u_far);
    if (h(mid) >= target) {
      u_far = mid;
    } else {
      u_near = mid;
    }
  }
  return {lo, shape * u_far};
}

}  // namespace daubloc
