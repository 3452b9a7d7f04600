#include "daubloc/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <utility>

#include "daubloc/error.hpp"
#include "daubloc/parallel.hpp"

namespace daubloc {

namespace {

// Candidates whose upper bound is within this of the incumbent are refined.
constexpr double kPruneSlack = 1e-12;
constexpr Index kLeafBlock = 4;

std::span<const Interval>::iterator first_reaching(std::span<const Interval> pieces, double lo) {
  return std::partition_point(pieces.begin(), pieces.end(),
                              [lo](const Interval& piece) { return piece.b <= lo; });
}

// P(k+1, x) for k possibly one past the index cap.
double head_for_bound(Index k, double x) {
  if (x <= 0.0) return 0.0;
  const double shape = static_cast<double>(k) + 1.0;
  if (x < shape) return detail::lower_series(k, x);
  return 1.0 - detail::upper_continued_fraction(k, x);
}

struct Block {
  Index k1;
  Index k2;
  double bound;
};

struct BlockOrder {
  bool operator()(const Block& l, const Block& r) const {
    if (l.bound != r.bound) return l.bound < r.bound;
    return l.k1 > r.k1;
  }
};

}  // namespace

CombSpec::CombSpec(double s) : s(s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw DomainError("comb: s must lie in [0, 1], got " + std::to_string(s));
  }
}

namespace detail {

double mass_between(std::span<const Interval> scaled, Index k, double lo, double hi) {
  const Support window = fk_support(k);
  lo = std::max(lo, window.lo);
  hi = std::min(hi, window.hi);
  if (!(lo < hi)) return 0.0;
  double total = 0.0;
  for (auto it = first_reaching(scaled, lo); it != scaled.end() && it->a < hi; ++it) {
    const double a = std::max(it->a, lo);
    const double b = std::min(it->b, hi);
    if (a < b) total += fk_integral(k, a, b);
  }
  return total;
}

double measure_between(std::span<const Interval> scaled, double lo, double hi) {
  double total = 0.0;
  for (auto it = first_reaching(scaled, lo); it != scaled.end() && it->a < hi; ++it) {
    const double a = std::max(it->a, lo);
    const double b = std::min(it->b, hi);
    if (a < b) total += b - a;
  }
  return total;
}

double block_bound(std::span<const Interval> scaled, Index k1, Index k2) {
  // f_k <= f_{k1} on [0, k1], f_k <= f_{k1}(k1) in between, f_k <= f_{k2} past k2 + 1.
  const double left_cut = static_cast<double>(k1);
  const double right_cut = static_cast<double>(k2) + 1.0;
  const double left = mass_between(scaled, k1, 0.0, left_cut);
  const double middle = fk_mode_value(k1) * measure_between(scaled, left_cut, right_cut);
  const double right = mass_between(scaled, k2, right_cut, std::numeric_limits<double>::infinity());
  return std::min(1.0, (left + middle + right) * (1.0 + 1e-12) + 1e-15);
}

double comb_deviation_bound(double s, Index k) {
  constexpr int kTerms = 64;
  const double power = 0.5 * (static_cast<double>(k) + 1.0);
  double total = 0.0;
  for (int m = 1; m <= kTerms; ++m) {
    const double freq = 2.0 * std::numbers::pi * m;
    const double coefficient = std::fabs(std::sin(std::numbers::pi * m * s)) / (std::numbers::pi * m);
    total += coefficient * std::exp(-power * std::log1p(freq * freq));
  }
  const double order = static_cast<double>(k) + 1.0;
  const double remainder =
      std::exp(-order * std::log(2.0 * std::numbers::pi * kTerms)) / (std::numbers::pi * order);
  return 2.0 * (total + remainder) * (1.0 + 1e-12);
}

}  // namespace detail

double mass(const IntervalUnion& scaled, Index k) {
  detail::check_index(k);
  return detail::mass_between(scaled.intervals(), k, 0.0, std::numeric_limits<double>::infinity());
}

double eigenvalue(const IntervalUnion& E, Index k) {
  detail::check_index(k);
  if (E.empty()) return 0.0;
  return mass(scale(E, std::numbers::pi), k);
}

Index auto_cutoff(double scaled_sup) {
  if (!(scaled_sup >= 0.0) || !std::isfinite(scaled_sup)) {
    throw DomainError("auto_cutoff: the set must be bounded");
  }
  auto below = [scaled_sup](Index k) { return head_for_bound(k, scaled_sup) < kAutoCutoffThreshold; };
  if (below(0)) return 0;
  Index hi = std::max<Index>(1, static_cast<Index>(std::ceil(scaled_sup)));
  while (!below(hi)) {
    if (hi >= kMaxIndex) {
      throw CapacityError("auto cutoff exceeds the index cap " + std::to_string(kMaxIndex) +
                          " for pi sup E = " + std::to_string(scaled_sup));
    }
    hi = std::min(kMaxIndex, 2 * hi);
  }
  Index lo = 0;  // invariant: !below(lo), below(hi)
  while (hi - lo > 1) {
    const Index mid = lo + (hi - lo) / 2;
    (below(mid) ? hi : lo) = mid;
  }
  return hi;
}

Spectrum spectrum(const IntervalUnion& E, std::optional<Index> K) {
  const IntervalUnion scaled = scale(E, std::numbers::pi);
  Spectrum out;
  out.set_measure_scaled = scaled.measure();
  Index cutoff = 0;
  if (K) {
    detail::check_index(*K);
    cutoff = *K;
  } else {
    cutoff = auto_cutoff(scaled.sup());
  }
  out.lambdas.assign(static_cast<std::size_t>(cutoff) + 1, 0.0);
  if (!scaled.empty()) {
    parallel_for(out.lambdas.size(), [&](std::size_t k) {
      out.lambdas[k] = mass(scaled, static_cast<Index>(k));
    });
  }
  out.tail_bound = head_for_bound(cutoff + 1, scaled.sup());
  return out;
}

NormEstimate operator_norm(const IntervalUnion& E) {
  NormEstimate est;
  if (E.empty()) {
    est.k_searched = 1;
    return est;
  }
  const IntervalUnion scaled = scale(E, std::numbers::pi);
  const auto pieces = scaled.intervals();
  const Index cutoff = auto_cutoff(scaled.sup());
  est.tail_bound = head_for_bound(cutoff + 1, scaled.sup());
  est.k_searched = cutoff + 1;
  est.value = mass(scaled, 0);
  est.argmax_k = 0;

  auto consider = [&](Index k) {
    const double v = mass(scaled, k);
    if (v > est.value || (v == est.value && k < est.argmax_k)) {
      est.value = v;
      est.argmax_k = k;
    }
  };

  // Initial blocks roughly one standard deviation of f_k wide.
  std::priority_queue<Block, std::vector<Block>, BlockOrder> open;
  for (Index k1 = 1; k1 <= cutoff;) {
    const double spread = std::sqrt(static_cast<double>(k1) + 1.0);
    const Index width = std::clamp<Index>(static_cast<Index>(std::bit_floor(static_cast<std::uint64_t>(spread))),
                                          kLeafBlock, 4096);
    const Index k2 = std::min(cutoff, k1 + width - 1);
    open.push({k1, k2, detail::block_bound(pieces, k1, k2)});
    k1 = k2 + 1;
  }

  while (!open.empty()) {
    const Block block = open.top();
    open.pop();
    if (block.bound < est.value - kPruneSlack) break;
    if (block.k2 - block.k1 + 1 <= kLeafBlock) {
      for (Index k = block.k1; k <= block.k2; ++k) consider(k);
      continue;
    }
    const Index mid = block.k1 + (block.k2 - block.k1) / 2;
    for (const auto& [lo, hi] : {std::pair{block.k1, mid}, std::pair{mid + 1, block.k2}}) {
      const double bound = detail::block_bound(pieces, lo, hi);
      if (bound >= est.value - kPruneSlack) open.push({lo, hi, bound});
    }
  }

  if (est.tail_bound >= est.value) {
    throw InconclusiveError("operator_norm: tail bound " + std::to_string(est.tail_bound) +
                            " is not below the largest eigenvalue " + std::to_string(est.value));
  }
  return est;
}

double comb_eigenvalue(const CombSpec& comb, Index k, double tol) {
  detail::check_index(k);
  if (!(tol > 0.0)) throw DomainError("comb_eigenvalue: tolerance must be positive");
  if (comb.s == 0.0) return 0.0;
  if (comb.s == 1.0) return 1.0;

  const Support window = fk_support(k, std::log(2.0 / tol));
  const Index first = static_cast<Index>(std::floor(window.lo));
  Index last = static_cast<Index>(std::ceil(window.hi));
  while (fk_tail(k, static_cast<double>(last) + 1.0) > 0.5 * tol) ++last;

  double total = 0.0;
  for (Index n = first; n <= last; ++n) {
    const double a = static_cast<double>(n);
    total += fk_integral(k, a, a + comb.s);
  }
  return std::min(total, 1.0);
}

NormEstimate comb_norm(const CombSpec& comb, double tol) {
  if (!(tol > 0.0)) throw DomainError("comb_norm: tolerance must be positive");
  NormEstimate est;
  const double s = comb.s;
  if (s == 0.0) {
    est.k_searched = 1;
    return est;
  }
  const double ceiling = std::min(kCombConstant * s, 1.0);
  est.value = comb_eigenvalue(comb, 0, tol);
  est.argmax_k = 0;
  Index k = 1;
  for (;; ++k) {
    if (est.value >= ceiling - tol) {
      est.tail_bound = ceiling;
      break;
    }
    const double mode_bound = k >= 2 ? s * (1.0 + 2.0 * fk_mode_value(k)) : 1.0;
    const double fourier_bound = s + detail::comb_deviation_bound(s, k);
    if (mode_bound < est.value || fourier_bound < est.value - tol) {
      est.tail_bound = std::min(mode_bound, fourier_bound);
      break;
    }
    if (k >= kMaxIndex) throw CapacityError("comb_norm: search passed the index cap");
    const double v = comb_eigenvalue(comb, k, tol);
    if (v > est.value) {
      est.value = v;
      est.argmax_k = k;
    }
  }
  est.k_searched = k;
  return est;
}

TraceCheck trace_check(const IntervalUnion& E, std::optional<Index> K) {
  const Spectrum sp = spectrum(E, K);
  double total = 0.0;
  for (const double v : sp.lambdas) total += v;
  return {total, sp.set_measure_scaled};
}

}  // namespace daubloc
