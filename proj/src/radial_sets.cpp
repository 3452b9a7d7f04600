#include "daubloc/radial_sets.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "daubloc/error.hpp"

namespace daubloc {

namespace {

std::string describe(const Interval& piece) {
  std::ostringstream out;
  out.precision(17);
  out << "(" << piece.a << ", " << piece.b << ")";
  return out.str();
}

void validate_piece(const Interval& piece) {
  if (!std::isfinite(piece.a) || !std::isfinite(piece.b)) {
    throw ValidationError("non-finite interval endpoint in " + describe(piece));
  }
  if (piece.a < 0.0) throw ValidationError("negative interval endpoint in " + describe(piece));
  if (!(piece.a < piece.b)) throw ValidationError("interval needs a < b, got " + describe(piece));
}

}  // namespace

IntervalUnion canonical_union(std::vector<Interval> sorted_pieces) {
  std::vector<Interval> merged;
  merged.reserve(sorted_pieces.size());
  for (const Interval& piece : sorted_pieces) {
    if (!(piece.a < piece.b) || piece.a < 0.0 || !std::isfinite(piece.b)) {
      throw PreconditionError("canonical_union: invalid piece " + describe(piece));
    }
    if (!merged.empty()) {
      if (piece.a < merged.back().a) {
        throw PreconditionError("canonical_union: pieces out of order at " + describe(piece));
      }
      if (piece.a <= merged.back().b) {
        merged.back().b = std::max(merged.back().b, piece.b);
        continue;
      }
    }
    merged.push_back(piece);
  }
  return IntervalUnion(std::move(merged));
}

IntervalUnion IntervalUnion::from_pieces(std::vector<Interval> pieces) {
  for (const Interval& piece : pieces) validate_piece(piece);
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& l, const Interval& r) { return l.a < r.a || (l.a == r.a && l.b < r.b); });
  return canonical_union(std::move(pieces));
}

double IntervalUnion::measure() const {
  double total = 0.0;
  for (const Interval& piece : intervals_) total += piece.length();
  return total;
}

IntervalUnion make_union(std::span<const std::pair<double, double>> pairs) {
  std::vector<Interval> pieces;
  pieces.reserve(pairs.size());
  for (const auto& [a, b] : pairs) pieces.push_back({a, b});
  return IntervalUnion::from_pieces(std::move(pieces));
}

IntervalUnion scale(const IntervalUnion& u, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError("scale: factor must be positive and finite, got " + std::to_string(c));
  }
  std::vector<Interval> out;
  out.reserve(u.size());
  for (const Interval& piece : u.intervals()) out.push_back({piece.a * c, piece.b * c});
  return canonical_union(std::move(out));
}

IntervalUnion shift(const IntervalUnion& u, double c) {
  if (!(c >= 0.0) || !std::isfinite(c)) {
    throw DomainError("shift: offset must be >= 0 and finite, got " + std::to_string(c));
  }
  std::vector<Interval> out;
  out.reserve(u.size());
  for (const Interval& piece : u.intervals()) out.push_back({piece.a + c, piece.b + c});
  return canonical_union(std::move(out));
}

IntervalUnion intersect_halfline(const IntervalUnion& u, double c, Side side) {
  if (!(c >= 0.0)) throw DomainError("intersect_halfline: cut point must be >= 0");
  std::vector<Interval> out;
  for (const Interval& piece : u.intervals()) {
    const Interval clipped = side == Side::left ? Interval{piece.a, std::min(piece.b, c)}
                                                : Interval{std::max(piece.a, c), piece.b};
    if (clipped.a < clipped.b) out.push_back(clipped);
  }
  return canonical_union(std::move(out));
}

IntervalUnion reflect_about(const IntervalUnion& u, double c) {
  if (!(c >= 0.0) || !std::isfinite(c)) throw DomainError("reflect_about: centre must be >= 0");
  if (u.sup() > c) {
    throw PreconditionError("reflect_about: set extends to " + std::to_string(u.sup()) +
                            ", beyond the reflection point " + std::to_string(c));
  }
  std::vector<Interval> out;
  out.reserve(u.size());
  const auto pieces = u.intervals();
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
    out.push_back({2.0 * c - it->b, 2.0 * c - it->a});
  }
  return canonical_union(std::move(out));
}

CantorSpec::CantorSpec(double base_length, int iterate) : base_length(base_length), iterate(iterate) {
  if (!(base_length > 0.0) || !std::isfinite(base_length)) {
    throw DomainError("CantorSpec: base length must be positive and finite");
  }
  if (iterate < 0) throw DomainError("CantorSpec: iterate must be >= 0");
}

double CantorSpec::measure() const { return base_length * std::pow(2.0 / 3.0, iterate); }

double CantorSpec::piece_length() const { return base_length / std::pow(3.0, iterate); }

IntervalUnion cantor_expand(const CantorSpec& spec) {
  if (spec.iterate > kMaxCantorIterate) {
    throw CapacityError("cantor_expand: iterate " + std::to_string(spec.iterate) +
                        " would materialise more than 2^24 intervals; use cantor_function "
                        "or the closed forms instead");
  }
  // Left endpoints as integer numerators over 3^n: each level maps m to 3m and 3m + 2.
  std::vector<std::int64_t> numerators{0};
  for (int level = 0; level < spec.iterate; ++level) {
    std::vector<std::int64_t> next;
    next.reserve(numerators.size() * 2);
    for (const std::int64_t m : numerators) {
      next.push_back(3 * m);
      next.push_back(3 * m + 2);
    }
    numerators.swap(next);
  }
  std::int64_t denominator = 1;
  for (int level = 0; level < spec.iterate; ++level) denominator *= 3;
  const double den = static_cast<double>(denominator);
  const double L = spec.base_length;

  std::vector<Interval> pieces;
  pieces.reserve(numerators.size());
  for (const std::int64_t m : numerators) {
    pieces.push_back({L * static_cast<double>(m) / den, L * static_cast<double>(m + 1) / den});
  }
  pieces.front().a = 0.0;
  pieces.back().b = L;
  return canonical_union(std::move(pieces));
}

double cantor_function(double L, int n, double x) {
  if (!(L > 0.0)) throw DomainError("cantor_function: L must be positive");
  if (n < 0) throw DomainError("cantor_function: n must be >= 0");
  if (std::isnan(x)) throw DomainError("cantor_function: x is NaN");
  if (x <= 0.0) return 0.0;
  if (x >= L) return 1.0;

  // The slope of the level-n function reaches (3/2)^n, so the digit recursion
  // runs in extended precision.
  long double t = static_cast<long double>(x) / static_cast<long double>(L);
  long double result = 0.0L;
  long double weight = 1.0L;
  constexpr long double third = 1.0L / 3.0L;
  constexpr long double two_thirds = 2.0L / 3.0L;
  for (int level = 0; level < n; ++level) {
    if (t <= third) {
      t *= 3.0L;
      weight *= 0.5L;
    } else if (t < two_thirds) {
      return static_cast<double>(result + 0.5L * weight);
    } else {
      result += 0.5L * weight;
      weight *= 0.5L;
      t = 3.0L * t - 2.0L;
    }
  }
  return static_cast<double>(result + weight * std::clamp(t, 0.0L, 1.0L));
}

}  // namespace daubloc
