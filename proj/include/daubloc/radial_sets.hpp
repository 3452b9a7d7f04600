#pragma once

// Spherically symmetric sets described by their profile: a subset E of the
// half-line of r^2 values. All sets here are finite unions of closed intervals.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace daubloc {

struct Interval {
  double a = 0.0;
  double b = 0.0;

  double length() const { return b - a; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Sorted, pairwise disjoint closed intervals with nonempty interiors.
/// Touching or overlapping pieces are merged on construction, so two
/// neighbours always satisfy b_i < a_{i+1}. Immutable once built.
class IntervalUnion {
 public:
  IntervalUnion() = default;

  /// Sorts and merges arbitrary valid pieces. Throws ValidationError on a
  /// piece with a >= b, a negative endpoint or a non-finite endpoint.
  static IntervalUnion from_pieces(std::vector<Interval> pieces);

  std::span<const Interval> intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  bool empty() const { return intervals_.empty(); }

  double measure() const;
  /// Right end of the last interval, 0 for the empty set.
  double sup() const { return intervals_.empty() ? 0.0 : intervals_.back().b; }

  friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

 private:
  explicit IntervalUnion(std::vector<Interval> canonical) : intervals_(std::move(canonical)) {}
  friend IntervalUnion canonical_union(std::vector<Interval> sorted_pieces);

  std::vector<Interval> intervals_;
};

/// Builds from already sorted pieces (merging touching ones); used by the
/// set algebra below. Throws PreconditionError if the input is out of order.
IntervalUnion canonical_union(std::vector<Interval> sorted_pieces);

IntervalUnion make_union(std::span<const std::pair<double, double>> pairs);

IntervalUnion scale(const IntervalUnion& u, double c);
IntervalUnion shift(const IntervalUnion& u, double c);

enum class Side { left, right };

/// left: u intersected with [0, c]; right: u intersected with [c, inf).
IntervalUnion intersect_halfline(const IntervalUnion& u, double c, Side side);

/// { 2c - r : r in u }. Requires u to lie inside [0, c].
IntervalUnion reflect_about(const IntervalUnion& u, double c);

inline constexpr int kMaxCantorIterate = 24;

/// The n-th mid-third iterate C_n(L) of [0, L], kept symbolic.
struct CantorSpec {
  double base_length;
  int iterate;

  CantorSpec(double base_length, int iterate);

  double measure() const;
  double piece_length() const;
};

/// The 2^n intervals of C_n(L), endpoints computed as L * m / 3^n with exact
/// integer numerators m. Throws CapacityError for n > 24.
IntervalUnion cantor_expand(const CantorSpec& spec);

/// |C_n(L) intersected with [0, x]| / |C_n(L)|, by the self-similar digit recursion.
double cantor_function(double L, int n, double x);

}  // namespace daubloc
