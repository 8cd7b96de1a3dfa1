#pragma once

#include "rikit/scalar.hpp"

#include <optional>
#include <vector>

namespace rikit {

/// Half-open interval [left, right) of [0, ∞); right may be +∞.
class Interval {
 public:
  Interval(Rational left, ExtendedScalar right);

  const Rational& left() const { return left_; }
  const ExtendedScalar& right() const { return right_; }
  bool bounded() const { return right_.is_finite(); }
  /// The finite right endpoint; throws for unbounded intervals.
  const Rational& right_rational() const { return right_.rational(); }

  ExtendedScalar length() const;
  bool contains(const Rational& t) const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Rational left_;
  ExtendedScalar right_;
};

std::optional<Interval> intersect(const Interval& a, const Interval& b);

/// Finite union of intervals kept sorted, disjoint and with touching
/// neighbours merged.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(std::vector<Interval> intervals);
  IntervalSet(std::initializer_list<Interval> intervals)
      : IntervalSet(std::vector<Interval>(intervals)) {}

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }

  ExtendedScalar measure() const;
  /// λ(E ∩ [0, s]).
  ExtendedScalar measure_up_to(const Rational& s) const;
  /// λ(E ∩ [0, s]) for s possibly infinite.
  ExtendedScalar measure_up_to(const ExtendedScalar& s) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

/// inf{ s : λ(E ∩ [0,s]) > t }, or +∞ when λ(E) ≤ t.
ExtendedScalar measure_inverse(const IntervalSet& set, const Rational& t);

}  // namespace rikit
