#include "rikit/interval.hpp"

#include <algorithm>

namespace rikit {

Interval::Interval(Rational left, ExtendedScalar right) : left_(std::move(left)), right_(std::move(right)) {
  left_.canonicalize();
  if (left_ < 0) throw DomainError("interval starts below 0: " + to_string(left_));
  if (!right_.is_exact()) throw DomainError("interval endpoints must be exact");
  if (!(ExtendedScalar(left_) < right_)) {
    throw DomainError("empty interval [" + to_string(left_) + ", " + right_.to_string() + ")");
  }
}

ExtendedScalar Interval::length() const { return right_ - ExtendedScalar(left_); }

bool Interval::contains(const Rational& t) const {
  return left_ <= t && ExtendedScalar(t) < right_;
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Rational lo = std::max(a.left(), b.left());
  ExtendedScalar hi = min(a.right(), b.right());
  if (!(ExtendedScalar(lo) < hi)) return std::nullopt;
  return Interval(std::move(lo), std::move(hi));
}

IntervalSet::IntervalSet(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.left() < b.left(); });
  for (auto& iv : intervals) {
    if (!intervals_.empty() && ExtendedScalar(iv.left()) <= intervals_.back().right()) {
      const Interval& last = intervals_.back();
      intervals_.back() = Interval(last.left(), max(last.right(), iv.right()));
    } else {
      intervals_.push_back(std::move(iv));
    }
  }
}

ExtendedScalar IntervalSet::measure() const {
  ExtendedScalar total{0};
  for (const auto& iv : intervals_) total += iv.length();
  return total;
}

ExtendedScalar IntervalSet::measure_up_to(const Rational& s) const {
  return measure_up_to(ExtendedScalar(s));
}

ExtendedScalar IntervalSet::measure_up_to(const ExtendedScalar& s) const {
  ExtendedScalar total{0};
  for (const auto& iv : intervals_) {
    if (!(ExtendedScalar(iv.left()) < s)) break;
    total += min(iv.right(), s) - ExtendedScalar(iv.left());
  }
  return total;
}

ExtendedScalar measure_inverse(const IntervalSet& set, const Rational& t) {
  if (t < 0) throw DomainError("measure_inverse needs t >= 0");
  ExtendedScalar acc{0};
  for (const auto& iv : set.intervals()) {
    const ExtendedScalar len = iv.length();
    if (acc + len > ExtendedScalar(t)) {
      return ExtendedScalar(iv.left() + (t - acc.rational()));
    }
    acc += len;
  }
  return kInfinity;
}

}  // namespace rikit
