#pragma once

#include "rikit/profile.hpp"

namespace rikit {

/// s ↦ μ({|f| > s}) as a right-continuous step function of the level s.
struct DistributionFunction {
  std::vector<std::pair<Interval, ExtendedScalar>> pieces;

  ExtendedScalar at(const Rational& s) const;
};

DistributionFunction distribution(const StepFunction& f);

/// f* as an exact step profile: level sets sorted by value, measures stacked.
DecreasingProfile rearrangement(const StepFunction& f);

/// (p·χ_E)*, i.e. t ↦ p(measure_inverse(E, t)).
DecreasingProfile rearrange_restricted(const DecreasingProfile& p, const IntervalSet& set);

bool equimeasurable(const StepFunction& f, const StepFunction& g);

/// f**(t) = (1/t)∫₀ᵗ f*.
ExtendedScalar maximal_eval(const DecreasingProfile& p, const Rational& t);

struct HlGap {
  ExtendedScalar lhs;  // ∫|fg| dμ
  ExtendedScalar rhs;  // ∫ f*g* dλ
};

HlGap hl_gap(const StepFunction& f, const StepFunction& g);

/// lim_{t→∞} p(t).
ExtendedScalar tail_limit(const DecreasingProfile& p);

}  // namespace rikit
