#pragma once

#include "rikit/interval.hpp"
#include "rikit/measure_space.hpp"

#include <vector>

namespace rikit {

struct Step {
  Interval interval;
  Rational value;

  friend bool operator==(const Step&, const Step&) = default;
};

/// Non-negative simple function: a finite list of disjoint steps, zero
/// elsewhere. On atomic spaces each step must cover whole atom cells.
class StepFunction {
 public:
  StepFunction(std::vector<Step> steps, MeasureSpace space);

  static StepFunction zero(MeasureSpace space) { return StepFunction({}, std::move(space)); }
  /// Atom values v_0, v_1, ... on an atomic space.
  static StepFunction from_atoms(const std::vector<Rational>& values, MeasureSpace space);

  const std::vector<Step>& steps() const { return steps_; }
  const MeasureSpace& space() const { return space_; }

  Rational value_at(const Rational& t) const;
  /// ∫ over [from, to).
  ExtendedScalar integral(const Rational& from, const ExtendedScalar& to) const;
  ExtendedScalar integral() const { return integral(Rational(0), kInfinity); }
  /// Every breakpoint, sorted.
  std::vector<Rational> breakpoints() const;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  std::vector<Step> steps_;
  MeasureSpace space_;
};

StepFunction operator+(const StepFunction& f, const StepFunction& g);
/// Pointwise product (used for ∫|fg|).
StepFunction multiply(const StepFunction& f, const StepFunction& g);
StepFunction scale(const StepFunction& f, const Rational& c);
/// f ≤ g everywhere.
bool dominated(const StepFunction& f, const StepFunction& g);

}  // namespace rikit
