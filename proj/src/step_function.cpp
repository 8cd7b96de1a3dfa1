#include "rikit/step_function.hpp"

#include <algorithm>
#include <map>

namespace rikit {

namespace {

bool on_grid(const Rational& x, const Rational& beta) {
  const Rational q = x / beta;
  return q.get_den() == 1;
}

// Combine two step functions over the common refinement of their breakpoints.
template <class Op>
StepFunction combine(const StepFunction& f, const StepFunction& g, Op op) {
  if (!(f.space() == g.space())) throw DomainError("step functions live on different measure spaces");
  std::vector<Rational> cuts = f.breakpoints();
  const auto more = g.breakpoints();
  cuts.insert(cuts.end(), more.begin(), more.end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  bool unbounded = false;
  for (const auto* h : {&f, &g}) {
    for (const auto& s : h->steps()) unbounded = unbounded || !s.interval.bounded();
  }
  std::vector<Step> out;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const Rational& a = cuts[i];
    ExtendedScalar b;
    if (i + 1 < cuts.size()) {
      b = ExtendedScalar(cuts[i + 1]);
    } else if (unbounded) {
      b = kInfinity;
    } else {
      break;
    }
    Rational v = op(f.value_at(a), g.value_at(a));
    if (v != 0) out.push_back({Interval(a, b), v});
  }
  return StepFunction(std::move(out), f.space());
}

}  // namespace

StepFunction::StepFunction(std::vector<Step> steps, MeasureSpace space) : space_(std::move(space)) {
  std::sort(steps.begin(), steps.end(),
            [](const Step& a, const Step& b) { return a.interval.left() < b.interval.left(); });
  for (auto& s : steps) {
    s.value.canonicalize();
    if (s.value < 0) throw DomainError("step values must be non-negative");
    if (!steps_.empty() && ExtendedScalar(s.interval.left()) < steps_.back().interval.right()) {
      throw DomainError("overlapping steps at t=" + to_string(s.interval.left()));
    }
    if (space_.total() < s.interval.right()) {
      throw DomainError("step [" + to_string(s.interval.left()) + ", " + s.interval.right().to_string() +
                        ") exceeds the total measure " + space_.total().to_string());
    }
    if (space_.is_atomic()) {
      const bool right_ok = !s.interval.bounded() || on_grid(s.interval.right_rational(), space_.beta());
      if (!on_grid(s.interval.left(), space_.beta()) || !right_ok) {
        throw DomainError("step at t=" + to_string(s.interval.left()) + " is not a union of atom cells");
      }
    }
    if (s.value == 0) continue;
    // Fuse touching steps of equal value.
    if (!steps_.empty() && steps_.back().value == s.value &&
        steps_.back().interval.right() == ExtendedScalar(s.interval.left())) {
      steps_.back().interval = Interval(steps_.back().interval.left(), s.interval.right());
      continue;
    }
    steps_.push_back(std::move(s));
  }
}

StepFunction StepFunction::from_atoms(const std::vector<Rational>& values, MeasureSpace space) {
  const Rational beta = space.beta();
  std::vector<Step> steps;
  for (std::size_t n = 0; n < values.size(); ++n) {
    const Rational left = beta * Rational(static_cast<long>(n));
    steps.push_back({Interval(left, ExtendedScalar(left + beta)), values[n]});
  }
  return StepFunction(std::move(steps), std::move(space));
}

Rational StepFunction::value_at(const Rational& t) const {
  for (const auto& s : steps_) {
    if (s.interval.contains(t)) return s.value;
  }
  return Rational(0);
}

ExtendedScalar StepFunction::integral(const Rational& from, const ExtendedScalar& to) const {
  ExtendedScalar total{0};
  if (!(ExtendedScalar(from) < to)) return total;
  const Interval window(from, to);
  for (const auto& s : steps_) {
    if (auto part = intersect(s.interval, window)) total += ExtendedScalar(s.value) * part->length();
  }
  return total;
}

std::vector<Rational> StepFunction::breakpoints() const {
  std::vector<Rational> out;
  for (const auto& s : steps_) {
    out.push_back(s.interval.left());
    if (s.interval.bounded()) out.push_back(s.interval.right_rational());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

StepFunction operator+(const StepFunction& f, const StepFunction& g) {
  return combine(f, g, [](const Rational& a, const Rational& b) { return Rational(a + b); });
}

StepFunction multiply(const StepFunction& f, const StepFunction& g) {
  return combine(f, g, [](const Rational& a, const Rational& b) { return Rational(a * b); });
}

StepFunction scale(const StepFunction& f, const Rational& c) {
  if (c < 0) throw DomainError("negative scale factor");
  std::vector<Step> steps;
  for (const auto& s : f.steps()) steps.push_back({s.interval, s.value * c});
  return StepFunction(std::move(steps), f.space());
}

bool dominated(const StepFunction& f, const StepFunction& g) {
  bool ok = true;
  combine(f, g, [&](const Rational& a, const Rational& b) {
    if (a > b) ok = false;
    return Rational(0);
  });
  return ok;
}

}  // namespace rikit
