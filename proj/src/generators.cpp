#include "rikit/generators.hpp"

#include <algorithm>

namespace rikit {

namespace {

// Function-local so that callers running during static initialization are safe.
const Rational& zero_q() {
  static const Rational z(0);
  return z;
}
const Rational& grid_q() {
  static const Rational g(1, 64);
  return g;
}

Rational from_u64(std::uint64_t v) { return Rational(Integer(std::to_string(v))); }

// Indices of bounded constant non-zero pieces.
std::vector<std::size_t> bounded_steps(const DecreasingProfile& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.pieces().size(); ++i) {
    const PowerPiece& z = p.pieces()[i];
    if (z.is_constant() && !z.is_zero() && z.domain().bounded()) out.push_back(i);
  }
  return out;
}

}  // namespace

std::uint64_t SampleGenerator::uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
}

bool SampleGenerator::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Rational SampleGenerator::grid(const Rational& lo, const Rational& hi) {
  Integer a = lo.get_num() * 64;
  Integer b = lo.get_den();
  Integer first = (a + b - 1) / b;
  Integer last = floor(Rational(hi * 64));
  if (first > last) throw DomainError("empty grid range");
  const std::uint64_t span = Integer(last - first).get_ui();
  Rational out(Integer(first + Integer(std::to_string(uniform(0, span)))), Integer(64));
  out.canonicalize();
  return out;
}

StepFunction SampleGenerator::step_function(const MeasureSpace& space, std::size_t max_steps) {
  const std::size_t n = uniform(1, max_steps);
  std::vector<Step> steps;
  if (space.is_atomic()) {
    const Rational& beta = space.beta();
    std::uint64_t atoms = 2 * max_steps;
    if (space.atom_count()) atoms = std::min<std::uint64_t>(atoms, *space.atom_count());
    std::vector<Rational> values(atoms, Rational(0));
    for (std::size_t i = 0; i < n; ++i) values[uniform(0, atoms - 1)] = grid(grid_q(), Rational(4));
    for (std::uint64_t a = 0; a < atoms; ++a) {
      if (values[a] == 0) continue;
      steps.push_back({Interval(beta * from_u64(a), ExtendedScalar(Rational(beta * from_u64(a + 1)))), values[a]});
    }
    return StepFunction(std::move(steps), space);
  }
  Rational span(8);
  if (space.finite()) span = std::min(span, space.total().rational());
  std::vector<Rational> cuts;
  for (std::size_t i = 0; i < 2 * n; ++i) cuts.push_back(grid(zero_q(), span));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  // Repeated values exercise level sets spread over several intervals.
  std::vector<Rational> palette{grid(grid_q(), Rational(4)), grid(grid_q(), Rational(4)), grid(grid_q(), Rational(4))};
  for (std::size_t i = 0; i + 1 < cuts.size(); i += 2) {
    const Rational v = coin(0.3) ? palette[uniform(0, 2)] : grid(grid_q(), Rational(4));
    steps.push_back({Interval(cuts[i], ExtendedScalar(cuts[i + 1])), v});
  }
  return StepFunction(std::move(steps), space);
}

DecreasingProfile SampleGenerator::step_profile(std::size_t max_steps) {
  ProfileShape shape;
  shape.power_tail = false;
  shape.max_steps = max_steps;
  return profile(shape);
}

DecreasingProfile SampleGenerator::profile(const ProfileShape& shape) {
  std::vector<PowerPiece> pieces;
  Rational t(0);
  Rational current = grid(Rational(1), shape.max_value);
  if (shape.blowup && coin(0.6)) {
    const long j = static_cast<long>(uniform(shape.min_blowup_root, shape.max_blowup_root));
    const Rational a = grid(Rational(1, 8), shape.max_width);
    pieces.emplace_back(Interval(zero_q(), ExtendedScalar(a)), ExtendedScalar(current), Rational(-1, j), Rational(1 / a));
    t = a;
  }
  const std::size_t steps = uniform(pieces.empty() ? 1 : 0, shape.max_steps);
  for (std::size_t i = 0; i < steps && current >= grid_q(); ++i) {
    const Rational value = i == 0 && pieces.empty() ? current : grid(grid_q(), current);
    const Rational right = t + grid(grid_q(), shape.max_width);
    pieces.push_back(PowerPiece::constant(Interval(t, ExtendedScalar(right)), ExtendedScalar(value)));
    t = right;
    current = value;
  }
  const int tail = static_cast<int>(uniform(0, 2));
  if (tail == 1 && shape.constant_tail) {
    pieces.push_back(PowerPiece::constant(Interval(t, kInfinity), ExtendedScalar(grid(grid_q(), current))));
  } else if (tail == 2 && shape.power_tail) {
    const Rational c = grid(grid_q(), current);
    const long q = coin() ? -2 : -3;
    pieces.emplace_back(Interval(t, kInfinity), ExtendedScalar(c), Rational(q), Rational(1 / t));
  }
  return DecreasingProfile(std::move(pieces));
}

std::pair<DecreasingProfile, DecreasingProfile> SampleGenerator::majorized_pair(const ProfileShape& shape) {
  DecreasingProfile g = profile(shape);
  const auto idx = bounded_steps(g);
  const int recipe = static_cast<int>(uniform(0, 2));
  std::vector<PowerPiece> pieces = g.pieces();

  if (recipe == 0 && idx.size() >= 2) {
    // Average a run of consecutive steps.
    std::size_t lo = uniform(0, idx.size() - 2);
    std::size_t hi = uniform(lo + 1, idx.size() - 1);
    while (hi > lo && idx[hi] - idx[lo] != hi - lo) --hi;
    if (hi > lo) {
      const std::size_t a = idx[lo], b = idx[hi];
      const Rational left = pieces[a].domain().left();
      const Rational right = pieces[b].domain().right_rational();
      ExtendedScalar mass{0};
      for (std::size_t i = a; i <= b; ++i) mass += pieces[i].integral();
      const Rational avg = mass.rational() / (right - left);
      std::vector<PowerPiece> out(pieces.begin(), pieces.begin() + static_cast<long>(a));
      out.push_back(PowerPiece::constant(Interval(left, ExtendedScalar(right)), ExtendedScalar(avg)));
      out.insert(out.end(), pieces.begin() + static_cast<long>(b + 1), pieces.end());
      return {DecreasingProfile(std::move(out)), g};
    }
  }
  if (recipe == 1 && idx.size() >= 2) {
    // Move mass from one step to the next, short of reversing their order.
    for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
      const std::size_t i = idx[k];
      if (idx[k + 1] != i + 1) continue;
      const Rational vi = pieces[i].coefficient().rational();
      const Rational vj = pieces[i + 1].coefficient().rational();
      if (vi <= vj) continue;
      const Rational li = pieces[i].domain().length().rational();
      const Rational lj = pieces[i + 1].domain().length().rational();
      const Rational room = (vi - vj) / (1 / li + 1 / lj);
      const Rational delta = room * Rational(static_cast<long>(uniform(1, 4)), 4);
      pieces[i] = PowerPiece::constant(pieces[i].domain(), ExtendedScalar(Rational(vi - delta / li)));
      pieces[i + 1] = PowerPiece::constant(pieces[i + 1].domain(), ExtendedScalar(Rational(vj + delta / lj)));
      return {DecreasingProfile(std::move(pieces)), g};
    }
  }
  return {scale(g, ExtendedScalar(grid(grid_q(), Rational(1)))), g};
}

std::pair<DecreasingProfile, DecreasingProfile> SampleGenerator::ordered_pair(const ProfileShape& shape) {
  DecreasingProfile g = profile(shape);
  switch (uniform(0, 2)) {
    case 0:
      try {
        return {cap(g, grid(grid_q(), Rational(8))), g};
      } catch (const DomainError&) {
      }
      [[fallthrough]];
    case 1:
      return {shift_left(g, grid(grid_q(), Rational(2))), g};
    default:
      break;
  }
  return {scale(g, ExtendedScalar(grid(grid_q(), Rational(1)))), g};
}

std::pair<StepFunction, StepFunction> SampleGenerator::ordered_step_pair(const MeasureSpace& space) {
  StepFunction g = step_function(space);
  std::vector<Step> steps;
  for (const auto& s : g.steps()) {
    if (coin(0.2)) continue;
    steps.push_back({s.interval, s.value * grid(zero_q(), Rational(1))});
  }
  steps.erase(std::remove_if(steps.begin(), steps.end(), [](const Step& s) { return s.value == 0; }), steps.end());
  return {StepFunction(std::move(steps), space), g};
}

ShrinkFamily SampleGenerator::custom_family() {
  std::vector<ShrinkComponent> parts;
  const std::size_t n = uniform(1, 3);
  for (std::size_t i = 0; i < n; ++i) {
    ShrinkComponent c;
    c.anchor = grid(zero_q(), Rational(4));
    c.step = grid(Rational(1, 4), Rational(4));
    if (coin()) {
      c.kind = ShrinkComponent::Kind::escaping;
      c.length = coin() ? kInfinity : ExtendedScalar(grid(grid_q(), Rational(4)));
    }
    parts.push_back(c);
  }
  return ShrinkFamily::custom(std::move(parts));
}

AxiomSamples SampleGenerator::axiom_samples(const MeasureSpace& space, std::size_t n) {
  AxiomSamples s;
  ProfileShape shape;
  shape.blowup = true;
  shape.constant_tail = true;
  for (std::size_t i = 0; i < n; ++i) {
    s.ordered_pairs.push_back(ordered_step_pair(space));
    s.sum_pairs.emplace_back(step_function(space), step_function(space));
    s.profiles.push_back(profile(shape));
  }
  const Rational unit = space.is_atomic() ? space.beta() : Rational(1);
  if (space.total() >= ExtendedScalar(Rational(2 * unit))) {
    s.sum_pairs.emplace_back(StepFunction({{Interval(zero_q(), ExtendedScalar(unit)), Rational(1)}}, space),
                             StepFunction({{Interval(unit, ExtendedScalar(Rational(2 * unit))), Rational(1)}}, space));
  }
  s.profiles.push_back(inverse_head());
  s.probe_measures = {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2)};
  return s;
}

std::pair<StepFunction, StepFunction> aligned_step_pair(SampleGenerator& gen, const MeasureSpace& space) {
  StepFunction f = gen.step_function(space);
  const Rational a = gen.grid(grid_q(), Rational(4));
  const Rational b = gen.grid(zero_q(), Rational(1));
  std::vector<Step> steps;
  for (const auto& s : f.steps()) steps.push_back({s.interval, a * s.value + b});
  return {f, StepFunction(std::move(steps), space)};
}

DecreasingProfile inverse_head() {
  return DecreasingProfile({PowerPiece(Interval(zero_q(), ExtendedScalar(1)), ExtendedScalar(1), Rational(-1))});
}

DecreasingProfile clipped_inverse(const Rational& c, const Rational& a) {
  return DecreasingProfile({PowerPiece::constant(Interval(zero_q(), ExtendedScalar(a)), ExtendedScalar(c)),
                            PowerPiece(Interval(a, kInfinity), ExtendedScalar(c), Rational(-1), Rational(1 / a))});
}

}  // namespace rikit
