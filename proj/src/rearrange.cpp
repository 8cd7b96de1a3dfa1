#include "rikit/rearrange.hpp"

#include <map>

namespace rikit {

namespace {

// Distinct non-zero values of f with the measure of each level set, largest
// value first.
std::map<Rational, ExtendedScalar, std::greater<>> level_sets(const StepFunction& f) {
  std::map<Rational, ExtendedScalar, std::greater<>> levels;
  for (const auto& s : f.steps()) {
    auto [it, fresh] = levels.try_emplace(s.value, ExtendedScalar(0));
    it->second += s.interval.length();
  }
  return levels;
}

}  // namespace

ExtendedScalar DistributionFunction::at(const Rational& s) const {
  for (const auto& [iv, v] : pieces) {
    if (iv.contains(s)) return v;
  }
  return ExtendedScalar(0);
}

DistributionFunction distribution(const StepFunction& f) {
  // With values v_1 > ... > v_n, the set {f > s} for s in [v_{k+1}, v_k) is
  // the union of the top k level sets.
  std::vector<Rational> values;
  std::vector<ExtendedScalar> stacked;
  ExtendedScalar acc{0};
  for (const auto& [v, m] : level_sets(f)) {
    acc += m;
    values.push_back(v);
    stacked.push_back(acc);
  }
  DistributionFunction out;
  for (std::size_t k = values.size(); k-- > 0;) {
    const Rational left = k + 1 < values.size() ? values[k + 1] : Rational(0);
    out.pieces.emplace_back(Interval(left, ExtendedScalar(values[k])), stacked[k]);
  }
  out.pieces.emplace_back(Interval(values.empty() ? Rational(0) : values.front(), kInfinity),
                          ExtendedScalar(0));
  return out;
}

DecreasingProfile rearrangement(const StepFunction& f) {
  std::vector<PowerPiece> pieces;
  ExtendedScalar start{0};
  for (const auto& [v, m] : level_sets(f)) {
    const ExtendedScalar end = start + m;
    pieces.push_back(PowerPiece::constant(Interval(start.rational(), end), ExtendedScalar(v)));
    if (end.is_infinite()) break;
    start = end;
  }
  return DecreasingProfile(std::move(pieces));
}

DecreasingProfile rearrange_restricted(const DecreasingProfile& p, const IntervalSet& set) {
  std::vector<PowerPiece> out;
  Rational acc(0);
  for (const auto& iv : set.intervals()) {
    const Rational offset = iv.left() - acc;
    for (const auto& piece : p.pieces()) {
      if (auto part = intersect(piece.domain(), iv)) out.push_back(piece.with_domain(*part).shifted(offset));
    }
    if (!iv.bounded()) break;
    acc += iv.right_rational() - iv.left();
  }
  return DecreasingProfile(std::move(out));
}

bool equimeasurable(const StepFunction& f, const StepFunction& g) { return rearrangement(f) == rearrangement(g); }

ExtendedScalar maximal_eval(const DecreasingProfile& p, const Rational& t) {
  if (t <= 0) throw DomainError("maximal function needs t > 0");
  return p.integral(Rational(0), ExtendedScalar(t)) / ExtendedScalar(t);
}

HlGap hl_gap(const StepFunction& f, const StepFunction& g) {
  return {multiply(f, g).integral(), integrate_product(rearrangement(f), rearrangement(g))};
}

ExtendedScalar tail_limit(const DecreasingProfile& p) {
  switch (p.tail_kind()) {
    case TailKind::constant:
      return p.tail().coefficient();
    case TailKind::zero:
    case TailKind::power:
      break;
  }
  return ExtendedScalar(0);
}

}  // namespace rikit
