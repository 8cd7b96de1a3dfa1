#include "rikit/acontinuity.hpp"

#include "rikit/parallel.hpp"
#include "rikit/rearrange.hpp"

namespace rikit {

namespace {

// Function-local so that callers running during static initialization are safe.
const Rational& zero_q() {
  static const Rational z(0);
  return z;
}

// Near 0 a piece behaves like K·t^e, with e ≠ 0 only when its base vanishes.
Monomial near_zero(const PowerPiece& z, Rational& e) {
  e = 0;
  if (z.is_zero()) return Monomial::constant(ExtendedScalar(0));
  if (z.is_constant()) return Monomial::constant(z.coefficient());
  if (z.shift() == 0) {
    e = z.exponent();
    return Monomial::constant(z.coefficient()).times(z.scale(), z.exponent());
  }
  return Monomial::constant(z.coefficient()).times(z.shift(), z.exponent());
}

ExtendedScalar limit_of_power(const Rational& e, const Monomial& k) {
  if (k.is_zero()) return ExtendedScalar(0);
  if (e > 0) return ExtendedScalar(0);
  if (e < 0) return kInfinity;
  return k.value();
}

ExtendedScalar head_limit_of(const SpaceDescriptor& space, const DecreasingProfile& p) {
  if (space.space().is_atomic()) {
    // The transfer averages over the first atom: (1/β)∫₀^ε p → 0.
    return p.integral(zero_q(), ExtendedScalar(1)).is_finite() ? ExtendedScalar(0) : kInfinity;
  }
  switch (space.kind()) {
    case SpaceKind::lp:
      return space.exponent().is_infinite() ? p.head_limit().value() : ExtendedScalar(0);
    case SpaceKind::l1_plus_linf:
      return ExtendedScalar(0);
    case SpaceKind::l1_cap_linf:
      return p.head_limit().value();
    case SpaceKind::weak_marcinkiewicz:
      return weighted_limit_at_zero(space.phi(), p).value();
  }
  return ExtendedScalar(0);
}

ExtendedScalar tail_limit_of(const SpaceDescriptor& space, const DecreasingProfile& p) {
  if (space.space().finite()) return ExtendedScalar(0);
  switch (space.kind()) {
    case SpaceKind::lp:
      return space.exponent().is_infinite() ? tail_limit(p) : ExtendedScalar(0);
    case SpaceKind::l1_plus_linf:
    case SpaceKind::l1_cap_linf:
      return tail_limit(p);
    case SpaceKind::weak_marcinkiewicz:
      // sup_t φ(t)p(t+k) tends to lim φp at ∞ since φ(t)/φ(t+k) → 1.
      return weighted_limit_at_infinity(space.phi(), p).value();
  }
  return ExtendedScalar(0);
}

std::string side_name(Side s) { return s == Side::head ? "head" : "tail"; }

}  // namespace

ShrinkFamily ShrinkFamily::custom(std::vector<ShrinkComponent> components) {
  if (components.empty()) throw DomainError("custom shrink family needs at least one component");
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    const std::string where = "shrink component " + std::to_string(i);
    if (c.anchor < 0) throw DomainError(where + ": anchor must be >= 0");
    if (c.step <= 0) throw DomainError(where + ": step must be > 0");
    // A shrinking width must vanish and an escaping window must leave every
    // bounded interval; both hold once step > 0.
    if (c.kind == ShrinkComponent::Kind::escaping && c.length.sign() <= 0) {
      throw DomainError(where + ": escaping length must be > 0");
    }
  }
  return ShrinkFamily(Kind::custom, std::move(components));
}

IntervalSet ShrinkFamily::member(std::uint64_t k) const {
  if (k == 0) throw DomainError("shrink family index starts at 1");
  const Rational rk(Integer(std::to_string(k)));
  switch (kind_) {
    case Kind::head:
      return IntervalSet{Interval(zero_q(), ExtendedScalar(Rational(1 / rk)))};
    case Kind::tail:
      return IntervalSet{Interval(rk, kInfinity)};
    case Kind::custom:
      break;
  }
  std::vector<Interval> out;
  for (const auto& c : components_) {
    if (c.kind == ShrinkComponent::Kind::shrinking) {
      out.emplace_back(c.anchor, ExtendedScalar(Rational(c.anchor + c.step / rk)));
    } else {
      const Rational left = c.anchor + c.step * rk;
      out.emplace_back(left, ExtendedScalar(left) + c.length);
    }
  }
  return IntervalSet(std::move(out));
}

std::string ShrinkFamily::describe() const {
  switch (kind_) {
    case Kind::head:
      return "head [0,1/k)";
    case Kind::tail:
      return "tail [k,inf)";
    case Kind::custom:
      break;
  }
  std::string s = "custom";
  for (const auto& c : components_) {
    if (c.kind == ShrinkComponent::Kind::shrinking) {
      s += " [" + to_string(c.anchor) + "," + to_string(c.anchor) + "+" + to_string(c.step) + "/k)";
    } else {
      s += " [" + to_string(c.anchor) + "+" + to_string(c.step) + "k, +" + c.length.to_string() + ")";
    }
  }
  return s;
}

std::string AcVerdict::describe() const {
  if (is_ac()) return "AC";
  return "notAC (" + side_name(*failing_side) + " limit = " + limit.to_string() + ")";
}

AcVerdict ac_two_limit_test(const SpaceDescriptor& space, const DecreasingProfile& p) {
  if (!bar_norm({space}, p).is_finite()) {
    throw DomainError("ac_two_limit_test: profile is not in " + space.describe());
  }
  AcVerdict v;
  v.head_limit = head_limit_of(space, p);
  v.tail_limit = tail_limit_of(space, p);
  if (v.head_limit.sign() > 0) {
    v.status = AcStatus::not_ac;
    v.failing_side = Side::head;
    v.limit = v.head_limit;
  } else if (v.tail_limit.sign() > 0) {
    v.status = AcStatus::not_ac;
    v.failing_side = Side::tail;
    v.limit = v.tail_limit;
  }
  return v;
}

std::vector<AcSample> ac_simulate(const SpaceDescriptor& space, const DecreasingProfile& p, const ShrinkFamily& family,
                                  const std::vector<std::uint64_t>& ks, unsigned jobs) {
  const RepresentationSpec spec{space};
  return parallel_map(ks.size(), jobs, [&](std::size_t i) {
    return AcSample{ks[i], bar_norm(spec, rearrange_restricted(p, family.member(ks[i])))};
  });
}

std::vector<std::uint64_t> geometric_schedule(std::uint64_t k_max) {
  std::vector<std::uint64_t> ks;
  for (std::uint64_t k = 1; k <= k_max; k *= 2) {
    ks.push_back(k);
    if (k > k_max / 2) break;
  }
  return ks;
}

std::vector<std::uint64_t> linear_schedule(std::uint64_t k_max) {
  std::vector<std::uint64_t> ks;
  for (std::uint64_t k = 1; k <= k_max; ++k) ks.push_back(k);
  return ks;
}

TailCheck ac_necessary_tail(const SpaceDescriptor& space, const DecreasingProfile& p) {
  if (space.space().finite()) {
    return {true, "vacuous on a finite measure space: the obstruction needs a set of infinite measure"};
  }
  const ExtendedScalar limit = tail_limit(p);
  if (limit.is_zero()) return {true, ""};
  return {false, "p(t) -> " + limit.to_string() + " as t -> inf, so p is not absolutely continuous"};
}

OrderCheckReport ac_order_checks(const SpaceDescriptor& space, const DecreasingProfile& f, const DecreasingProfile& g,
                                 const HlpProbeReport* probe) {
  OrderCheckReport r;
  r.f_verdict = ac_two_limit_test(space, f);
  r.g_verdict = ac_two_limit_test(space, g);
  const bool transfer_fails = r.g_verdict.is_ac() && !r.f_verdict.is_ac();

  r.pointwise.relation = "f <= g";
  r.pointwise.relation_holds = pointwise_le(f, g);
  r.pointwise.violation = r.pointwise.relation_holds && transfer_fails;

  r.hlp.relation = "f < g (HLP)";
  if (probe && probe->violated()) {
    r.hlp.skipped = true;
    r.hlp.reason = "HLP principle falsified for this descriptor: " + probe->describe();
    return r;
  }
  // ∫₀ᵗ g = ∞ dominates every finite primitive, so a non-integrable g
  // majorizes.
  r.hlp.relation_holds = hlp_compare(f, g, HlpOptions{true}).majorized();
  r.hlp.violation = r.hlp.relation_holds && transfer_fails;
  return r;
}

MarcinkiewiczClass marcinkiewicz_ac_classify(const FundamentalFn& phi, const DecreasingProfile& p) {
  MarcinkiewiczClass c;
  Rational e_phi, e_p;
  Monomial k = near_zero(phi.pieces().front(), e_phi);
  const Monomial kp = near_zero(p.pieces().front(), e_p);
  if (kp.is_zero()) {
    c.limit_at_zero = ExtendedScalar(0);
  } else {
    c.limit_at_zero = limit_of_power(Rational(e_phi + e_p), k.times(kp));
  }

  const PowerPiece& x = phi.pieces().back();
  const PowerPiece& y = p.tail();
  if (y.is_zero()) {
    c.limit_at_infinity = ExtendedScalar(0);
  } else {
    Monomial lead = x.leading_coefficient();
    c.limit_at_infinity =
        limit_of_power(Rational(-(x.effective_exponent() + y.effective_exponent())), lead.times(y.leading_coefficient()));
  }

  c.member = weighted_sup(phi, p).is_finite();
  c.ac = c.member && c.limit_at_zero.is_zero() && c.limit_at_infinity.is_zero();
  return c;
}

}  // namespace rikit
