#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_util.hpp"

using namespace testing;

namespace {

const SpaceDescriptor L1 = SpaceDescriptor::lp(ExtendedScalar(1));
const SpaceDescriptor Linf = SpaceDescriptor::lp(kInfinity);
const SpaceDescriptor Sum = SpaceDescriptor::l1_plus_linf();

FundamentalFn identity_phi() { return FundamentalFn::power(Rational(1)); }
SpaceDescriptor weak(const FundamentalFn& phi = identity_phi()) { return SpaceDescriptor::weak_marcinkiewicz(phi); }

// 1/φ restricted to [eps, T), extended by its value at eps on [0, eps).
DecreasingProfile truncated_reciprocal(const FundamentalFn& phi, const Rational& eps, const Rational& T) {
  const DecreasingProfile r = reciprocal(phi);
  std::vector<PowerPiece> pieces{PowerPiece::constant(Interval(Rational(0), ExtendedScalar(eps)), r.value_at(eps).value())};
  for (const auto& piece : r.pieces()) {
    const Rational a = std::max(piece.domain().left(), eps);
    const ExtendedScalar b = piece.domain().right() < ExtendedScalar(T) ? piece.domain().right() : ExtendedScalar(T);
    if (ExtendedScalar(a) < b) pieces.push_back(piece.with_domain(Interval(a, b)));
  }
  return DecreasingProfile(pieces);
}

std::vector<FundamentalFn> sample_phis() {
  return {identity_phi(),
          FundamentalFn::power(Q("1/2")),
          FundamentalFn::power(Q("2/3")),
          FundamentalFn({piece("0", "1", "1", "1"), piece("1", "inf", "1")}),
          FundamentalFn({piece("0", "inf", "1", "1", "1", "1")}),
          FundamentalFn({piece("0", "1", "1", "1/2"), piece("1", "inf", "1", "1")})};
}

}  // namespace

TEST_CASE("shrink families") {
  CHECK(ShrinkFamily::head().member(4) == IntervalSet{iv("0", "1/4")});
  CHECK(ShrinkFamily::tail().member(3) == IntervalSet{iv("3", "inf")});
  ShrinkComponent s{ShrinkComponent::Kind::shrinking, Q("2"), Q("1"), kInfinity};
  ShrinkComponent e{ShrinkComponent::Kind::escaping, Q("0"), Q("1"), E("1/2")};
  const ShrinkFamily c = ShrinkFamily::custom({s, e});
  CHECK(c.member(2) == IntervalSet{iv("2", "5/2"), iv("2", "5/2")});
  CHECK(c.member(4) == IntervalSet{iv("2", "9/4"), iv("4", "9/2")});

  CHECK_THROWS_AS(ShrinkFamily::custom({}), DomainError);
  CHECK_THROWS_AS(ShrinkFamily::custom({{ShrinkComponent::Kind::shrinking, Q("-1"), Q("1"), kInfinity}}), DomainError);
  CHECK_THROWS_AS(ShrinkFamily::custom({{ShrinkComponent::Kind::shrinking, Q("0"), Q("0"), kInfinity}}), DomainError);
  CHECK_THROWS_AS(ShrinkFamily::custom({{ShrinkComponent::Kind::escaping, Q("0"), Q("1"), E("0")}}), DomainError);
}

TEST_CASE("property: every family vanishes on bounded windows") {
  SampleGenerator gen(61);
  for (int i = 0; i < 100; ++i) {
    const ShrinkFamily f = gen.custom_family();
    // λ(E_k ∩ [0, n]) for a large k against k = 1.
    for (const Rational n : {Q("1"), Q("10")}) {
      const ExtendedScalar early = f.member(1).measure_up_to(n);
      const ExtendedScalar late = f.member(1u << 16).measure_up_to(n);
      CHECK(late <= early);
      CHECK(ld(late) < 1e-3L * std::max(1.0L, ld(early)) + 1e-3L);
    }
  }
}

TEST_CASE("ac_two_limit_test examples") {
  SampleGenerator gen(62);
  for (int i = 0; i < 20; ++i) CHECK(ac_two_limit_test(L1, gen.step_profile()).is_ac());

  const AcVerdict chi = ac_two_limit_test(Linf, steps({{"1", "1"}}));
  CHECK_FALSE(chi.is_ac());
  CHECK(chi.failing_side == Side::head);
  CHECK(exact(chi.limit, "1"));

  const AcVerdict clip = ac_two_limit_test(weak(), clipped_inverse(Q("1"), Q("1")));
  CHECK_FALSE(clip.is_ac());
  CHECK(clip.failing_side == Side::tail);
  CHECK(exact(clip.limit, "1"));
  CHECK(clip.describe() == "notAC (tail limit = 1)");

  CHECK_THROWS_AS(ac_two_limit_test(L1, inverse_head()), DomainError);
}

TEST_CASE("two-limit test on the other descriptors") {
  const DecreasingProfile p = steps({{"1", "2"}, {"inf", "1/2"}});
  const AcVerdict sum = ac_two_limit_test(Sum, p);
  CHECK_FALSE(sum.is_ac());
  CHECK(sum.failing_side == Side::tail);
  CHECK(exact(sum.limit, "1/2"));

  const AcVerdict cap = ac_two_limit_test(SpaceDescriptor::l1_cap_linf(), steps({{"1", "3"}}));
  CHECK(cap.failing_side == Side::head);
  CHECK(exact(cap.limit, "3"));

  const SpaceDescriptor finite = SpaceDescriptor::lp(kInfinity, MeasureSpace::non_atomic(E("1")));
  CHECK(exact(ac_two_limit_test(finite, steps({{"1", "3"}})).tail_limit, "0"));
}

TEST_CASE("ac_simulate examples") {
  const auto ks = linear_schedule(16);
  const auto a = ac_simulate(L1, steps({{"1", "2"}}), ShrinkFamily::head(), ks);
  REQUIRE(a.size() == 16);
  for (const auto& s : a) CHECK(s.norm == ExtendedScalar(Rational(2, static_cast<long>(s.k))));

  for (const auto& s : ac_simulate(Linf, steps({{"1", "1"}}), ShrinkFamily::head(), ks)) CHECK(exact(s.norm, "1"));
  for (const auto& s : ac_simulate(weak(), clipped_inverse(Q("1"), Q("1")), ShrinkFamily::tail(), ks)) {
    CHECK(exact(s.norm, "1"));
  }
  CHECK(geometric_schedule(10) == std::vector<std::uint64_t>{1, 2, 4, 8});
}

TEST_CASE("ac_simulate is independent of the job count") {
  SampleGenerator gen(63);
  const ShrinkFamily family = gen.custom_family();
  const auto ks = geometric_schedule(1u << 12);
  const DecreasingProfile p = clipped_inverse(Q("2"), Q("1/2"));
  const auto one = ac_simulate(weak(), p, family, ks, 1);
  const auto four = ac_simulate(weak(), p, family, ks, 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i].norm.to_string() == four[i].norm.to_string());
}

TEST_CASE("ac_necessary_tail examples") {
  CHECK_FALSE(ac_necessary_tail(Linf, steps({{"1", "1"}, {"inf", "1/2"}})).holds);
  CHECK(ac_necessary_tail(Linf, steps({{"1", "1"}})).holds);
  CHECK(ac_necessary_tail(Linf, DecreasingProfile({piece("0", "1", "1"), piece("1", "inf", "1", "-2")})).holds);
  const TailCheck finite =
      ac_necessary_tail(SpaceDescriptor::lp(kInfinity, MeasureSpace::non_atomic(E("1"))), steps({{"inf", "1/2"}}));
  CHECK(finite.holds);
  CHECK_FALSE(finite.note.empty());
}

TEST_CASE("ac_order_checks examples") {
  const OrderCheckReport l1 = ac_order_checks(L1, steps({{"1", "1"}}), steps({{"2", "2"}}));
  CHECK(l1.f_verdict.is_ac());
  CHECK(l1.g_verdict.is_ac());
  CHECK_FALSE(l1.any_violation());

  const DecreasingProfile g({piece("0", "1", "1"), piece("1", "inf", "1", "-2")});
  CHECK(ac_two_limit_test(Sum, g).is_ac());
  SampleGenerator gen(64);
  for (int i = 0; i < 50; ++i) {
    // f = g·χ[0,a) lies below g, hence f ≺ g.
    const DecreasingProfile f = truncate(g, ExtendedScalar(gen.grid(Q("1/64"), Q("8"))));
    const OrderCheckReport r = ac_order_checks(Sum, f, g);
    CHECK(r.hlp.relation_holds);
    CHECK(r.f_verdict.is_ac());
    CHECK_FALSE(r.any_violation());
  }

  const DecreasingProfile f1 = steps({{"1", "1"}});
  const DecreasingProfile g1({piece("0", "1", "1/2", "-1/2")});
  const HlpProbeReport probe = hlp_principle_probe(weak(), {{f1, g1}});
  const OrderCheckReport m = ac_order_checks(weak(), f1, g1, &probe);
  CHECK(m.hlp.skipped);
  CHECK(m.hlp.reason.rfind("HLP principle falsified for this descriptor", 0) == 0);
}

TEST_CASE("marcinkiewicz_ac_classify examples") {
  const MarcinkiewiczClass witness = marcinkiewicz_ac_classify(identity_phi(), reciprocal(identity_phi()));
  CHECK(witness.member);
  CHECK_FALSE(witness.ac);
  CHECK(exact(witness.limit_at_infinity, "1"));

  const DecreasingProfile mixed({piece("0", "1", "1", "-1/2"), piece("1", "inf", "1", "-2")});
  const MarcinkiewiczClass m = marcinkiewicz_ac_classify(identity_phi(), mixed);
  CHECK(m.member);
  CHECK(m.ac);

  const MarcinkiewiczClass out = marcinkiewicz_ac_classify(identity_phi(), DecreasingProfile({piece("0", "1", "1", "-2")}));
  CHECK_FALSE(out.member);
}

TEST_CASE("property: the reciprocal is never absolutely continuous") {
  for (const auto& phi : sample_phis()) {
    const MarcinkiewiczClass c = marcinkiewicz_ac_classify(phi, reciprocal(phi));
    CHECK(c.member);
    CHECK_FALSE(c.ac);
  }
}

TEST_CASE("property: bounded compactly supported truncations of 1/phi are AC") {
  for (const auto& phi : sample_phis()) {
    // With φ(0+) > 0 the head limit φ(0+)·p(0+) of a bounded profile stays positive, as in L∞.
    const bool vanishes_at_zero = phi.limit_at_zero().is_zero();
    for (const auto& [eps, T] : {std::pair{Q("1/4"), Q("4")}, std::pair{Q("1/16"), Q("9")}, std::pair{Q("1"), Q("2")}}) {
      const MarcinkiewiczClass c = marcinkiewicz_ac_classify(phi, truncated_reciprocal(phi, eps, T));
      CHECK(c.member);
      CHECK(c.ac == vanishes_at_zero);
      CHECK(c.limit_at_infinity.is_zero());
    }
  }
}

TEST_CASE("property: classify agrees with the two-limit test") {
  SampleGenerator gen(65);
  ProfileShape shape;
  shape.blowup = true;
  shape.constant_tail = true;
  const auto phis = sample_phis();
  int members = 0;
  for (int i = 0; i < 300; ++i) {
    const FundamentalFn& phi = phis[static_cast<std::size_t>(i) % phis.size()];
    DecreasingProfile p = gen.profile(shape);
    if (i % 7 == 0) p = clipped_inverse(gen.grid(Q("1/64"), Q("4")), gen.grid(Q("1/64"), Q("2")));
    const MarcinkiewiczClass c = marcinkiewicz_ac_classify(phi, p);
    if (!c.member) {
      CHECK_THROWS_AS(ac_two_limit_test(weak(phi), p), DomainError);
      continue;
    }
    ++members;
    CHECK(ac_two_limit_test(weak(phi), p).is_ac() == c.ac);
  }
  CHECK(members > 100);
}

TEST_CASE("property: pointwise order ideal") {
  SampleGenerator gen(66);
  ProfileShape shape;
  shape.constant_tail = true;
  for (const auto& X : {L1, Linf, Sum, SpaceDescriptor::l1_cap_linf(), SpaceDescriptor::lp(E("2")), weak()}) {
    for (int i = 0; i < 100; ++i) {
      const auto [f, g] = gen.ordered_pair(shape);
      if (!evaluate_norm(X, g).is_finite()) continue;
      CHECK_FALSE(ac_order_checks(X, f, g).pointwise.violation);
    }
  }
}
