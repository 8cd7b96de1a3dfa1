#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_util.hpp"

using namespace testing;

namespace {

// Cell average by direct integration, independent of the transfer code.
ExtendedScalar cell_average(const DecreasingProfile& p, const Rational& beta, std::size_t n) {
  const Rational a = beta * Rational(static_cast<long>(n));
  return integrate(p, Interval(a, ExtendedScalar(Rational(a + beta)))) / ExtendedScalar(beta);
}

SpaceDescriptor on_atoms(SpaceDescriptor X, const char* beta) { return X.with_space(MeasureSpace::atomic(Q(beta))); }

}  // namespace

TEST_CASE("atomic_transfer examples") {
  const AtomicSequence a = atomic_transfer(steps({{"1/2", "3"}, {"1", "1"}}), Q("1"));
  CHECK(exact(a.at(0), "2"));
  for (std::size_t n = 1; n < 8; ++n) CHECK(exact(a.at(n), "0"));

  const AtomicSequence c = atomic_transfer(steps({{"1", "5"}, {"2", "3"}, {"3", "1"}}), Q("1"));
  CHECK(exact(c.at(0), "5"));
  CHECK(exact(c.at(1), "3"));
  CHECK(exact(c.at(2), "1"));

  CHECK(exact(atomic_transfer(steps({{"1", "4"}}), Q("2")).at(0), "2"));
}

TEST_CASE("atomic_transfer flags a divergent first cell") {
  const AtomicSequence a = atomic_transfer(inverse_head(), Q("1"));
  CHECK(a.at(0).is_infinite());
  CHECK_THROWS_AS(a.to_profile(), DomainError);
}

TEST_CASE("nonatomic_transfer examples") {
  const DecreasingProfile p = steps({{"2", "1"}});
  CHECK(nonatomic_transfer(p, kInfinity) == p);
  CHECK(nonatomic_transfer(p, E("1")) == steps({{"1", "1"}}));
  CHECK(nonatomic_transfer(DecreasingProfile::zero(), E("1")).is_zero());
}

TEST_CASE("bar_norm examples") {
  const SpaceDescriptor l1 = on_atoms(SpaceDescriptor::lp(E("1")), "1");
  CHECK(exact(bar_norm({l1}, steps({{"1", "3"}, {"2", "1"}})), "4"));

  const SpaceDescriptor L1_unit = SpaceDescriptor::lp(E("1"), MeasureSpace::non_atomic(E("1")));
  CHECK(exact(bar_norm({L1_unit}, steps({{"2", "1"}})), "1"));

  const SpaceDescriptor linf = on_atoms(SpaceDescriptor::lp(kInfinity), "1");
  CHECK(exact(bar_norm({linf}, steps({{"1/2", "3"}})), "3/2"));
}

TEST_CASE("representation_identity_check examples") {
  const SpaceDescriptor l2 = on_atoms(SpaceDescriptor::lp(E("2")), "1");
  IdentityReport r = representation_identity_check(l2, atoms({"3", "4", "0"}));
  CHECK(exact(r.lhs, "5"));
  CHECK(exact(r.rhs, "5"));
  CHECK(r.equal);

  r = representation_identity_check(SpaceDescriptor::lp(E("2")), StepFunction::zero(MeasureSpace::non_atomic()));
  CHECK(exact(r.lhs, "0"));
  CHECK(r.equal);

  const MeasureSpace unit = MeasureSpace::non_atomic(E("1"));
  r = representation_identity_check(SpaceDescriptor::lp(E("1"), unit), stepfn({{"0", "1/2", "2"}, {"1/2", "1", "1"}}, unit));
  CHECK(exact(r.lhs, "3/2"));
  CHECK(exact(r.rhs, "3/2"));
  CHECK(r.equal);
}

TEST_CASE("transfer_partial_integral_check examples") {
  SampleGenerator gen(41);
  for (int i = 0; i < 20; ++i) {
    const PartialIntegralReport r = transfer_partial_integral_check(gen.step_profile(), Q("1/2"), 2);
    CHECK(r.passed());
    CHECK(r.checked == 2);
  }
  CHECK(transfer_partial_integral_check(steps({{"1/3", "7"}}), Q("1"), 16).passed());
  const PartialIntegralReport zero = transfer_partial_integral_check(DecreasingProfile::zero(), Q("1"), 4);
  CHECK(zero.passed());

  const PartialIntegralReport blowup = transfer_partial_integral_check(inverse_head(), Q("1"), 4);
  CHECK(blowup.skipped > 0);
}

TEST_CASE("associate_probe examples") {
  const SpaceDescriptor L2 = SpaceDescriptor::lp(E("2"));
  const DecreasingProfile chi = steps({{"1", "1"}});
  CHECK(exact(associate_probe(L2, chi, {chi, steps({{"2", "1"}})}), "1"));

  // In L¹ the associate norm is the sup norm; ε·χ[0,ε)/ε approaches f*(0).
  const SpaceDescriptor L1 = SpaceDescriptor::lp(E("1"));
  const DecreasingProfile f = steps({{"1", "3"}, {"2", "1"}});
  std::vector<DecreasingProfile> family;
  for (int k = 1; k <= 6; ++k) family.push_back(steps({{to_string(Rational(1, k)).c_str(), "1"}}));
  CHECK(exact(associate_probe(L1, f, family), "3"));
  CHECK(exact(associate_probe(L1, DecreasingProfile::zero(), family), "0"));
}

TEST_CASE("property: transfer matches direct cell averages") {
  SampleGenerator gen(42);
  ProfileShape shape;
  for (const char* beta : {"1/2", "1", "2"}) {
    for (int i = 0; i < 100; ++i) {
      const DecreasingProfile p = gen.profile(shape);
      const AtomicSequence a = atomic_transfer(p, Q(beta), std::nullopt, 24);
      for (std::size_t n = 0; n < 24; ++n) {
        const ExtendedScalar direct = cell_average(p, Q(beta), n);
        if (direct.is_exact() && a.at(n).is_exact()) {
          CHECK(a.at(n) == direct);
        } else {
          CHECK(nearly_equal(a.at(n), direct, 1e-12L));
        }
      }
    }
  }
}

TEST_CASE("property: transfer is monotone and idempotent") {
  SampleGenerator gen(43);
  ProfileShape shape;
  shape.power_tail = false;
  for (int i = 0; i < 200; ++i) {
    const auto [f, g] = gen.ordered_pair(shape);
    const Rational beta = i % 2 ? Q("1/2") : Q("1");
    const AtomicSequence tf = atomic_transfer(f, beta), tg = atomic_transfer(g, beta);
    for (std::size_t n = 0; n < 32; ++n) CHECK_FALSE(definitely_greater(tf.at(n), tg.at(n)));
    if (!tg.truncated && !tg.values.empty() && tg.tail_value.is_zero()) {
      const DecreasingProfile once = tg.to_profile();
      CHECK(atomic_transfer(once, beta).to_profile() == once);
    }
  }
}

TEST_CASE("property: l1 bar norm over atoms is the integral") {
  SampleGenerator gen(44);
  for (const char* beta : {"1/2", "1", "2"}) {
    const SpaceDescriptor l1 = on_atoms(SpaceDescriptor::lp(E("1")), beta);
    for (int i = 0; i < 100; ++i) {
      const DecreasingProfile p = gen.step_profile();
      CHECK(bar_norm({l1}, p) == p.integral());
    }
  }
}
