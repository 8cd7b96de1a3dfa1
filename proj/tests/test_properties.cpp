#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_util.hpp"

using namespace testing;

// Invariants that cut across several modules.

namespace {

std::vector<SpaceDescriptor> descriptors() {
  return {SpaceDescriptor::lp(E("1")),  SpaceDescriptor::lp(E("2")), SpaceDescriptor::lp(kInfinity),
          SpaceDescriptor::l1_cap_linf(), SpaceDescriptor::l1_plus_linf(),
          SpaceDescriptor::weak_marcinkiewicz(FundamentalFn::power(Rational(1)))};
}

}  // namespace

TEST_CASE("property: step profiles survive a round trip through step functions") {
  SampleGenerator gen(71);
  for (int i = 0; i < 300; ++i) {
    const DecreasingProfile p = gen.step_profile();
    CHECK(rearrangement(to_step_function(p, MeasureSpace::non_atomic())) == p);
  }
}

TEST_CASE("property: the norm depends only on the rearrangement") {
  SampleGenerator gen(72);
  for (const auto& X : descriptors()) {
    for (int i = 0; i < 100; ++i) {
      const StepFunction f = gen.step_function(MeasureSpace::non_atomic());
      // Reflect f inside [0, 8): same distribution, different placement.
      std::vector<Step> mirrored;
      for (const auto& s : f.steps()) {
        const Rational a = 8 - s.interval.right().rational(), b = 8 - s.interval.left();
        mirrored.push_back({Interval(a, ExtendedScalar(b)), s.value});
      }
      const StepFunction g(mirrored, MeasureSpace::non_atomic());
      REQUIRE(equimeasurable(f, g));
      CHECK(bar_norm({X}, rearrangement(f)) == bar_norm({X}, rearrangement(g)));
    }
  }
}

TEST_CASE("property: hl_gap rhs is the product integral of the rearrangements") {
  SampleGenerator gen(73);
  for (int i = 0; i < 300; ++i) {
    const StepFunction f = gen.step_function(MeasureSpace::non_atomic());
    const StepFunction g = gen.step_function(MeasureSpace::non_atomic());
    CHECK(hl_gap(f, g).rhs == integrate_product(rearrangement(f), rearrangement(g)));
  }
}

TEST_CASE("property: nested head and tail families give non-increasing norms") {
  SampleGenerator gen(74);
  ProfileShape shape;
  shape.blowup = true;
  shape.min_blowup_root = 3;
  shape.constant_tail = true;
  const auto ks = geometric_schedule(1u << 10);
  for (const auto& X : descriptors()) {
    for (int i = 0; i < 20; ++i) {
      const DecreasingProfile p = gen.profile(shape);
      if (!bar_norm({X}, p).is_finite()) continue;
      for (const auto& family : {ShrinkFamily::head(), ShrinkFamily::tail()}) {
        const auto samples = ac_simulate(X, p, family, ks);
        for (std::size_t j = 1; j < samples.size(); ++j) {
          CHECK_FALSE(definitely_greater(samples[j].norm, samples[j - 1].norm));
        }
      }
    }
  }
}

TEST_CASE("property: absolute continuity is stable under scaling and dilation") {
  SampleGenerator gen(75);
  ProfileShape shape;
  shape.blowup = true;
  shape.min_blowup_root = 3;
  shape.constant_tail = true;
  for (const auto& X : descriptors()) {
    for (int i = 0; i < 60; ++i) {
      const DecreasingProfile p = gen.profile(shape);
      if (!bar_norm({X}, p).is_finite()) continue;
      const bool ac = ac_two_limit_test(X, p).is_ac();
      CHECK(ac_two_limit_test(X, scale(p, ExtendedScalar(gen.grid(Q("1/64"), Q("4"))))).is_ac() == ac);
      const DecreasingProfile d = dilate(p, gen.grid(Q("1/4"), Q("4")));
      if (bar_norm({X}, d).is_finite()) CHECK(ac_two_limit_test(X, d).is_ac() == ac);
    }
  }
}

TEST_CASE("property: Lp sits between the intersection and the sum") {
  SampleGenerator gen(76);
  std::vector<DecreasingProfile> samples;
  for (int i = 0; i < 300; ++i) samples.push_back(gen.step_profile());
  for (const char* p : {"1", "3/2", "2", "3"}) {
    const EmbeddingReport r = embedding_check(SpaceDescriptor::lp(E(p)), samples);
    CHECK_FALSE(r.failed());
    CHECK_FALSE(definitely_greater(r.c1, ExtendedScalar(1)));
    CHECK_FALSE(definitely_greater(r.c2, ExtendedScalar(1)));
  }
}

TEST_CASE("property: the necessary tail condition is implied by AC") {
  SampleGenerator gen(77);
  ProfileShape shape;
  shape.constant_tail = true;
  for (const auto& X : descriptors()) {
    for (int i = 0; i < 100; ++i) {
      const DecreasingProfile p = gen.profile(shape);
      if (!bar_norm({X}, p).is_finite()) continue;
      if (ac_two_limit_test(X, p).is_ac()) CHECK(ac_necessary_tail(X, p).holds);
    }
  }
}

TEST_CASE("property: the associate probe never exceeds the Hoelder bound") {
  // For L² the associate space is L² itself, so every probe value is at most ‖f‖₂.
  SampleGenerator gen(78);
  const SpaceDescriptor L2 = SpaceDescriptor::lp(E("2"));
  std::vector<DecreasingProfile> family;
  for (int i = 0; i < 30; ++i) family.push_back(gen.step_profile());
  for (int i = 0; i < 50; ++i) {
    const DecreasingProfile f = gen.step_profile();
    const ExtendedScalar probe = associate_probe(L2, f, family);
    CHECK_FALSE(definitely_greater(probe, evaluate_norm(L2, f)));
    family.push_back(f);
    CHECK(nearly_equal(associate_probe(L2, f, family), evaluate_norm(L2, f), 1e-12L));
    family.pop_back();
  }
}
