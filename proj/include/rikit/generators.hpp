#pragma once

#include "rikit/acontinuity.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace rikit {

inline constexpr std::uint64_t kDefaultSeed = 20240521;

struct ProfileShape {
  /// Allow a head c·(t/a)^(−1/j) with j in [min_blowup_root, max_blowup_root].
  bool blowup = false;
  int min_blowup_root = 2;
  int max_blowup_root = 6;
  bool power_tail = true;
  bool constant_tail = false;
  std::size_t max_steps = 5;
  /// Bound on p(0+), or on the value at the end of a blow-up head.
  Rational max_value{8};
  /// Bound on step widths and on the blow-up head length.
  Rational max_width{2};
};

/// Seeded random objects on the 1/64 grid.
class SampleGenerator {
 public:
  explicit SampleGenerator(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  bool coin(double p = 0.5);
  /// A multiple of 1/64 in [lo, hi].
  Rational grid(const Rational& lo, const Rational& hi);

  /// Up to max_steps steps with grid breakpoints and values; on atomic spaces
  /// steps follow the atom cells.
  StepFunction step_function(const MeasureSpace& space, std::size_t max_steps = 6);
  /// Strictly decreasing positive steps ending in zero.
  DecreasingProfile step_profile(std::size_t max_steps = 5);
  DecreasingProfile profile(const ProfileShape& shape);

  /// f ≺ g by block averaging, mass rebalancing or scaling of g.
  std::pair<DecreasingProfile, DecreasingProfile> majorized_pair(const ProfileShape& shape);
  /// f ≤ g by capping or scaling g.
  std::pair<DecreasingProfile, DecreasingProfile> ordered_pair(const ProfileShape& shape);
  /// f ≤ g as step functions on the space.
  std::pair<StepFunction, StepFunction> ordered_step_pair(const MeasureSpace& space);

  ShrinkFamily custom_family();

  /// `n` of each sample kind, plus the designed extremal cases.
  AxiomSamples axiom_samples(const MeasureSpace& space, std::size_t n);

 private:
  std::mt19937_64 rng_;
};

/// Random step pairs sharing their level-set order, so that ∫fg = ∫f*g*.
std::pair<StepFunction, StepFunction> aligned_step_pair(SampleGenerator& gen, const MeasureSpace& space);

/// 1/t on (0, 1): infinite mass at 0 but finite m_φ norm for φ(t) = t.
DecreasingProfile inverse_head();
/// c·min(1, a/t).
DecreasingProfile clipped_inverse(const Rational& c, const Rational& a);

}  // namespace rikit
