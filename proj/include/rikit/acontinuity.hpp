#pragma once

#include "rikit/hlp.hpp"
#include "rikit/represent.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rikit {

/// One moving interval of a custom family. Shrinking components are
/// [anchor, anchor + step/k); escaping ones are
/// [anchor + step·k, anchor + step·k + length), with length possibly +∞.
struct ShrinkComponent {
  enum class Kind { shrinking, escaping };
  Kind kind = Kind::shrinking;
  Rational anchor{0};
  Rational step{1};
  ExtendedScalar length = kInfinity;

  friend bool operator==(const ShrinkComponent&, const ShrinkComponent&) = default;
};

/// Sets E_k with χ_{E_k} → 0 a.e., in the sense that λ(E_k ∩ [0,n]) → 0 for
/// every n.
class ShrinkFamily {
 public:
  enum class Kind { head, tail, custom };

  static ShrinkFamily head() { return ShrinkFamily(Kind::head, {}); }
  static ShrinkFamily tail() { return ShrinkFamily(Kind::tail, {}); }
  static ShrinkFamily custom(std::vector<ShrinkComponent> components);

  Kind kind() const { return kind_; }
  const std::vector<ShrinkComponent>& components() const { return components_; }
  /// E_k for k ≥ 1.
  IntervalSet member(std::uint64_t k) const;
  std::string describe() const;

  friend bool operator==(const ShrinkFamily&, const ShrinkFamily&) = default;

 private:
  ShrinkFamily(Kind kind, std::vector<ShrinkComponent> components)
      : kind_(kind), components_(std::move(components)) {}
  Kind kind_;
  std::vector<ShrinkComponent> components_;
};

enum class AcStatus { ac, not_ac };
enum class Side { head, tail };

struct AcVerdict {
  AcStatus status = AcStatus::ac;
  std::optional<Side> failing_side;
  /// The positive limit on the failing side.
  ExtendedScalar limit{0};
  ExtendedScalar head_limit{0};
  ExtendedScalar tail_limit{0};

  bool is_ac() const { return status == AcStatus::ac; }
  std::string describe() const;
};

/// lim ‖p·χ[0,1/k)‖ and lim ‖p·χ[k,∞)‖ in the representation space, both
/// decided symbolically.
AcVerdict ac_two_limit_test(const SpaceDescriptor& space, const DecreasingProfile& p);

struct AcSample {
  std::uint64_t k = 0;
  ExtendedScalar norm;
};

/// ‖(p·χ_{E_k})*‖ for each requested k.
std::vector<AcSample> ac_simulate(const SpaceDescriptor& space, const DecreasingProfile& p, const ShrinkFamily& family,
                                  const std::vector<std::uint64_t>& ks, unsigned jobs = 1);

/// 1, 2, 4, ... up to k_max.
std::vector<std::uint64_t> geometric_schedule(std::uint64_t k_max);
/// 1, 2, ..., k_max.
std::vector<std::uint64_t> linear_schedule(std::uint64_t k_max);

struct TailCheck {
  bool holds = true;
  std::string note;
};

/// Necessary condition lim p(t) = 0 on infinite-measure spaces.
TailCheck ac_necessary_tail(const SpaceDescriptor& space, const DecreasingProfile& p);

struct OrderCheck {
  std::string relation;
  bool skipped = false;
  std::string reason;
  bool relation_holds = false;
  bool violation = false;
};

struct OrderCheckReport {
  AcVerdict f_verdict;
  AcVerdict g_verdict;
  OrderCheck pointwise;
  OrderCheck hlp;

  bool any_violation() const { return pointwise.violation || hlp.violation; }
};

/// (f ≤ g, g AC ⇒ f AC) and (f ≺ g, g AC ⇒ f AC). The second is skipped when
/// the supplied probe falsified the HLP principle for this space.
OrderCheckReport ac_order_checks(const SpaceDescriptor& space, const DecreasingProfile& f, const DecreasingProfile& g,
                                 const HlpProbeReport* probe = nullptr);

struct MarcinkiewiczClass {
  bool member = false;
  bool ac = false;
  ExtendedScalar limit_at_zero{0};
  ExtendedScalar limit_at_infinity{0};
};

/// Membership and absolute continuity in m_φ from the limits of φ·p.
MarcinkiewiczClass marcinkiewicz_ac_classify(const FundamentalFn& phi, const DecreasingProfile& p);

}  // namespace rikit
