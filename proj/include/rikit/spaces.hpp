#pragma once

#include "rikit/profile.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rikit {

/// Non-decreasing, positive φ on (0, ∞) given by power pieces tiling [0, ∞).
/// φ(0) = 0 by convention; the pieces only describe t > 0.
class FundamentalFn {
 public:
  explicit FundamentalFn(std::vector<PowerPiece> pieces);
  /// t ↦ t^q for q ≥ 0.
  static FundamentalFn power(const Rational& q);

  const std::vector<PowerPiece>& pieces() const { return pieces_; }
  Monomial value_at(const Rational& t) const;
  /// φ(t−) for t > 0.
  Monomial left_limit(const Rational& t) const;
  Monomial limit_at_zero() const { return pieces_.front().monomial_at(Rational(0)); }
  Monomial limit_at_infinity() const { return pieces_.back().limit_at_right_end(); }

  /// φ(t)/t non-increasing; reported, never enforced.
  bool quasiconcave() const { return warning_.empty(); }
  const std::string& warning() const { return warning_; }

  std::string describe() const;

  friend bool operator==(const FundamentalFn& a, const FundamentalFn& b) { return a.pieces_ == b.pieces_; }

 private:
  std::vector<PowerPiece> pieces_;
  std::string warning_;
};

/// 1/φ as a decreasing profile.
DecreasingProfile reciprocal(const FundamentalFn& phi);

enum class SpaceKind { lp, l1_plus_linf, l1_cap_linf, weak_marcinkiewicz };

class SpaceDescriptor {
 public:
  static SpaceDescriptor lp(ExtendedScalar p, MeasureSpace space = MeasureSpace::non_atomic());
  static SpaceDescriptor l1_plus_linf(MeasureSpace space = MeasureSpace::non_atomic());
  static SpaceDescriptor l1_cap_linf(MeasureSpace space = MeasureSpace::non_atomic());
  static SpaceDescriptor weak_marcinkiewicz(FundamentalFn phi, MeasureSpace space = MeasureSpace::non_atomic());

  SpaceKind kind() const { return kind_; }
  /// The Lᵖ exponent; throws for other kinds.
  const ExtendedScalar& exponent() const;
  const FundamentalFn& phi() const;
  const MeasureSpace& space() const { return space_; }
  SpaceDescriptor with_space(MeasureSpace space) const;

  std::string describe() const;

  friend bool operator==(const SpaceDescriptor&, const SpaceDescriptor&) = default;

 private:
  SpaceDescriptor(SpaceKind kind, MeasureSpace space) : kind_(kind), space_(std::move(space)) {}
  SpaceKind kind_;
  MeasureSpace space_;
  ExtendedScalar p_{1};
  std::optional<FundamentalFn> phi_;
};

/// ‖p‖_X for a profile p = f*. Finite-measure spaces truncate to [0, μ(R)).
ExtendedScalar evaluate_norm(const SpaceDescriptor& space, const DecreasingProfile& p);

/// ‖χ[0,t)‖_X; for m_φ this is φ(t−).
ExtendedScalar fundamental_function(const SpaceDescriptor& space, const Rational& t);

/// sup over (0,∞) of φ·p, with limit semantics at 0 and ∞.
ExtendedScalar weighted_sup(const FundamentalFn& phi, const DecreasingProfile& p);
/// lim φ(t)p(t) as t → 0+ and as t → ∞.
Monomial weighted_limit_at_zero(const FundamentalFn& phi, const DecreasingProfile& p);
Monomial weighted_limit_at_infinity(const FundamentalFn& phi, const DecreasingProfile& p);

struct DilationProbe {
  ExtendedScalar bound{0};
  std::size_t used = 0;
  std::size_t skipped = 0;
};

/// Largest observed ‖D_t p‖/‖p‖, a lower bound on the norm of D_t.
DilationProbe dilation_bound_probe(const SpaceDescriptor& space, const Rational& t,
                                   const std::vector<DecreasingProfile>& samples);

struct AxiomSamples {
  /// Pairs with f ≤ g pointwise.
  std::vector<std::pair<StepFunction, StepFunction>> ordered_pairs;
  std::vector<std::pair<StepFunction, StepFunction>> sum_pairs;
  std::vector<DecreasingProfile> profiles;
  /// Measures a of the probe sets E = [0, a).
  std::vector<Rational> probe_measures;
};

struct AxiomVerdict {
  std::string name;
  bool pass = true;
  std::string note;
};

struct P5Estimate {
  Rational measure;
  ExtendedScalar constant{0};
  bool unbounded = false;
  std::optional<DecreasingProfile> witness;
};

struct AxiomReport {
  std::vector<AxiomVerdict> verdicts;
  /// max ‖f+g‖/(‖f‖+‖g‖).
  ExtendedScalar concavity{0};
  std::vector<P5Estimate> p5;

  const AxiomVerdict& verdict(const std::string& name) const;
  bool all_pass() const;
};

AxiomReport axiom_suite(const SpaceDescriptor& space, const AxiomSamples& samples);

}  // namespace rikit
