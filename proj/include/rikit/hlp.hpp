#pragma once

#include "rikit/spaces.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rikit {

enum class Relation { majorized, not_majorized };

/// f ≺ g verdict. A not_majorized verdict carries t with ∫₀ᵗ f > ∫₀ᵗ g.
struct HlpVerdict {
  Relation relation = Relation::majorized;
  std::optional<Rational> witness;
  /// Set when the decision leaned on floating-point values.
  bool approximate = false;

  bool majorized() const { return relation == Relation::majorized; }
};

struct HlpOptions {
  /// Treat a profile with ∫₀ᵗ = ∞ as majorizing everything instead of
  /// rejecting it.
  bool nonintegrable_majorizes = false;
};

/// Decides ∫₀ᵗ f ≤ ∫₀ᵗ g for all t > 0. Throws DomainError for heads that are
/// not integrable unless the option says otherwise.
HlpVerdict hlp_compare(const DecreasingProfile& f, const DecreasingProfile& g, HlpOptions options = {});

/// ∫₀ᵗ g − ∫₀ᵗ f.
ExtendedScalar primitive_gap(const DecreasingProfile& f, const DecreasingProfile& g, const Rational& t);

struct HlpCounterexample {
  std::size_t index = 0;
  DecreasingProfile f;
  DecreasingProfile g;
  ExtendedScalar f_norm;
  ExtendedScalar g_norm;
};

/// A probe, never a certificate: scans pairs with f ≺ g for ‖f‖ > ‖g‖.
struct HlpProbeReport {
  std::size_t scanned = 0;
  std::optional<HlpCounterexample> counterexample;

  bool violated() const { return counterexample.has_value(); }
  std::string describe() const;
};

HlpProbeReport hlp_principle_probe(const SpaceDescriptor& space,
                                   const std::vector<std::pair<DecreasingProfile, DecreasingProfile>>& pairs,
                                   unsigned jobs = 1);

struct EmbeddingReport {
  /// max ‖p‖_X / ‖p‖_{L¹∩L∞}.
  ExtendedScalar c1{0};
  /// max ‖p‖_{L¹+L∞} / ‖p‖_X.
  ExtendedScalar c2{0};
  std::optional<std::size_t> witness;
  /// "lower" when ‖p‖_X = ∞ with p in L¹∩L∞, "upper" when p ∈ X but not L¹+L∞.
  std::string failing_side;

  bool failed() const { return witness.has_value(); }
};

EmbeddingReport embedding_check(const SpaceDescriptor& space, const std::vector<DecreasingProfile>& samples);

}  // namespace rikit
