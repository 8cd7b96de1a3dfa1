#pragma once

#include "rikit/spaces.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rikit {

/// Cell averages T(p)(n) = β⁻¹∫_{nβ}^{(n+1)β} p. Entries past `values` equal
/// `tail_value`, unless the sequence was cut at a requested length
/// (`truncated`), which happens for power tails on infinitely many atoms.
struct AtomicSequence {
  Rational beta;
  std::vector<ExtendedScalar> values;
  ExtendedScalar tail_value{0};
  std::optional<std::uint64_t> count;
  bool truncated = false;

  ExtendedScalar at(std::size_t n) const;
  /// The cell-constant step profile; throws if an entry is +∞ or the
  /// sequence is truncated.
  DecreasingProfile to_profile() const;
};

/// Cell averages of p over [0, count·β). For power tails on infinitely many
/// atoms only the first `cells` entries are produced.
AtomicSequence atomic_transfer(const DecreasingProfile& p, const Rational& beta,
                               std::optional<std::uint64_t> count = std::nullopt, std::size_t cells = 64);

/// p·χ[0,total), the identity embedding of [0, total).
DecreasingProfile nonatomic_transfer(const DecreasingProfile& p, const ExtendedScalar& total);

/// The base norm lifted to profiles on [0, ∞).
struct RepresentationSpec {
  SpaceDescriptor base;
};

ExtendedScalar bar_norm(const RepresentationSpec& spec, const DecreasingProfile& f);

struct IdentityReport {
  ExtendedScalar lhs;
  ExtendedScalar rhs;
  bool equal = false;
};

/// ‖f‖_X against ‖f*‖ in the representation space.
IdentityReport representation_identity_check(const SpaceDescriptor& space, const StepFunction& f);

struct PartialIntegralReport {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t midpoints_checked = 0;
  std::vector<std::string> mismatches;

  bool passed() const { return mismatches.empty(); }
};

/// ∫₀^{nβ} of the transferred step profile against ∫₀^{nβ} p for n = 1..n_max,
/// plus the linear interpolation formula at the midpoints (n + 1/2)β.
PartialIntegralReport transfer_partial_integral_check(const DecreasingProfile& p, const Rational& beta,
                                                      std::size_t n_max);

/// max over the family of ∫ f·g / ‖g‖_X, a lower bound on the associate norm.
ExtendedScalar associate_probe(const SpaceDescriptor& space, const DecreasingProfile& f,
                               const std::vector<DecreasingProfile>& family, unsigned jobs = 1);

}  // namespace rikit
