#pragma once

#include "rikit/scalar.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace rikit {

/// The two resonant measure spaces: non-atomic with total mass in (0, ∞],
/// or completely atomic with equal atom mass β. Atoms are identified with
/// the cells [nβ, (n+1)β) of the half line.
class MeasureSpace {
 public:
  static MeasureSpace non_atomic(ExtendedScalar total = kInfinity);
  static MeasureSpace atomic(Rational beta, std::optional<std::uint64_t> count = std::nullopt);

  bool is_atomic() const { return atomic_; }
  /// Atom mass; throws for non-atomic spaces.
  const Rational& beta() const;
  std::optional<std::uint64_t> atom_count() const { return count_; }
  /// μ(R).
  ExtendedScalar total() const;
  bool finite() const { return total().is_finite(); }

  std::string describe() const;

  friend bool operator==(const MeasureSpace&, const MeasureSpace&) = default;

 private:
  MeasureSpace() = default;
  bool atomic_ = false;
  ExtendedScalar total_ = kInfinity;
  Rational beta_{1};
  std::optional<std::uint64_t> count_;
};

}  // namespace rikit
