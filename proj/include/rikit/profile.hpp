#pragma once

#include "rikit/power_piece.hpp"
#include "rikit/step_function.hpp"

#include <vector>

namespace rikit {

/// Raised by validate_profile; carries the first offending breakpoint.
class ProfileError : public Error {
 public:
  ProfileError(const std::string& what, Rational at)
      : Error(what + " at t=" + to_string(at)), at_(std::move(at)) {}
  const Rational& breakpoint() const { return at_; }

 private:
  Rational at_;
};

enum class TailKind { zero, constant, power };

/// A non-increasing, right-continuous function on [0, ∞) made of power pieces
/// on consecutive intervals. The last piece is unbounded; a zero tail is
/// appended when the input stops at a finite point.
class DecreasingProfile {
 public:
  explicit DecreasingProfile(std::vector<PowerPiece> pieces);

  static DecreasingProfile zero();
  /// Steps given as (right end, value) from t = 0 onwards.
  static DecreasingProfile steps(const std::vector<std::pair<ExtendedScalar, Rational>>& steps);

  const std::vector<PowerPiece>& pieces() const { return pieces_; }
  const PowerPiece& tail() const { return pieces_.back(); }
  /// Where the unbounded last piece starts.
  const Rational& tail_start() const { return pieces_.back().domain().left(); }
  TailKind tail_kind() const;

  bool is_zero() const { return pieces_.size() == 1 && pieces_.front().is_zero(); }
  bool is_step() const;
  bool approximate() const;

  /// p(0+), possibly +∞.
  Monomial head_limit() const { return pieces_.front().monomial_at(Rational(0)); }
  /// p(t) (right value).
  Monomial value_at(const Rational& t) const;
  /// p(t−) for t > 0.
  Monomial left_limit(const Rational& t) const;
  std::size_t piece_index(const Rational& t) const;
  /// Interior breakpoints (0 excluded).
  std::vector<Rational> breakpoints() const;

  ExtendedScalar integral(const Rational& from, const ExtendedScalar& to) const;
  ExtendedScalar integral() const { return integral(Rational(0), kInfinity); }

  std::string describe() const;

  friend bool operator==(const DecreasingProfile&, const DecreasingProfile&) = default;

 private:
  std::vector<PowerPiece> pieces_;
};

/// Checks monotonicity and right-continuity and returns the canonical profile.
DecreasingProfile validate_profile(std::vector<PowerPiece> pieces);

ExtendedScalar integrate(const DecreasingProfile& p, const Interval& domain);
ExtendedScalar integrate(const StepFunction& f, const Interval& domain);

/// p·χ[0,a).
DecreasingProfile truncate(const DecreasingProfile& p, const ExtendedScalar& a);
/// s ↦ p(t·s).
DecreasingProfile dilate(const DecreasingProfile& p, const Rational& t);
/// s ↦ p(s + a).
DecreasingProfile shift_left(const DecreasingProfile& p, const Rational& a);
DecreasingProfile scale(const DecreasingProfile& p, const ExtendedScalar& c);
/// p^r for r > 0.
DecreasingProfile raise(const DecreasingProfile& p, const Rational& r);
/// min(p, level). The crossing points must be rational.
DecreasingProfile cap(const DecreasingProfile& p, const Rational& level);
/// The step profile as a function on the given space.
StepFunction to_step_function(const DecreasingProfile& p, const MeasureSpace& space);

/// Pair of pieces active on a common cell.
struct CellPair {
  Interval domain;
  PowerPiece first;
  PowerPiece second;
};

/// Common refinement of two piece lists that each tile [0, ∞).
std::vector<CellPair> merge_cells(const std::vector<PowerPiece>& a, const std::vector<PowerPiece>& b);

/// Stationary point of (m1 t + h1)^a (m2 t + h2)^b, if a + b ≠ 0.
std::optional<Rational> stationary_point(const PowerPiece& x, const Rational& a, const PowerPiece& y,
                                         const Rational& b);

/// f ≤ g everywhere. Exact unless a coefficient is approximate.
bool pointwise_le(const DecreasingProfile& f, const DecreasingProfile& g, bool* approximate = nullptr);

/// ∫₀^∞ f·g. On every cell at least one factor must be constant or both must
/// share the same base.
ExtendedScalar integrate_product(const DecreasingProfile& f, const DecreasingProfile& g);

}  // namespace rikit
