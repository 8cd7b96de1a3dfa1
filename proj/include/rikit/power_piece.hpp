#pragma once

#include "rikit/interval.hpp"
#include "rikit/scalar.hpp"

namespace rikit {

/// t ↦ k·(m·t + h)^q on a half-open interval, with k ≥ 0, m > 0 and
/// m·t + h ≥ 0 on the interval. Plain power laws have m = 1, h = 0; the
/// affine base keeps the family closed under dilation and translation.
class PowerPiece {
 public:
  PowerPiece(Interval domain, ExtendedScalar coefficient, Rational exponent = Rational(0),
             Rational scale = Rational(1), Rational shift = Rational(0));

  static PowerPiece constant(Interval domain, ExtendedScalar value) {
    return PowerPiece(std::move(domain), std::move(value));
  }

  const Interval& domain() const { return domain_; }
  const ExtendedScalar& coefficient() const { return coefficient_; }
  const Rational& exponent() const { return exponent_; }
  const Rational& scale() const { return scale_; }
  const Rational& shift() const { return shift_; }

  bool is_zero() const { return coefficient_.is_zero(); }
  bool is_constant() const { return exponent_ == 0; }
  bool approximate() const { return coefficient_.approximate(); }

  Rational base_at(const Rational& t) const { return scale_ * t + shift_; }

  /// Value at t, read as the limit from the right (so a blow-up at the left
  /// end reports +∞).
  Monomial monomial_at(const Rational& t) const;
  ExtendedScalar value_at(const Rational& t) const { return monomial_at(t).value(); }
  /// Limit from the left at the right endpoint (which may be +∞).
  Monomial limit_at_right_end() const;
  /// K with piece(t) ~ K·t^q as t → ∞ (and as t → 0 when the base vanishes
  /// there).
  Monomial leading_coefficient() const;
  /// q, or 0 for constant pieces.
  Rational effective_exponent() const { return is_constant() ? Rational(0) : exponent_; }

  /// ∫ over [from, to) ⊆ domain; +∞ for divergent integrals.
  ExtendedScalar integral(const Rational& from, const ExtendedScalar& to) const;
  ExtendedScalar integral() const { return integral(domain_.left(), domain_.right()); }

  PowerPiece with_domain(Interval domain) const;
  /// s ↦ piece(factor·s).
  PowerPiece dilated(const Rational& factor) const;
  /// s ↦ piece(s + offset); the domain moves left by offset.
  PowerPiece shifted(const Rational& offset) const;
  /// piece^p for p > 0.
  PowerPiece raised(const Rational& power) const;
  /// a·piece.
  PowerPiece scaled(const ExtendedScalar& factor) const;

  /// Same function (domain ignored).
  bool same_formula(const PowerPiece& other) const;

  std::string describe() const;

  friend bool operator==(const PowerPiece&, const PowerPiece&) = default;

 private:
  Interval domain_;
  ExtendedScalar coefficient_;
  Rational exponent_;
  Rational scale_;
  Rational shift_;
};

}  // namespace rikit
