#include "rikit/power_piece.hpp"

#include <cmath>

namespace rikit {

namespace {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

// u(y)^s − u(x)^s for 0 < u(x) < u(y), accurate when the two are close.
ExtendedScalar power_difference(const Rational& ux, const ExtendedScalar& uy, const Rational& s) {
  const ExtendedScalar hi = pow(uy, s);
  const ExtendedScalar lo = pow(ExtendedScalar(ux), s);
  if (hi.is_exact() && lo.is_exact()) return hi - lo;
  const long double ls = ExtendedScalar(s).to_long_double();
  const long double ratio_log = log_rational(uy.rational()) - log_rational(ux);
  return ExtendedScalar::approx(lo.to_long_double() * std::expm1(ls * ratio_log));
}

}  // namespace

PowerPiece::PowerPiece(Interval domain, ExtendedScalar coefficient, Rational exponent, Rational scale,
                       Rational shift)
    : domain_(std::move(domain)),
      coefficient_(std::move(coefficient)),
      exponent_(std::move(exponent)),
      scale_(std::move(scale)),
      shift_(std::move(shift)) {
  exponent_.canonicalize();
  scale_.canonicalize();
  shift_.canonicalize();
  if (!coefficient_.is_finite()) throw DomainError("power piece coefficient must be finite");
  if (coefficient_.sign() < 0) throw DomainError("power piece coefficient must be non-negative");
  if (scale_ <= 0) throw DomainError("power piece scale must be positive");
  if (coefficient_.is_zero() || exponent_ == 0) {
    exponent_ = 0;
    scale_ = 1;
    shift_ = 0;
    if (coefficient_.is_zero()) coefficient_ = ExtendedScalar(0);
    return;
  }
  if (base_at(domain_.left()) < 0) {
    throw DomainError("power piece base m*t+h is negative at t=" + to_string(domain_.left()));
  }
  // k(mt+h)^q = k m^q (t + h/m)^q, rational when q is an integer.
  if (is_integer(exponent_) && scale_ != 1 && coefficient_.is_exact()) {
    coefficient_ = coefficient_ * ExtendedScalar(int_pow(scale_, exponent_.get_num().get_si()));
    shift_ = shift_ / scale_;
    scale_ = 1;
  }
}

Monomial PowerPiece::monomial_at(const Rational& t) const {
  Monomial m = Monomial::constant(coefficient_);
  if (coefficient_.is_zero() || exponent_ == 0) return m;
  m.times(base_at(t), exponent_);
  return m;
}

Monomial PowerPiece::limit_at_right_end() const {
  if (domain_.bounded()) return monomial_at(domain_.right_rational());
  if (coefficient_.is_zero() || exponent_ == 0) return Monomial::constant(coefficient_);
  return exponent_ < 0 ? Monomial::constant(ExtendedScalar(0)) : Monomial::infinity();
}

Monomial PowerPiece::leading_coefficient() const {
  Monomial m = Monomial::constant(coefficient_);
  if (!is_constant()) m.times(scale_, exponent_);
  return m;
}

ExtendedScalar PowerPiece::integral(const Rational& from, const ExtendedScalar& to) const {
  if (!(ExtendedScalar(from) < to)) return ExtendedScalar(0);
  if (coefficient_.is_zero()) return ExtendedScalar(0);
  if (exponent_ == 0) return coefficient_ * (to - ExtendedScalar(from));

  const Rational ux = base_at(from);
  const ExtendedScalar uy = to.is_infinite() ? kInfinity : ExtendedScalar(base_at(to.rational()));
  const Rational s = exponent_ + 1;
  const ExtendedScalar k_over_m = coefficient_ / ExtendedScalar(scale_);

  if (s == 0) {
    if (ux == 0 || uy.is_infinite()) return kInfinity;
    const long double ln_ratio = log_rational(uy.rational()) - log_rational(ux);
    return ExtendedScalar::approx(k_over_m.to_long_double() * ln_ratio);
  }
  if (uy.is_infinite() && s > 0) return kInfinity;
  if (ux == 0 && s < 0) return kInfinity;

  const ExtendedScalar inv_s = ExtendedScalar(1 / abs(s));
  if (uy.is_infinite()) {
    // s < 0: the antiderivative vanishes at infinity.
    return k_over_m * inv_s * pow(ExtendedScalar(ux), s);
  }
  if (ux == 0) return k_over_m * inv_s * pow(uy, s);
  ExtendedScalar diff = power_difference(ux, uy, s);
  if (s < 0) diff = ExtendedScalar(0) - diff;
  return k_over_m * inv_s * diff;
}

PowerPiece PowerPiece::with_domain(Interval domain) const {
  return PowerPiece(std::move(domain), coefficient_, exponent_, scale_, shift_);
}

PowerPiece PowerPiece::dilated(const Rational& factor) const {
  if (factor <= 0) throw DomainError("dilation factor must be positive");
  Rational left = domain_.left() / factor;
  ExtendedScalar right = domain_.right() / ExtendedScalar(factor);
  return PowerPiece(Interval(std::move(left), std::move(right)), coefficient_, exponent_,
                    scale_ * factor, shift_);
}

PowerPiece PowerPiece::shifted(const Rational& offset) const {
  Rational left = domain_.left() - offset;
  ExtendedScalar right =
      domain_.right().is_infinite() ? kInfinity : ExtendedScalar(domain_.right_rational() - offset);
  return PowerPiece(Interval(std::move(left), std::move(right)), coefficient_, exponent_, scale_,
                    shift_ + scale_ * offset);
}

PowerPiece PowerPiece::raised(const Rational& power) const {
  if (power <= 0) throw DomainError("raising a piece needs a positive power");
  return PowerPiece(domain_, pow(coefficient_, power), exponent_ * power, scale_, shift_);
}

PowerPiece PowerPiece::scaled(const ExtendedScalar& factor) const {
  return PowerPiece(domain_, factor * coefficient_, exponent_, scale_, shift_);
}

bool PowerPiece::same_formula(const PowerPiece& other) const {
  if (is_constant() && other.is_constant()) return coefficient_ == other.coefficient_;
  return coefficient_ == other.coefficient_ && exponent_ == other.exponent_ &&
         scale_ == other.scale_ && shift_ == other.shift_ && coefficient_.is_exact() &&
         other.coefficient_.is_exact();
}

std::string PowerPiece::describe() const {
  std::string out = "[" + to_string(domain_.left()) + ", " + domain_.right().to_string() + "): ";
  out += coefficient_.to_string();
  if (exponent_ != 0) {
    out += "*(";
    if (scale_ != 1) out += to_string(scale_) + "*";
    out += "t";
    if (shift_ != 0) out += (shift_ > 0 ? "+" : "") + to_string(shift_);
    out += ")^" + to_string(exponent_);
  }
  return out;
}

}  // namespace rikit
