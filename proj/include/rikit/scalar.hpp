#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rikit {

using Rational = mpq_class;
using Integer = mpz_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for 0·∞, ∞−∞ and friends; never silently resolved.
class IndeterminateForm : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Parses "7", "-3/4" or "inf" style literals (the latter rejected here; see
/// parse_extended). Decimal points are refused to keep inputs exact.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Floor of a non-negative rational as an integer.
Integer floor(const Rational& q);

/// Natural log of a positive rational, computed in extended precision.
long double log_rational(const Rational& q);

/// Non-negative extended real: an exact rational, a flagged floating-point
/// approximation, or the symbol +∞. Finite values may be negative so that
/// differences of integrals can be represented; −∞ does not exist.
class ExtendedScalar {
 public:
  ExtendedScalar() = default;
  ExtendedScalar(Rational value) : exact_(std::move(value)) { exact_.canonicalize(); }
  ExtendedScalar(long value) : exact_(value) {}
  ExtendedScalar(int value) : exact_(value) {}

  static ExtendedScalar infinity();
  /// A finite approximate value; +inf input maps to the symbolic infinity.
  static ExtendedScalar approx(long double value);

  bool is_infinite() const { return kind_ == Kind::infinite; }
  bool is_finite() const { return kind_ != Kind::infinite; }
  /// True for rationals and for the symbolic infinity.
  bool is_exact() const { return kind_ != Kind::approx; }
  bool approximate() const { return kind_ == Kind::approx; }
  bool is_zero() const;
  int sign() const;

  /// The exact finite value; throws DomainError otherwise.
  const Rational& rational() const;
  long double to_long_double() const;
  double to_double() const { return static_cast<double>(to_long_double()); }

  /// "num/den", "inf", or a decimal for approximate values.
  std::string to_string() const;

  friend ExtendedScalar operator+(const ExtendedScalar& a, const ExtendedScalar& b);
  friend ExtendedScalar operator-(const ExtendedScalar& a, const ExtendedScalar& b);
  friend ExtendedScalar operator*(const ExtendedScalar& a, const ExtendedScalar& b);
  friend ExtendedScalar operator/(const ExtendedScalar& a, const ExtendedScalar& b);
  ExtendedScalar& operator+=(const ExtendedScalar& b) { return *this = *this + b; }
  ExtendedScalar& operator-=(const ExtendedScalar& b) { return *this = *this - b; }
  ExtendedScalar& operator*=(const ExtendedScalar& b) { return *this = *this * b; }

  friend std::partial_ordering operator<=>(const ExtendedScalar& a, const ExtendedScalar& b);
  /// Value equality; an approximate operand compares through long double.
  friend bool operator==(const ExtendedScalar& a, const ExtendedScalar& b);

 private:
  enum class Kind { exact, approx, infinite };
  Kind kind_ = Kind::exact;
  Rational exact_{0};
  long double approx_ = 0;
};

using Scalar = ExtendedScalar;

inline const ExtendedScalar kInfinity = ExtendedScalar::infinity();

/// Parses a rational literal or "inf".
ExtendedScalar parse_extended(std::string_view text);

ExtendedScalar max(const ExtendedScalar& a, const ExtendedScalar& b);
ExtendedScalar min(const ExtendedScalar& a, const ExtendedScalar& b);

/// |a − b| ≤ rel · max(|a|, |b|), with exact equality required when both
/// operands are exact. Infinities are equal only to each other.
bool nearly_equal(const ExtendedScalar& a, const ExtendedScalar& b, long double rel = 1e-12L);

/// a > b beyond the tolerance of nearly_equal.
bool definitely_greater(const ExtendedScalar& a, const ExtendedScalar& b, long double rel = 1e-12L);

/// base^exponent for a non-negative rational base. Returns nullopt when the
/// result is irrational (or when its exact size would be unreasonable).
std::optional<Rational> exact_pow(const Rational& base, const Rational& exponent);

/// q^n for an integer n of either sign (q ≠ 0 when n < 0).
Rational int_pow(const Rational& base, long exponent);

/// base^exponent, exact when rational; 0^(negative) is +∞.
ExtendedScalar pow(const ExtendedScalar& base, const Rational& exponent);

/// coefficient · Π base_i^exponent_i with positive rational bases, or +∞.
/// Used to compare values like c·b^(1/2) against d·e^(2/3) without rounding.
struct Monomial {
  ExtendedScalar coefficient{0};
  std::vector<std::pair<Rational, Rational>> factors;
  bool infinite = false;

  static Monomial constant(ExtendedScalar c) { return Monomial{std::move(c), {}, false}; }
  static Monomial infinity() { return Monomial{ExtendedScalar{0}, {}, true}; }

  Monomial& times(const Rational& base, const Rational& exponent);
  Monomial& times(const Monomial& other);
  bool is_zero() const { return !infinite && coefficient.is_zero(); }
  bool exact() const { return infinite || coefficient.is_exact(); }

  long double log_value() const;
  /// Exact when every factor evaluates to a rational.
  ExtendedScalar value() const;
};

/// Three-way comparison; exact whenever both monomials have exact
/// coefficients. Sets *approximate when a floating fallback was needed.
int compare(const Monomial& a, const Monomial& b, bool* approximate = nullptr);

}  // namespace rikit
