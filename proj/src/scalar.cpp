#include "rikit/scalar.hpp"

#include <cctype>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numeric>
#include <sstream>

namespace rikit {

namespace {

// Results whose exact representation would exceed this many bits are
// evaluated in floating point instead.
constexpr long kMaxExactBits = 1L << 16;

long bit_size(const Rational& q) {
  return static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2) +
                           mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

long double log_integer(const Integer& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(static_cast<long double>(mant)) +
         static_cast<long double>(exp) * std::log(2.0L);
}

std::optional<Integer> exact_root(const Integer& z, unsigned long n) {
  Integer root;
  if (mpz_root(root.get_mpz_t(), z.get_mpz_t(), n) == 0) return std::nullopt;
  return root;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw DomainError("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-')) {
      throw DomainError("malformed rational literal '" + std::string(text) + "'");
    }
  }
  Rational q;
  if (q.set_str(s, 10) != 0) throw DomainError("malformed rational literal '" + std::string(text) + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

long double log_rational(const Rational& q) {
  if (q <= 0) throw DomainError("log of non-positive rational");
  return log_integer(q.get_num()) - log_integer(q.get_den());
}

ExtendedScalar ExtendedScalar::infinity() {
  ExtendedScalar s;
  s.kind_ = Kind::infinite;
  return s;
}

ExtendedScalar ExtendedScalar::approx(long double value) {
  if (std::isnan(value)) throw IndeterminateForm("NaN produced in approximate evaluation");
  if (std::isinf(value)) {
    if (value < 0) throw DomainError("negative infinity is not representable");
    return infinity();
  }
  ExtendedScalar s;
  s.kind_ = Kind::approx;
  s.approx_ = value;
  return s;
}

bool ExtendedScalar::is_zero() const {
  switch (kind_) {
    case Kind::exact: return exact_ == 0;
    case Kind::approx: return approx_ == 0;
    case Kind::infinite: return false;
  }
  return false;
}

int ExtendedScalar::sign() const {
  switch (kind_) {
    case Kind::exact: return sgn(exact_);
    case Kind::approx: return approx_ > 0 ? 1 : (approx_ < 0 ? -1 : 0);
    case Kind::infinite: return 1;
  }
  return 0;
}

const Rational& ExtendedScalar::rational() const {
  if (kind_ != Kind::exact) throw DomainError("value " + to_string() + " is not an exact rational");
  return exact_;
}

long double ExtendedScalar::to_long_double() const {
  switch (kind_) {
    case Kind::exact: {
      if (exact_ == 0) return 0.0L;
      const long double mag = std::exp(log_rational(abs(exact_)));
      return exact_ < 0 ? -mag : mag;
    }
    case Kind::approx: return approx_;
    case Kind::infinite: return std::numeric_limits<long double>::infinity();
  }
  return 0;
}

std::string ExtendedScalar::to_string() const {
  switch (kind_) {
    case Kind::exact: return rikit::to_string(exact_);
    case Kind::infinite: return "inf";
    case Kind::approx: {
      std::ostringstream os;
      os << std::setprecision(17) << static_cast<double>(approx_);
      return os.str();
    }
  }
  return {};
}

ExtendedScalar operator+(const ExtendedScalar& a, const ExtendedScalar& b) {
  using K = ExtendedScalar::Kind;
  if (a.kind_ == K::infinite || b.kind_ == K::infinite) return ExtendedScalar::infinity();
  if (a.kind_ == K::exact && b.kind_ == K::exact) return ExtendedScalar(a.exact_ + b.exact_);
  return ExtendedScalar::approx(a.to_long_double() + b.to_long_double());
}

ExtendedScalar operator-(const ExtendedScalar& a, const ExtendedScalar& b) {
  using K = ExtendedScalar::Kind;
  if (b.kind_ == K::infinite) {
    throw IndeterminateForm(a.is_infinite() ? "inf - inf" : "finite - inf is not representable");
  }
  if (a.kind_ == K::infinite) return a;
  if (a.kind_ == K::exact && b.kind_ == K::exact) return ExtendedScalar(a.exact_ - b.exact_);
  return ExtendedScalar::approx(a.to_long_double() - b.to_long_double());
}

ExtendedScalar operator*(const ExtendedScalar& a, const ExtendedScalar& b) {
  using K = ExtendedScalar::Kind;
  if (a.kind_ == K::infinite || b.kind_ == K::infinite) {
    const ExtendedScalar& other = a.kind_ == K::infinite ? b : a;
    if (other.is_zero()) throw IndeterminateForm("0 * inf");
    if (other.sign() < 0) throw DomainError("negative * inf is not representable");
    return ExtendedScalar::infinity();
  }
  if (a.kind_ == K::exact && b.kind_ == K::exact) return ExtendedScalar(a.exact_ * b.exact_);
  return ExtendedScalar::approx(a.to_long_double() * b.to_long_double());
}

ExtendedScalar operator/(const ExtendedScalar& a, const ExtendedScalar& b) {
  using K = ExtendedScalar::Kind;
  if (b.is_zero()) throw IndeterminateForm("division by zero");
  if (b.kind_ == K::infinite) {
    if (a.kind_ == K::infinite) throw IndeterminateForm("inf / inf");
    return ExtendedScalar(0);
  }
  if (a.kind_ == K::infinite) {
    if (b.sign() < 0) throw DomainError("inf / negative is not representable");
    return a;
  }
  if (a.kind_ == K::exact && b.kind_ == K::exact) return ExtendedScalar(a.exact_ / b.exact_);
  return ExtendedScalar::approx(a.to_long_double() / b.to_long_double());
}

std::partial_ordering operator<=>(const ExtendedScalar& a, const ExtendedScalar& b) {
  using K = ExtendedScalar::Kind;
  if (a.kind_ == K::infinite || b.kind_ == K::infinite) {
    if (a.kind_ == b.kind_) return std::partial_ordering::equivalent;
    return a.kind_ == K::infinite ? std::partial_ordering::greater : std::partial_ordering::less;
  }
  if (a.kind_ == K::exact && b.kind_ == K::exact) {
    const int c = cmp(a.exact_, b.exact_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  return a.to_long_double() <=> b.to_long_double();
}

bool operator==(const ExtendedScalar& a, const ExtendedScalar& b) {
  return (a <=> b) == std::partial_ordering::equivalent;
}

ExtendedScalar parse_extended(std::string_view text) {
  std::string s(text);
  if (s == "inf" || s == "+inf" || s == "infinity") return ExtendedScalar::infinity();
  return ExtendedScalar(parse_rational(text));
}

ExtendedScalar max(const ExtendedScalar& a, const ExtendedScalar& b) { return a < b ? b : a; }
ExtendedScalar min(const ExtendedScalar& a, const ExtendedScalar& b) { return b < a ? b : a; }

bool nearly_equal(const ExtendedScalar& a, const ExtendedScalar& b, long double rel) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
  const long double x = a.to_long_double();
  const long double y = b.to_long_double();
  const long double scale = std::max(std::fabs(x), std::fabs(y));
  return std::fabs(x - y) <= rel * scale;
}

bool definitely_greater(const ExtendedScalar& a, const ExtendedScalar& b, long double rel) {
  return a > b && !nearly_equal(a, b, rel);
}

Rational int_pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational out(num, den);
  out.canonicalize();
  if (exponent < 0) {
    if (out == 0) throw IndeterminateForm("0 raised to a negative power");
    out = 1 / out;
  }
  return out;
}

std::optional<Rational> exact_pow(const Rational& base, const Rational& exponent) {
  if (base < 0) throw DomainError("negative base in power");
  if (exponent == 0) return Rational(1);
  if (base == 0) {
    if (exponent < 0) return std::nullopt;
    return Rational(0);
  }
  if (base == 1) return Rational(1);
  if (!exponent.get_den().fits_ulong_p() || !exponent.get_num().fits_slong_p()) return std::nullopt;
  const unsigned long n = exponent.get_den().get_ui();
  const long m = exponent.get_num().get_si();
  const long magnitude = m < 0 ? -m : m;
  if (bit_size(base) / static_cast<long>(n) * magnitude > kMaxExactBits) return std::nullopt;
  auto num_root = exact_root(base.get_num(), n);
  if (!num_root) return std::nullopt;
  auto den_root = exact_root(base.get_den(), n);
  if (!den_root) return std::nullopt;
  Rational root(*num_root, *den_root);
  root.canonicalize();
  return int_pow(root, m);
}

ExtendedScalar pow(const ExtendedScalar& base, const Rational& exponent) {
  if (base.sign() < 0) throw DomainError("negative base in power");
  if (exponent == 0) return ExtendedScalar(1);
  if (base.is_infinite()) return exponent > 0 ? kInfinity : ExtendedScalar(0);
  if (base.is_zero()) return exponent > 0 ? ExtendedScalar(0) : kInfinity;
  if (base.is_exact()) {
    if (auto q = exact_pow(base.rational(), exponent)) return ExtendedScalar(*q);
    return ExtendedScalar::approx(std::exp(log_rational(base.rational()) *
                                           ExtendedScalar(exponent).to_long_double()));
  }
  return ExtendedScalar::approx(
      std::pow(base.to_long_double(), ExtendedScalar(exponent).to_long_double()));
}

Monomial& Monomial::times(const Rational& base, const Rational& exponent) {
  if (infinite) return *this;
  if (exponent == 0 || base == 1) return *this;
  if (base < 0) throw DomainError("negative base in monomial");
  if (base == 0) {
    if (exponent > 0) {
      coefficient = ExtendedScalar(0);
      factors.clear();
    } else if (!coefficient.is_zero()) {
      *this = Monomial::infinity();
    } else {
      throw IndeterminateForm("0 * inf in monomial");
    }
    return *this;
  }
  if (coefficient.is_zero()) return *this;
  // Integer exponents fold into the coefficient.
  if (exponent.get_den() == 1 && exponent.get_num().fits_slong_p() &&
      std::labs(exponent.get_num().get_si()) * bit_size(base) < kMaxExactBits) {
    coefficient = coefficient * ExtendedScalar(int_pow(base, exponent.get_num().get_si()));
    return *this;
  }
  factors.emplace_back(base, exponent);
  return *this;
}

Monomial& Monomial::times(const Monomial& other) {
  if (infinite || other.infinite) {
    if (is_zero() || other.is_zero()) throw IndeterminateForm("0 * inf in monomial");
    return *this = Monomial::infinity();
  }
  coefficient = coefficient * other.coefficient;
  if (coefficient.is_zero()) {
    factors.clear();
    return *this;
  }
  for (const auto& [b, e] : other.factors) times(b, e);
  return *this;
}

long double Monomial::log_value() const {
  if (infinite) return std::numeric_limits<long double>::infinity();
  if (coefficient.is_zero()) return -std::numeric_limits<long double>::infinity();
  long double out = coefficient.is_exact() ? log_rational(coefficient.rational())
                                           : std::log(coefficient.to_long_double());
  for (const auto& [b, e] : factors) out += log_rational(b) * ExtendedScalar(e).to_long_double();
  return out;
}

ExtendedScalar Monomial::value() const {
  if (infinite) return kInfinity;
  if (coefficient.is_zero()) return ExtendedScalar(0);
  ExtendedScalar out = coefficient;
  bool all_exact = coefficient.is_exact();
  for (const auto& [b, e] : factors) {
    auto q = exact_pow(b, e);
    if (!q) {
      all_exact = false;
      break;
    }
    out = out * ExtendedScalar(*q);
  }
  if (all_exact) return out;
  return ExtendedScalar::approx(std::exp(log_value()));
}

int compare(const Monomial& a, const Monomial& b, bool* approximate) {
  if (a.infinite || b.infinite) return a.infinite == b.infinite ? 0 : (a.infinite ? 1 : -1);
  const bool za = a.coefficient.is_zero();
  const bool zb = b.coefficient.is_zero();
  if (za || zb) return za == zb ? 0 : (za ? -1 : 1);
  if (a.coefficient.is_exact() && b.coefficient.is_exact()) {
    // Raise both sides to the least common denominator of the exponents.
    Integer lcm = 1;
    for (const auto* m : {&a, &b}) {
      for (const auto& [base, e] : m->factors) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.get_den_mpz_t());
      }
    }
    bool feasible = lcm.fits_slong_p();
    long budget = 0;
    const long L = feasible ? lcm.get_si() : 0;
    auto raise = [&](const Monomial& m) -> Rational {
      Rational out = int_pow(m.coefficient.rational(), L);
      for (const auto& [base, e] : m.factors) {
        const Rational scaled = e * L;
        out *= int_pow(base, scaled.get_num().get_si());
      }
      return out;
    };
    if (feasible) {
      budget += L * bit_size(a.coefficient.rational()) + L * bit_size(b.coefficient.rational());
      for (const auto* m : {&a, &b}) {
        for (const auto& [base, e] : m->factors) {
          const Rational scaled = e * L;
          if (!scaled.get_num().fits_slong_p()) {
            feasible = false;
            break;
          }
          budget += std::labs(scaled.get_num().get_si()) * bit_size(base);
        }
      }
    }
    if (feasible && budget < kMaxExactBits * 8) {
      const int c = cmp(raise(a), raise(b));
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
  }
  if (approximate) *approximate = true;
  const long double la = a.log_value();
  const long double lb = b.log_value();
  if (std::fabs(la - lb) <= 1e-15L * std::max(1.0L, std::fabs(la))) return 0;
  return la < lb ? -1 : 1;
}

}  // namespace rikit
