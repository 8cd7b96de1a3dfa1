#include "rikit/profile.hpp"

#include <algorithm>

namespace rikit {

namespace {

// Function-local so that callers running during static initialization are safe.
const Rational& zero_q() {
  static const Rational z(0);
  return z;
}

// Sign of f − g in the limit, given the asymptotic forms, where a smaller
// exponent wins at 0 and a larger one wins at ∞.
int compare_asymptotic(const PowerPiece& f, const PowerPiece& g, bool at_zero, bool* approx) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() == g.is_zero() ? 0 : (f.is_zero() ? -1 : 1);
  if (f.exponent() != g.exponent()) {
    const bool f_bigger = at_zero ? f.exponent() < g.exponent() : f.exponent() > g.exponent();
    return f_bigger ? 1 : -1;
  }
  return compare(f.leading_coefficient(), g.leading_coefficient(), approx);
}

bool blows_up_at(const PowerPiece& p, const Rational& t) {
  return !p.is_zero() && p.exponent() < 0 && p.base_at(t) == 0;
}

}  // namespace

DecreasingProfile::DecreasingProfile(std::vector<PowerPiece> pieces) {
  if (pieces.empty()) pieces.push_back(PowerPiece::constant(Interval(zero_q(), kInfinity), ExtendedScalar(0)));
  if (pieces.front().domain().left() != 0) {
    throw ProfileError("profile must start at 0", pieces.front().domain().left());
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const PowerPiece& piece = pieces[i];
    const Rational& left = piece.domain().left();
    if (piece.exponent() > 0) throw ProfileError("piece increases", left);
    if (blows_up_at(piece, left) && left != 0) throw ProfileError("blow-up away from 0", left);
    if (i + 1 == pieces.size()) break;
    if (!piece.domain().bounded()) throw ProfileError("unbounded piece before the last", left);
    const Rational& cut = piece.domain().right_rational();
    const Rational& next = pieces[i + 1].domain().left();
    if (next < cut) throw ProfileError("overlapping pieces", next);
    if (next > cut) throw ProfileError("gap between pieces", cut);
  }
  if (pieces.back().domain().bounded()) {
    const Rational end = pieces.back().domain().right_rational();
    pieces.push_back(PowerPiece::constant(Interval(end, kInfinity), ExtendedScalar(0)));
  }
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    const Rational& cut = pieces[i].domain().right_rational();
    if (compare(pieces[i].monomial_at(cut), pieces[i + 1].monomial_at(cut)) < 0) {
      throw ProfileError("profile increases", cut);
    }
  }
  for (auto& piece : pieces) {
    if (!pieces_.empty() && pieces_.back().same_formula(piece)) {
      pieces_.back() = pieces_.back().with_domain(Interval(pieces_.back().domain().left(), piece.domain().right()));
    } else {
      pieces_.push_back(std::move(piece));
    }
  }
}

DecreasingProfile DecreasingProfile::zero() { return DecreasingProfile({}); }

DecreasingProfile DecreasingProfile::steps(const std::vector<std::pair<ExtendedScalar, Rational>>& steps) {
  std::vector<PowerPiece> pieces;
  Rational left(0);
  for (const auto& [right, value] : steps) {
    pieces.push_back(PowerPiece::constant(Interval(left, right), ExtendedScalar(value)));
    if (right.is_infinite()) break;
    left = right.rational();
  }
  return DecreasingProfile(std::move(pieces));
}

TailKind DecreasingProfile::tail_kind() const {
  const PowerPiece& t = tail();
  if (t.is_zero()) return TailKind::zero;
  return t.is_constant() ? TailKind::constant : TailKind::power;
}

bool DecreasingProfile::is_step() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const PowerPiece& p) { return p.is_constant(); });
}

bool DecreasingProfile::approximate() const {
  return std::any_of(pieces_.begin(), pieces_.end(), [](const PowerPiece& p) { return p.approximate(); });
}

std::size_t DecreasingProfile::piece_index(const Rational& t) const {
  if (t < 0) throw DomainError("profiles live on [0, inf)");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].domain().contains(t)) return i;
  }
  return pieces_.size() - 1;
}

Monomial DecreasingProfile::value_at(const Rational& t) const { return pieces_[piece_index(t)].monomial_at(t); }

Monomial DecreasingProfile::left_limit(const Rational& t) const {
  if (t <= 0) throw DomainError("left limit needs t > 0");
  for (const auto& p : pieces_) {
    if (ExtendedScalar(t) <= p.domain().right()) return p.monomial_at(t);
  }
  return pieces_.back().monomial_at(t);
}

std::vector<Rational> DecreasingProfile::breakpoints() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < pieces_.size(); ++i) out.push_back(pieces_[i].domain().left());
  return out;
}

ExtendedScalar DecreasingProfile::integral(const Rational& from, const ExtendedScalar& to) const {
  ExtendedScalar total{0};
  if (!(ExtendedScalar(from) < to)) return total;
  const Interval window(from, to);
  for (const auto& p : pieces_) {
    auto part = intersect(p.domain(), window);
    if (!part) continue;
    total += p.integral(part->left(), part->right());
    if (total.is_infinite()) return total;
  }
  return total;
}

std::string DecreasingProfile::describe() const {
  std::string out;
  for (const auto& p : pieces_) {
    if (!out.empty()) out += "\n";
    out += p.describe();
  }
  return out;
}

DecreasingProfile validate_profile(std::vector<PowerPiece> pieces) { return DecreasingProfile(std::move(pieces)); }

ExtendedScalar integrate(const DecreasingProfile& p, const Interval& domain) {
  return p.integral(domain.left(), domain.right());
}

ExtendedScalar integrate(const StepFunction& f, const Interval& domain) {
  return f.integral(domain.left(), domain.right());
}

DecreasingProfile truncate(const DecreasingProfile& p, const ExtendedScalar& a) {
  if (a.is_infinite()) return p;
  if (!a.is_exact() || a.sign() < 0) throw DomainError("truncation point must be exact and non-negative");
  if (a.is_zero()) return DecreasingProfile::zero();
  const Interval window(zero_q(), a);
  std::vector<PowerPiece> out;
  for (const auto& piece : p.pieces()) {
    if (auto part = intersect(piece.domain(), window)) out.push_back(piece.with_domain(*part));
  }
  return DecreasingProfile(std::move(out));
}

DecreasingProfile dilate(const DecreasingProfile& p, const Rational& t) {
  if (t <= 0) throw DomainError("dilation parameter must be positive");
  std::vector<PowerPiece> out;
  for (const auto& piece : p.pieces()) out.push_back(piece.dilated(t));
  return DecreasingProfile(std::move(out));
}

DecreasingProfile shift_left(const DecreasingProfile& p, const Rational& a) {
  if (a < 0) throw DomainError("shift must be non-negative");
  if (a == 0) return p;
  const Interval window(a, kInfinity);
  std::vector<PowerPiece> out;
  for (const auto& piece : p.pieces()) {
    if (auto part = intersect(piece.domain(), window)) out.push_back(piece.with_domain(*part).shifted(a));
  }
  return DecreasingProfile(std::move(out));
}

DecreasingProfile scale(const DecreasingProfile& p, const ExtendedScalar& c) {
  if (!c.is_finite() || c.sign() < 0) throw DomainError("scale factor must be finite and non-negative");
  if (c.is_zero()) return DecreasingProfile::zero();
  std::vector<PowerPiece> out;
  for (const auto& piece : p.pieces()) out.push_back(piece.scaled(c));
  return DecreasingProfile(std::move(out));
}

DecreasingProfile raise(const DecreasingProfile& p, const Rational& r) {
  std::vector<PowerPiece> out;
  for (const auto& piece : p.pieces()) out.push_back(piece.raised(r));
  return DecreasingProfile(std::move(out));
}

DecreasingProfile cap(const DecreasingProfile& p, const Rational& level) {
  if (level <= 0) throw DomainError("cap level must be positive");
  const ExtendedScalar lv(level);
  std::vector<PowerPiece> out;
  for (const auto& piece : p.pieces()) {
    const Interval& d = piece.domain();
    if (piece.is_constant()) {
      out.push_back(PowerPiece::constant(d, min(piece.coefficient(), lv)));
      continue;
    }
    if (!piece.coefficient().is_exact()) throw DomainError("cannot cap an approximate piece exactly");
    // Solve k(mt + h)^q = level for t.
    auto base = exact_pow(level / piece.coefficient().rational(), Rational(1 / piece.exponent()));
    if (!base) throw DomainError("cap crossing is irrational for piece " + piece.describe());
    const Rational cross = (*base - piece.shift()) / piece.scale();
    if (cross <= d.left()) {
      out.push_back(piece);
    } else if (!(ExtendedScalar(cross) < d.right())) {
      out.push_back(PowerPiece::constant(d, lv));
    } else {
      out.push_back(PowerPiece::constant(Interval(d.left(), ExtendedScalar(cross)), lv));
      out.push_back(piece.with_domain(Interval(cross, d.right())));
    }
  }
  return DecreasingProfile(std::move(out));
}

StepFunction to_step_function(const DecreasingProfile& p, const MeasureSpace& space) {
  std::vector<Step> steps;
  for (const auto& piece : p.pieces()) {
    if (!piece.is_constant()) throw DomainError("only step profiles convert to step functions");
    if (!piece.coefficient().is_exact()) throw DomainError("approximate step value");
    if (piece.is_zero()) continue;
    auto part = intersect(piece.domain(), Interval(zero_q(), space.total()));
    if (part) steps.push_back({*part, piece.coefficient().rational()});
  }
  return StepFunction(std::move(steps), space);
}

std::vector<CellPair> merge_cells(const std::vector<PowerPiece>& a, const std::vector<PowerPiece>& b) {
  std::vector<CellPair> out;
  std::size_t i = 0, j = 0;
  Rational left(0);
  while (i < a.size() && j < b.size()) {
    const ExtendedScalar right = min(a[i].domain().right(), b[j].domain().right());
    if (ExtendedScalar(left) < right) {
      const Interval cell(left, right);
      out.push_back({cell, a[i].with_domain(cell), b[j].with_domain(cell)});
    }
    if (right.is_infinite()) break;
    left = right.rational();
    if (a[i].domain().right() == right) ++i;
    if (b[j].domain().right() == right) ++j;
  }
  return out;
}

std::optional<Rational> stationary_point(const PowerPiece& x, const Rational& a, const PowerPiece& y,
                                         const Rational& b) {
  if (a + b == 0) return std::nullopt;
  const Rational& m1 = x.scale();
  const Rational& h1 = x.shift();
  const Rational& m2 = y.scale();
  const Rational& h2 = y.shift();
  Rational t = -(a * m1 * h2 + b * m2 * h1) / ((a + b) * m1 * m2);
  t.canonicalize();
  return t;
}

bool pointwise_le(const DecreasingProfile& f, const DecreasingProfile& g, bool* approximate) {
  for (const auto& cell : merge_cells(f.pieces(), g.pieces())) {
    const PowerPiece& x = cell.first;
    const PowerPiece& y = cell.second;
    if (x.is_zero()) continue;
    const Rational& l = cell.domain.left();
    const bool fx = blows_up_at(x, l);
    const bool gy = blows_up_at(y, l);
    if (fx || gy) {
      if (fx && !gy) return false;
      if (fx && gy && compare_asymptotic(x, y, true, approximate) > 0) return false;
    } else if (compare(x.monomial_at(l), y.monomial_at(l), approximate) > 0) {
      return false;
    }
    if (cell.domain.bounded()) {
      if (compare(x.limit_at_right_end(), y.limit_at_right_end(), approximate) > 0) return false;
    } else if (compare_asymptotic(x, y, false, approximate) > 0) {
      return false;
    }
    // The log-ratio has at most one stationary point per cell.
    const Rational a = x.is_constant() ? Rational(0) : x.exponent();
    const Rational b = y.is_constant() ? Rational(0) : Rational(-y.exponent());
    if (auto t = stationary_point(x, a, y, b); t && cell.domain.contains(*t) && *t > l) {
      if (compare(x.monomial_at(*t), y.monomial_at(*t), approximate) > 0) return false;
    }
  }
  return true;
}

ExtendedScalar integrate_product(const DecreasingProfile& f, const DecreasingProfile& g) {
  ExtendedScalar total{0};
  for (const auto& cell : merge_cells(f.pieces(), g.pieces())) {
    const PowerPiece& x = cell.first;
    const PowerPiece& y = cell.second;
    if (x.is_zero() || y.is_zero()) continue;
    if (x.is_constant()) {
      total += y.scaled(x.coefficient()).integral();
    } else if (y.is_constant()) {
      total += x.scaled(y.coefficient()).integral();
    } else if (x.scale() == y.scale() && x.shift() == y.shift()) {
      const PowerPiece joint(cell.domain, x.coefficient() * y.coefficient(), x.exponent() + y.exponent(),
                             x.scale(), x.shift());
      total += joint.integral();
    } else {
      throw DomainError("product of power pieces with different bases on " + x.describe());
    }
    if (total.is_infinite()) return total;
  }
  return total;
}

}  // namespace rikit
