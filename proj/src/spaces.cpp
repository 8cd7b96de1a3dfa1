#include "rikit/spaces.hpp"

#include "rikit/rearrange.hpp"

#include <cmath>

namespace rikit {

namespace {

// Function-local so that callers running during static initialization are safe.
const Rational& zero_q() {
  static const Rational z(0);
  return z;
}

Monomial max_monomial(const Monomial& a, const Monomial& b) { return compare(a, b) < 0 ? b : a; }

Monomial product(Monomial a, const Monomial& b) { return a.times(b); }

// Near t = 0 a piece behaves like K·t^e; e = 0 unless its base vanishes.
Monomial behaviour_at_zero(const PowerPiece& z, Rational& e) {
  if (!z.is_constant() && z.base_at(zero_q()) == 0) {
    e = z.exponent();
    return z.leading_coefficient();
  }
  e = 0;
  return z.monomial_at(zero_q());
}

Monomial product_limit(const Rational& e, const Monomial& coefficient) {
  if (e > 0) return Monomial::constant(ExtendedScalar(0));
  if (e < 0) return Monomial::infinity();
  return coefficient;
}

Monomial product_limit_at_zero(const PowerPiece& x, const PowerPiece& y) {
  Rational ex, ey;
  Monomial cx = behaviour_at_zero(x, ex);
  Monomial cy = behaviour_at_zero(y, ey);
  if (cx.is_zero() || cy.is_zero()) return Monomial::constant(ExtendedScalar(0));
  return product_limit(Rational(ex + ey), product(cx, cy));
}

Monomial product_limit_at_infinity(const PowerPiece& x, const PowerPiece& y) {
  if (x.is_zero() || y.is_zero()) return Monomial::constant(ExtendedScalar(0));
  // K·t^e → 0 at ∞ when e < 0, the mirror of the rule at 0.
  return product_limit(Rational(-(x.effective_exponent() + y.effective_exponent())),
                       product(x.leading_coefficient(), y.leading_coefficient()));
}

// sup of x·y over the common cell, which is half-open on the right.
Monomial cell_sup(const Interval& cell, const PowerPiece& x, const PowerPiece& y) {
  if (x.is_zero() || y.is_zero()) return Monomial::constant(ExtendedScalar(0));
  const Rational& l = cell.left();
  Monomial best = l == 0 ? product_limit_at_zero(x, y) : product(x.monomial_at(l), y.monomial_at(l));
  best = max_monomial(best, cell.bounded() ? product(x.limit_at_right_end(), y.limit_at_right_end())
                                           : product_limit_at_infinity(x, y));
  if (auto t = stationary_point(x, x.effective_exponent(), y, y.effective_exponent());
      t && *t > l && cell.contains(*t)) {
    best = max_monomial(best, product(x.monomial_at(*t), y.monomial_at(*t)));
  }
  return best;
}

DecreasingProfile restrict_to_space(const SpaceDescriptor& space, const DecreasingProfile& p) {
  return space.space().finite() ? truncate(p, space.space().total()) : p;
}

bool within(const ExtendedScalar& a, const ExtendedScalar& b, long double rel) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  if (a.is_exact() && b.is_exact() && a.rational() == b.rational()) return true;
  const long double x = a.to_long_double();
  const long double y = b.to_long_double();
  return std::fabs(x - y) <= rel * std::max(std::fabs(x), std::fabs(y));
}

}  // namespace

FundamentalFn::FundamentalFn(std::vector<PowerPiece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw DomainError("fundamental function needs at least one piece");
  if (pieces_.front().domain().left() != 0) throw DomainError("fundamental function must start at 0");
  if (pieces_.back().domain().bounded()) throw DomainError("fundamental function must cover [0, inf)");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const PowerPiece& piece = pieces_[i];
    const Rational& left = piece.domain().left();
    if (piece.is_zero()) throw DomainError("fundamental function vanishes on " + piece.describe());
    if (piece.effective_exponent() < 0) throw DomainError("fundamental function decreases on " + piece.describe());
    if (left > 0 && !piece.is_constant() && piece.base_at(left) == 0) {
      throw DomainError("fundamental function vanishes at t=" + to_string(left));
    }
    if (i + 1 < pieces_.size()) {
      const Rational& cut = piece.domain().right_rational();
      if (pieces_[i + 1].domain().left() != cut) throw DomainError("fundamental function pieces must be consecutive");
      const int c = compare(piece.monomial_at(cut), pieces_[i + 1].monomial_at(cut));
      if (c > 0) throw DomainError("fundamental function decreases at t=" + to_string(cut));
      if (c < 0 && warning_.empty()) warning_ = "phi jumps up at t=" + to_string(cut) + ", so phi(t)/t increases";
    }
    // d/dt log(φ/t) has the sign of (q−1)·m·t − h.
    if (!piece.is_constant() && warning_.empty()) {
      const Rational q1 = piece.exponent() - 1;
      auto increasing_at = [&](const Rational& t) { return q1 * piece.scale() * t - piece.shift() > 0; };
      bool bad = increasing_at(left);
      if (piece.domain().bounded()) {
        bad = bad || increasing_at(piece.domain().right_rational());
      } else {
        bad = bad || q1 > 0 || (q1 == 0 && piece.shift() < 0);
      }
      if (bad) warning_ = "phi(t)/t increases on " + piece.describe();
    }
  }
}

FundamentalFn FundamentalFn::power(const Rational& q) {
  if (q < 0) throw DomainError("power fundamental function needs q >= 0");
  return FundamentalFn({PowerPiece(Interval(zero_q(), kInfinity), ExtendedScalar(1), q)});
}

Monomial FundamentalFn::value_at(const Rational& t) const {
  if (t <= 0) return Monomial::constant(ExtendedScalar(0));
  for (const auto& p : pieces_) {
    if (p.domain().contains(t)) return p.monomial_at(t);
  }
  return pieces_.back().monomial_at(t);
}

Monomial FundamentalFn::left_limit(const Rational& t) const {
  if (t <= 0) throw DomainError("left limit needs t > 0");
  for (const auto& p : pieces_) {
    if (ExtendedScalar(t) <= p.domain().right()) return p.monomial_at(t);
  }
  return pieces_.back().monomial_at(t);
}

std::string FundamentalFn::describe() const {
  std::string out;
  for (const auto& p : pieces_) {
    if (!out.empty()) out += "; ";
    out += p.describe();
  }
  return out;
}

DecreasingProfile reciprocal(const FundamentalFn& phi) {
  std::vector<PowerPiece> out;
  for (const auto& p : phi.pieces()) {
    out.emplace_back(p.domain(), ExtendedScalar(1) / p.coefficient(), Rational(-p.effective_exponent()), p.scale(),
                     p.shift());
  }
  return DecreasingProfile(std::move(out));
}

SpaceDescriptor SpaceDescriptor::lp(ExtendedScalar p, MeasureSpace space) {
  if (!p.is_exact() || p.sign() <= 0) throw DomainError("Lp exponent must be exact and positive");
  SpaceDescriptor d(SpaceKind::lp, std::move(space));
  d.p_ = std::move(p);
  return d;
}

SpaceDescriptor SpaceDescriptor::l1_plus_linf(MeasureSpace space) {
  return SpaceDescriptor(SpaceKind::l1_plus_linf, std::move(space));
}

SpaceDescriptor SpaceDescriptor::l1_cap_linf(MeasureSpace space) {
  return SpaceDescriptor(SpaceKind::l1_cap_linf, std::move(space));
}

SpaceDescriptor SpaceDescriptor::weak_marcinkiewicz(FundamentalFn phi, MeasureSpace space) {
  SpaceDescriptor d(SpaceKind::weak_marcinkiewicz, std::move(space));
  d.phi_ = std::move(phi);
  return d;
}

const ExtendedScalar& SpaceDescriptor::exponent() const {
  if (kind_ != SpaceKind::lp) throw DomainError("only Lp spaces have an exponent");
  return p_;
}

const FundamentalFn& SpaceDescriptor::phi() const {
  if (!phi_) throw DomainError("only weak Marcinkiewicz spaces carry phi");
  return *phi_;
}

SpaceDescriptor SpaceDescriptor::with_space(MeasureSpace space) const {
  SpaceDescriptor d = *this;
  d.space_ = std::move(space);
  return d;
}

std::string SpaceDescriptor::describe() const {
  std::string name;
  switch (kind_) {
    case SpaceKind::lp:
      name = "L^" + p_.to_string();
      break;
    case SpaceKind::l1_plus_linf:
      name = "L1+Linf";
      break;
    case SpaceKind::l1_cap_linf:
      name = "L1capLinf";
      break;
    case SpaceKind::weak_marcinkiewicz:
      name = "m_phi[" + phi_->describe() + "]";
      break;
  }
  return name + " over " + space_.describe();
}

ExtendedScalar weighted_sup(const FundamentalFn& phi, const DecreasingProfile& p) {
  Monomial best = Monomial::constant(ExtendedScalar(0));
  for (const auto& cell : merge_cells(phi.pieces(), p.pieces())) {
    best = max_monomial(best, cell_sup(cell.domain, cell.first, cell.second));
    if (best.infinite) break;
  }
  return best.value();
}

Monomial weighted_limit_at_zero(const FundamentalFn& phi, const DecreasingProfile& p) {
  const auto cells = merge_cells(phi.pieces(), p.pieces());
  return product_limit_at_zero(cells.front().first, cells.front().second);
}

Monomial weighted_limit_at_infinity(const FundamentalFn& phi, const DecreasingProfile& p) {
  const auto cells = merge_cells(phi.pieces(), p.pieces());
  return product_limit_at_infinity(cells.back().first, cells.back().second);
}

ExtendedScalar evaluate_norm(const SpaceDescriptor& space, const DecreasingProfile& profile) {
  const DecreasingProfile p = restrict_to_space(space, profile);
  switch (space.kind()) {
    case SpaceKind::lp: {
      const ExtendedScalar& r = space.exponent();
      if (r.is_infinite()) return p.head_limit().value();
      const Rational& q = r.rational();
      if (q == 1) return p.integral();
      return pow(raise(p, q).integral(), Rational(1 / q));
    }
    case SpaceKind::l1_plus_linf:
      return p.integral(zero_q(), ExtendedScalar(1));
    case SpaceKind::l1_cap_linf:
      return p.head_limit().value() + p.integral();
    case SpaceKind::weak_marcinkiewicz:
      return weighted_sup(space.phi(), p);
  }
  return ExtendedScalar(0);
}

ExtendedScalar fundamental_function(const SpaceDescriptor& space, const Rational& t) {
  if (t < 0) throw DomainError("fundamental function needs t >= 0");
  if (space.space().total() < ExtendedScalar(t)) {
    throw DomainError("t=" + to_string(t) + " exceeds the total measure " + space.space().total().to_string());
  }
  if (t == 0) return ExtendedScalar(0);
  return evaluate_norm(space, DecreasingProfile::steps({{ExtendedScalar(t), Rational(1)}}));
}

DilationProbe dilation_bound_probe(const SpaceDescriptor& space, const Rational& t,
                                   const std::vector<DecreasingProfile>& samples) {
  DilationProbe out;
  for (const auto& p : samples) {
    const ExtendedScalar base = evaluate_norm(space, p);
    if (base.is_zero() || base.is_infinite()) {
      ++out.skipped;
      continue;
    }
    // evaluate_norm truncates D_t p to [0, μ(R)) on finite spaces.
    const ExtendedScalar ratio = evaluate_norm(space, dilate(restrict_to_space(space, p), t)) / base;
    out.bound = max(out.bound, ratio);
    ++out.used;
  }
  return out;
}

const AxiomVerdict& AxiomReport::verdict(const std::string& name) const {
  for (const auto& v : verdicts) {
    if (v.name == name) return v;
  }
  throw DomainError("no verdict named " + name);
}

bool AxiomReport::all_pass() const {
  for (const auto& v : verdicts) {
    if (!v.pass) return false;
  }
  return true;
}

AxiomReport axiom_suite(const SpaceDescriptor& space, const AxiomSamples& samples) {
  AxiomReport report;
  auto norm_of = [&](const StepFunction& f) { return evaluate_norm(space, rearrangement(f)); };

  AxiomVerdict p2{"P2", true, ""};
  for (std::size_t i = 0; i < samples.ordered_pairs.size() && p2.pass; ++i) {
    const auto& [f, g] = samples.ordered_pairs[i];
    if (!dominated(f, g)) continue;
    if (definitely_greater(norm_of(f), norm_of(g))) {
      p2.pass = false;
      p2.note = "pair " + std::to_string(i) + " has f <= g but ||f|| > ||g||";
    }
  }
  report.verdicts.push_back(p2);

  AxiomVerdict p3{"P3", true, ""};
  std::size_t p3_skipped = 0;
  for (std::size_t i = 0; i < samples.profiles.size() && p3.pass; ++i) {
    const DecreasingProfile& p = samples.profiles[i];
    const ExtendedScalar target = evaluate_norm(space, p);
    std::vector<ExtendedScalar> norms;
    try {
      for (int j = 0; j <= 80; j += 4) {
        const Rational n(Integer(1) << j);
        norms.push_back(evaluate_norm(space, truncate(cap(p, n), ExtendedScalar(n))));
      }
    } catch (const DomainError&) {
      ++p3_skipped;
      continue;
    }
    for (std::size_t j = 1; j < norms.size() && p3.pass; ++j) {
      if (definitely_greater(norms[j - 1], norms[j])) {
        p3.pass = false;
        p3.note = "profile " + std::to_string(i) + ": truncation norms decrease";
      }
    }
    if (!p3.pass) break;
    const ExtendedScalar& last = norms.back();
    const bool converged =
        target.is_infinite() ? (last.is_infinite() || last > norms.front() * ExtendedScalar(10)) : within(last, target, 1e-9L);
    if (!converged) {
      p3.pass = false;
      p3.note = "profile " + std::to_string(i) + ": truncation norms " + last.to_string() + " do not reach " +
                target.to_string();
    }
  }
  if (p3.pass && p3_skipped > 0) p3.note = std::to_string(p3_skipped) + " profiles skipped (irrational caps)";
  report.verdicts.push_back(p3);

  AxiomVerdict p4{"P4", true, ""};
  std::vector<Rational> measures = samples.probe_measures;
  measures.push_back(Rational(1));
  for (const auto& a : measures) {
    if (space.space().total() < ExtendedScalar(a)) continue;
    if (fundamental_function(space, a).is_infinite()) {
      p4.pass = false;
      p4.note = "||chi[0," + to_string(a) + ")|| is infinite";
    }
  }
  report.verdicts.push_back(p4);

  AxiomVerdict p5{"P5", true, ""};
  for (const auto& a : samples.probe_measures) {
    if (space.space().total() < ExtendedScalar(a)) continue;
    P5Estimate est{a, ExtendedScalar(0), false, std::nullopt};
    for (const auto& p : samples.profiles) {
      const ExtendedScalar n = evaluate_norm(space, p);
      if (n.is_zero() || n.is_infinite()) continue;
      const ExtendedScalar mass = p.integral(zero_q(), ExtendedScalar(a));
      if (mass.is_infinite()) {
        est.unbounded = true;
        est.witness = p;
        break;
      }
      est.constant = max(est.constant, mass / n);
    }
    if (est.unbounded && p5.pass) {
      p5.pass = false;
      p5.note = "integral over [0," + to_string(a) + ") diverges for a profile of finite norm";
    }
    report.p5.push_back(std::move(est));
  }
  report.verdicts.push_back(p5);

  AxiomVerdict q1c{"Q1c", true, ""};
  for (const auto& [f, g] : samples.sum_pairs) {
    const ExtendedScalar denom = norm_of(f) + norm_of(g);
    if (denom.is_zero() || denom.is_infinite()) continue;
    report.concavity = max(report.concavity, norm_of(f + g) / denom);
  }
  if (report.concavity.is_infinite()) {
    q1c.pass = false;
    q1c.note = "no finite modulus of concavity";
  } else {
    q1c.note = "C >= " + report.concavity.to_string();
  }
  report.verdicts.push_back(q1c);
  return report;
}

}  // namespace rikit
