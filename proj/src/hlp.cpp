#include "rikit/hlp.hpp"

#include "rikit/parallel.hpp"

#include <cmath>

namespace rikit {

namespace {

// Function-local so that callers running during static initialization are safe.
const Rational& zero_q() {
  static const Rational z(0);
  return z;
}

long double log_piece(const PowerPiece& z, long double t) {
  const long double k = std::log(z.coefficient().to_long_double());
  if (z.is_constant()) return k;
  const long double base = ExtendedScalar(z.scale()).to_long_double() * t + ExtendedScalar(z.shift()).to_long_double();
  return k + ExtendedScalar(z.exponent()).to_long_double() * std::log(base);
}

// Real root of log y − log x on [a, b], which is monotone there.
std::optional<long double> bisect(const PowerPiece& x, const PowerPiece& y, long double a, long double b) {
  auto s = [&](long double t) { return log_piece(y, t) - log_piece(x, t); };
  long double sa = s(a), sb = s(b);
  if (!std::isfinite(sa) || !std::isfinite(sb) || (sa > 0) == (sb > 0)) return std::nullopt;
  for (int i = 0; i < 200 && b - a > 1e-30L * std::max(1.0L, b); ++i) {
    const long double mid = a + (b - a) / 2;
    if ((s(mid) > 0) == (sa > 0)) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return a + (b - a) / 2;
}

void push_if_inside(std::vector<Rational>& out, const Interval& cell, const Rational& t) {
  if (t > cell.left() && cell.contains(t)) out.push_back(t);
}

void push_if_inside(std::vector<Rational>& out, const Interval& cell, long double t) {
  if (!std::isfinite(t) || t <= 0) return;
  push_if_inside(out, cell, Rational(static_cast<double>(t)));
}

// Points of the open cell where g − f may change sign. Irrational crossings
// are rounded to nearby rationals; D is flat there, so the error is second
// order.
std::vector<Rational> crossings(const Interval& cell, const PowerPiece& x, const PowerPiece& y, bool& approx) {
  std::vector<Rational> out;
  if (x.is_zero() || y.is_zero()) return out;
  const Rational qx = x.effective_exponent();
  const Rational qy = y.effective_exponent();
  if (qx == 0 && qy == 0) return out;
  if (qx == 0 || qy == 0) {
    const PowerPiece& c = qx == 0 ? x : y;
    const PowerPiece& z = qx == 0 ? y : x;
    if (c.coefficient().is_exact() && z.coefficient().is_exact()) {
      if (auto base = exact_pow(c.coefficient().rational() / z.coefficient().rational(), Rational(1 / z.exponent()))) {
        push_if_inside(out, cell, Rational((*base - z.shift()) / z.scale()));
        return out;
      }
    }
    approx = true;
    const long double lb = (std::log(c.coefficient().to_long_double()) - std::log(z.coefficient().to_long_double())) /
                           ExtendedScalar(z.exponent()).to_long_double();
    const long double t = (std::exp(lb) - ExtendedScalar(z.shift()).to_long_double()) /
                          ExtendedScalar(z.scale()).to_long_double();
    push_if_inside(out, cell, t);
    return out;
  }
  if (x.shift() == 0 && y.shift() == 0) {
    if (qx == qy) return out;
    const ExtendedScalar kx = x.leading_coefficient().value();
    const ExtendedScalar ky = y.leading_coefficient().value();
    const Rational inv = 1 / (qy - qx);
    if (kx.is_exact() && ky.is_exact()) {
      if (auto t = exact_pow(kx.rational() / ky.rational(), inv)) {
        push_if_inside(out, cell, *t);
        return out;
      }
    }
    approx = true;
    push_if_inside(out, cell,
                   std::exp((std::log(kx.to_long_double()) - std::log(ky.to_long_double())) *
                            ExtendedScalar(inv).to_long_double()));
    return out;
  }
  // General affine bases: log y − log x is monotone on each side of its
  // single stationary point.
  approx = true;
  std::vector<long double> cuts{cell.left() == 0 ? 1e-300L : ExtendedScalar(cell.left()).to_long_double()};
  if (auto s = stationary_point(y, qy, x, Rational(-qx)); s && *s > cell.left() && cell.contains(*s)) {
    cuts.push_back(ExtendedScalar(*s).to_long_double());
  }
  long double end = cell.bounded() ? cell.right().to_long_double() : std::max(cuts.back(), 1.0L) * 2;
  if (!cell.bounded()) {
    // Push the far end out until log y − log x settles near its asymptotic sign.
    for (int i = 0; i < 400 && std::isfinite(end); ++i) {
      end *= 2;
      if (std::fabs(log_piece(y, end) - log_piece(x, end)) > 1e-6L && i > 60) break;
    }
  }
  cuts.push_back(end);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (auto t = bisect(x, y, cuts[i], cuts[i + 1])) push_if_inside(out, cell, *t);
  }
  return out;
}

// Antiderivative difference A_g − A_f at +∞ for tails with the same leading
// behaviour; only the logarithmic case leaves a residue.
long double tail_residue(const PowerPiece& x, const PowerPiece& y) {
  if (x.effective_exponent() != -1) return 0;
  const long double k = (y.coefficient() / ExtendedScalar(y.scale())).to_long_double();
  return k * (log_rational(y.scale()) - log_rational(x.scale()));
}

long double antiderivative(const PowerPiece& z, const Rational& t) {
  const long double k = z.coefficient().to_long_double();
  const long double m = ExtendedScalar(z.scale()).to_long_double();
  const long double u = ExtendedScalar(z.base_at(t)).to_long_double();
  if (z.is_constant()) return k * ExtendedScalar(t).to_long_double();
  const long double q = ExtendedScalar(z.exponent()).to_long_double();
  if (z.exponent() == -1) return k / m * std::log(u);
  return k / (m * (q + 1)) * std::pow(u, q + 1);
}

bool negative(const ExtendedScalar& d, const ExtendedScalar& scale_ref) {
  if (d.sign() >= 0) return false;
  if (d.is_exact()) return true;
  const long double ref = std::max(1.0L, std::fabs(scale_ref.to_long_double()));
  return -d.to_long_double() > 1e-12L * ref;
}

bool integrable_head(const DecreasingProfile& p) { return p.integral(zero_q(), ExtendedScalar(1)).is_finite(); }

}  // namespace

ExtendedScalar primitive_gap(const DecreasingProfile& f, const DecreasingProfile& g, const Rational& t) {
  return g.integral(zero_q(), ExtendedScalar(t)) - f.integral(zero_q(), ExtendedScalar(t));
}

HlpVerdict hlp_compare(const DecreasingProfile& f, const DecreasingProfile& g, HlpOptions options) {
  const bool fi = integrable_head(f);
  const bool gi = integrable_head(g);
  if (!fi || !gi) {
    if (!options.nonintegrable_majorizes) {
      throw DomainError("hlp_compare: a head is not integrable, so the maximal function is infinite and the "
                        "comparison is undefined");
    }
    if (!gi) return {};
    return {Relation::not_majorized, Rational(1), false};
  }

  HlpVerdict verdict;
  std::optional<Rational> worst_t;
  ExtendedScalar worst{0};
  auto consider = [&](const Rational& t) {
    const ExtendedScalar d = primitive_gap(f, g, t);
    if (d.approximate()) verdict.approximate = true;
    if (negative(d, g.integral(zero_q(), ExtendedScalar(t))) && (!worst_t || d < worst)) {
      worst = d;
      worst_t = t;
    }
  };

  const auto cells = merge_cells(f.pieces(), g.pieces());
  for (const auto& cell : cells) {
    if (cell.domain.left() > 0) consider(cell.domain.left());
    for (const auto& t : crossings(cell.domain, cell.first, cell.second, verdict.approximate)) consider(t);
  }

  // Behaviour of D = G − F as t → ∞.
  const CellPair& last = cells.back();
  const Rational& start = last.domain.left();
  const ExtendedScalar f_total = f.integral();
  const ExtendedScalar g_total = g.integral();
  int limit_sign = 0;
  std::optional<ExtendedScalar> limit;
  if (f_total.is_finite() && g_total.is_finite()) {
    limit = g_total - f_total;
  } else if (f_total.is_infinite() && g_total.is_infinite()) {
    const PowerPiece& x = last.first;
    const PowerPiece& y = last.second;
    if (x.same_formula(y)) {
      limit = primitive_gap(f, g, start);
    } else if (x.effective_exponent() != y.effective_exponent()) {
      limit_sign = y.effective_exponent() > x.effective_exponent() ? 1 : -1;
    } else {
      const int c = compare(y.leading_coefficient(), x.leading_coefficient(), &verdict.approximate);
      if (c != 0) {
        limit_sign = c;
      } else {
        verdict.approximate = true;
        const long double at_start = antiderivative(y, start) - antiderivative(x, start);
        limit = primitive_gap(f, g, start) + ExtendedScalar::approx(tail_residue(x, y) - at_start);
      }
    }
  } else {
    limit_sign = g_total.is_infinite() ? 1 : -1;
  }
  const bool limit_negative = limit ? negative(*limit, g_total.is_finite() ? g_total : ExtendedScalar(1)) : limit_sign < 0;

  if (!worst_t && limit_negative) {
    // D eventually drops below 0: walk out geometrically to find a point.
    for (int j = 0; j < 512 && !worst_t; ++j) consider(Rational(start + Rational(Integer(1) << j)));
    if (!worst_t) {
      verdict.approximate = true;
      worst_t = start + Rational(Integer(1) << 512);
    }
  }
  if (worst_t) {
    verdict.relation = Relation::not_majorized;
    verdict.witness = worst_t;
  }
  return verdict;
}

std::string HlpProbeReport::describe() const {
  if (!counterexample) return "no violation in " + std::to_string(scanned) + " pairs (probe, not a proof)";
  return "counterexample at pair " + std::to_string(counterexample->index) + ": ||f|| = " +
         counterexample->f_norm.to_string() + " > ||g|| = " + counterexample->g_norm.to_string() + " although f < g";
}

HlpProbeReport hlp_principle_probe(const SpaceDescriptor& space,
                                   const std::vector<std::pair<DecreasingProfile, DecreasingProfile>>& pairs,
                                   unsigned jobs) {
  const auto norms = parallel_map(pairs.size(), jobs, [&](std::size_t i) {
    return std::pair{evaluate_norm(space, pairs[i].first), evaluate_norm(space, pairs[i].second)};
  });
  HlpProbeReport report;
  report.scanned = pairs.size();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [nf, ng] = norms[i];
    if (definitely_greater(nf, ng)) {
      report.counterexample = HlpCounterexample{i, pairs[i].first, pairs[i].second, nf, ng};
      break;
    }
  }
  return report;
}

EmbeddingReport embedding_check(const SpaceDescriptor& space, const std::vector<DecreasingProfile>& samples) {
  const SpaceDescriptor cap_space = SpaceDescriptor::l1_cap_linf(space.space());
  const SpaceDescriptor sum_space = SpaceDescriptor::l1_plus_linf(space.space());
  EmbeddingReport report;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const ExtendedScalar nx = evaluate_norm(space, samples[i]);
    const ExtendedScalar ncap = evaluate_norm(cap_space, samples[i]);
    const ExtendedScalar nsum = evaluate_norm(sum_space, samples[i]);
    if (nx.is_zero()) continue;
    if (ncap.is_finite()) {
      if (nx.is_infinite()) {
        report.c1 = kInfinity;
        if (!report.witness) {
          report.witness = i;
          report.failing_side = "lower";
        }
      } else {
        report.c1 = max(report.c1, nx / ncap);
      }
    }
    if (nx.is_finite()) {
      if (nsum.is_infinite()) {
        report.c2 = kInfinity;
        if (!report.witness) {
          report.witness = i;
          report.failing_side = "upper";
        }
      } else {
        report.c2 = max(report.c2, nsum / nx);
      }
    }
  }
  return report;
}

}  // namespace rikit
