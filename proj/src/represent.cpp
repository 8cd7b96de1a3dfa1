#include "rikit/represent.hpp"

#include "rikit/parallel.hpp"
#include "rikit/rearrange.hpp"

namespace rikit {

namespace {

Rational cell_edge(const Rational& beta, std::size_t n) { return beta * Rational(static_cast<long>(n)); }

// Cell-constant profile from the first `cells` averages (zero afterwards
// unless a constant tail follows).
DecreasingProfile cells_to_profile(const AtomicSequence& seq, std::size_t cells, bool with_tail) {
  std::vector<PowerPiece> pieces;
  ExtendedScalar previous = kInfinity;
  for (std::size_t n = 0; n < cells; ++n) {
    ExtendedScalar v = seq.at(n);
    if (v.is_infinite()) throw DomainError("cell 0 average diverges");
    // Floating averages of a non-increasing function may wobble by an ulp.
    if (v.approximate() && v > previous) v = previous;
    previous = v;
    pieces.push_back(PowerPiece::constant(
        Interval(cell_edge(seq.beta, n), ExtendedScalar(cell_edge(seq.beta, n + 1))), v));
  }
  if (with_tail && !seq.tail_value.is_zero()) {
    pieces.push_back(PowerPiece::constant(Interval(cell_edge(seq.beta, cells), kInfinity), seq.tail_value));
  }
  return DecreasingProfile(std::move(pieces));
}

}  // namespace

ExtendedScalar AtomicSequence::at(std::size_t n) const {
  if (n < values.size()) return values[n];
  if (truncated) throw DomainError("atomic sequence was cut at " + std::to_string(values.size()) + " cells");
  if (count && n >= *count) return ExtendedScalar(0);
  return tail_value;
}

DecreasingProfile AtomicSequence::to_profile() const {
  if (truncated) throw DomainError("a power tail on infinitely many atoms has no finite cell representation");
  return cells_to_profile(*this, values.size(), true);
}

AtomicSequence atomic_transfer(const DecreasingProfile& p, const Rational& beta, std::optional<std::uint64_t> count,
                               std::size_t cells) {
  if (beta <= 0) throw DomainError("atom mass must be positive");
  AtomicSequence seq{beta, {}, ExtendedScalar(0), count, false};
  const DecreasingProfile q =
      count ? truncate(p, ExtendedScalar(beta * Rational(Integer(std::to_string(*count))))) : p;
  std::size_t n_cells = cells;
  switch (q.tail_kind()) {
    case TailKind::power:
      seq.truncated = true;
      break;
    case TailKind::constant:
      seq.tail_value = q.tail().coefficient();
      [[fallthrough]];
    case TailKind::zero: {
      const Rational ratio = q.tail_start() / beta;
      Integer c = floor(ratio);
      if (c < ratio) c += 1;
      n_cells = c.get_ui();
      break;
    }
  }
  for (std::size_t n = 0; n < n_cells; ++n) {
    const ExtendedScalar mass = q.integral(cell_edge(beta, n), ExtendedScalar(cell_edge(beta, n + 1)));
    seq.values.push_back(mass / ExtendedScalar(beta));
  }
  return seq;
}

DecreasingProfile nonatomic_transfer(const DecreasingProfile& p, const ExtendedScalar& total) {
  return truncate(p, total);
}

ExtendedScalar bar_norm(const RepresentationSpec& spec, const DecreasingProfile& f) {
  const MeasureSpace& space = spec.base.space();
  if (!space.is_atomic()) return evaluate_norm(spec.base, nonatomic_transfer(f, space.total()));
  const AtomicSequence seq = atomic_transfer(f, space.beta(), space.atom_count());
  if (!seq.values.empty() && seq.values.front().is_infinite()) return kInfinity;
  return evaluate_norm(spec.base, seq.to_profile());
}

IdentityReport representation_identity_check(const SpaceDescriptor& space, const StepFunction& f) {
  const DecreasingProfile star = rearrangement(f);
  IdentityReport r{evaluate_norm(space, star), bar_norm({space}, star), false};
  r.equal = nearly_equal(r.lhs, r.rhs, 1e-12L);
  return r;
}

PartialIntegralReport transfer_partial_integral_check(const DecreasingProfile& p, const Rational& beta,
                                                      std::size_t n_max) {
  PartialIntegralReport report;
  const AtomicSequence seq = atomic_transfer(p, beta, std::nullopt, n_max + 1);
  const std::size_t cells = seq.truncated ? seq.values.size() : std::max(seq.values.size(), n_max + 1);
  if (seq.at(0).is_infinite()) {
    report.skipped = 2 * n_max;
    return report;
  }
  const DecreasingProfile h = cells_to_profile(seq, cells, false);
  auto cell_mass = [&](std::size_t n) {
    return p.integral(cell_edge(beta, n), ExtendedScalar(cell_edge(beta, n + 1)));
  };
  const bool exact = p.is_step() && !p.approximate();
  auto agree = [&](const ExtendedScalar& a, const ExtendedScalar& b) {
    return exact ? (a.is_exact() && b.is_exact() && a == b) : nearly_equal(a, b, 1e-12L);
  };
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Rational t = cell_edge(beta, n);
    const ExtendedScalar rhs = p.integral(Rational(0), ExtendedScalar(t));
    if (rhs.is_infinite()) {
      ++report.skipped;
      continue;
    }
    const ExtendedScalar lhs = h.integral(Rational(0), ExtendedScalar(t));
    ++report.checked;
    if (!agree(lhs, rhs)) {
      report.mismatches.push_back("t=" + to_string(t) + ": " + lhs.to_string() + " vs " + rhs.to_string());
    }
  }
  // At t0 = (n + 1/2)β the largest k with (k+1)β ≤ t0 is n − 1, so the
  // formula reads Σ_{k<n} ∫ cell_k + ((t0 − nβ)/β)·∫ cell_n.
  for (std::size_t n = 0; n < n_max; ++n) {
    const Rational t0 = beta * (Rational(static_cast<long>(n)) + Rational(1, 2));
    ExtendedScalar formula{0};
    for (std::size_t k = 0; k < n; ++k) formula += cell_mass(k);
    const ExtendedScalar last = cell_mass(n);
    if (formula.is_infinite() || last.is_infinite()) {
      ++report.skipped;
      continue;
    }
    formula += ExtendedScalar((t0 - cell_edge(beta, n)) / beta) * last;
    const ExtendedScalar lhs = h.integral(Rational(0), ExtendedScalar(t0));
    ++report.midpoints_checked;
    if (!agree(lhs, formula)) {
      report.mismatches.push_back("midpoint t=" + to_string(t0) + ": " + lhs.to_string() + " vs " +
                                  formula.to_string());
    }
  }
  return report;
}

ExtendedScalar associate_probe(const SpaceDescriptor& space, const DecreasingProfile& f,
                               const std::vector<DecreasingProfile>& family, unsigned jobs) {
  const ExtendedScalar total = space.space().total();
  const DecreasingProfile local = truncate(f, total);
  const auto ratios = parallel_map(family.size(), jobs, [&](std::size_t i) -> std::optional<ExtendedScalar> {
    const ExtendedScalar n = evaluate_norm(space, family[i]);
    if (n.is_zero() || n.is_infinite()) return std::nullopt;
    return integrate_product(local, truncate(family[i], total)) / n;
  });
  ExtendedScalar best{0};
  for (const auto& r : ratios) {
    if (r) best = max(best, *r);
  }
  return best;
}

}  // namespace rikit
