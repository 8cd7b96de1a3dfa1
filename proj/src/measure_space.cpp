#include "rikit/measure_space.hpp"

namespace rikit {

MeasureSpace MeasureSpace::non_atomic(ExtendedScalar total) {
  if (!total.is_exact() || total.sign() <= 0) {
    throw DomainError("non-atomic total mass must be exact and positive, got " + total.to_string());
  }
  MeasureSpace s;
  s.total_ = std::move(total);
  return s;
}

MeasureSpace MeasureSpace::atomic(Rational beta, std::optional<std::uint64_t> count) {
  beta.canonicalize();
  if (beta <= 0) throw DomainError("atom mass must be positive");
  if (count && *count == 0) throw DomainError("atomic space needs at least one atom");
  MeasureSpace s;
  s.atomic_ = true;
  s.beta_ = beta;
  s.count_ = count;
  s.total_ = count ? ExtendedScalar(beta * Rational(Integer(std::to_string(*count)))) : kInfinity;
  return s;
}

const Rational& MeasureSpace::beta() const {
  if (!atomic_) throw DomainError("non-atomic space has no atom mass");
  return beta_;
}

ExtendedScalar MeasureSpace::total() const { return total_; }

std::string MeasureSpace::describe() const {
  if (!atomic_) return "non-atomic(total=" + total_.to_string() + ")";
  return "atomic(beta=" + to_string(beta_) +
         ", count=" + (count_ ? std::to_string(*count_) : std::string("inf")) + ")";
}

}  // namespace rikit
