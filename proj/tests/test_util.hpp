#pragma once

#include "rikit/generators.hpp"
#include "rikit/rearrange.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <tuple>
#include <vector>

namespace testing {

using namespace rikit;

inline Rational Q(const char* s) { return parse_rational(s); }
inline ExtendedScalar E(const char* s) { return parse_extended(s); }

inline bool exact(const ExtendedScalar& x, const char* expected) {
  return x.is_exact() && x == parse_extended(expected);
}

inline Interval iv(const char* a, const char* b) { return Interval(Q(a), E(b)); }

/// k·(m·t + h)^q on [a, b).
inline PowerPiece piece(const char* a, const char* b, const char* k, const char* q = "0", const char* m = "1",
                        const char* h = "0") {
  return PowerPiece(iv(a, b), E(k), Q(q), Q(m), Q(h));
}

/// Step profile from (right end, value) pairs.
inline DecreasingProfile steps(std::initializer_list<std::pair<const char*, const char*>> list) {
  std::vector<std::pair<ExtendedScalar, Rational>> out;
  for (const auto& [r, v] : list) out.emplace_back(E(r), Q(v));
  return DecreasingProfile::steps(out);
}

inline StepFunction stepfn(std::initializer_list<std::tuple<const char*, const char*, const char*>> list,
                           MeasureSpace space = MeasureSpace::non_atomic()) {
  std::vector<Step> out;
  for (const auto& [a, b, v] : list) out.push_back({iv(a, b), Q(v)});
  return StepFunction(std::move(out), std::move(space));
}

inline StepFunction atoms(std::initializer_list<const char*> values, const char* beta = "1") {
  std::vector<Rational> v;
  for (const char* s : values) v.push_back(Q(s));
  return StepFunction::from_atoms(v, MeasureSpace::atomic(Q(beta)));
}

/// Composite Simpson rule, a floating oracle independent of the closed forms.
inline long double simpson(const std::function<long double(long double)>& f, long double a, long double b,
                           int n = 20000) {
  const long double h = (b - a) / n;
  long double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4 : 2);
  return s * h / 3;
}

inline long double ld(const ExtendedScalar& x) { return x.to_long_double(); }

inline bool close(long double a, long double b, long double rel = 1e-9L) {
  return std::fabs(a - b) <= rel * std::max(1.0L, std::max(std::fabs(a), std::fabs(b)));
}

}  // namespace testing
