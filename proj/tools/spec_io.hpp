#pragma once

#include "rikit/acontinuity.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace rikit::cli {

/// Malformed input. `where` names the offending field, e.g. "profile[1].exp",
/// or "byte 17" for syntax errors.
class SpecError : public Error {
 public:
  SpecError(const std::string& where, const std::string& what) : Error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct SpecDocument {
  std::optional<SpaceDescriptor> space;
  std::optional<StepFunction> function;
  std::optional<DecreasingProfile> profile;
  std::optional<DecreasingProfile> f;
  std::optional<DecreasingProfile> g;
  std::optional<ShrinkFamily> family;
  std::optional<std::string> schedule;
  std::optional<std::uint64_t> k_max;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const SpecDocument&, const SpecDocument&) = default;
};

SpecDocument parse_spec(const std::string& text);
/// Canonical JSON; parse_spec(dump_spec(d)) == d.
std::string dump_spec(const SpecDocument& doc);

}  // namespace rikit::cli
