#include "spec_io.hpp"

#include <json.hpp>

#include <set>

namespace rikit::cli {

namespace {

using Json = nlohmann::ordered_json;

const Rational kZero(0);

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const Json& require(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw SpecError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SpecError(where + "." + key, "missing field");
  return *it;
}

void only_keys(const Json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw SpecError(where, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) throw SpecError(where.empty() ? it.key() : where + "." + it.key(), "unknown field");
  }
}

std::string literal(const Json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw SpecError(where, "expected a rational string such as \"3/4\"");
}

Rational rational_at(const Json& v, const std::string& where) {
  try {
    return parse_rational(literal(v, where));
  } catch (const SpecError&) {
    throw;
  } catch (const Error& e) {
    throw SpecError(where, e.what());
  }
}

ExtendedScalar extended_at(const Json& v, const std::string& where) {
  try {
    return parse_extended(literal(v, where));
  } catch (const SpecError&) {
    throw;
  } catch (const Error& e) {
    throw SpecError(where, e.what());
  }
}

std::uint64_t count_at(const Json& v, const std::string& where) {
  if (!v.is_number_unsigned()) throw SpecError(where, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

std::string exact_text(const ExtendedScalar& x, const std::string& where) {
  if (x.approximate()) throw SpecError(where, "approximate values cannot be written exactly");
  return x.to_string();
}

std::vector<PowerPiece> pieces_at(const Json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) throw SpecError(where, "expected a non-empty list of pieces");
  std::vector<PowerPiece> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    const Json& p = v[i];
    only_keys(p, {"from", "to", "coeff", "exp", "scale", "shift"}, at);
    const Rational from = rational_at(require(p, "from", at), at + ".from");
    const ExtendedScalar to = extended_at(require(p, "to", at), at + ".to");
    const ExtendedScalar coeff = extended_at(require(p, "coeff", at), at + ".coeff");
    const Rational exp = p.contains("exp") ? rational_at(p["exp"], at + ".exp") : Rational(0);
    const Rational scale = p.contains("scale") ? rational_at(p["scale"], at + ".scale") : Rational(1);
    const Rational shift = p.contains("shift") ? rational_at(p["shift"], at + ".shift") : Rational(0);
    try {
      out.emplace_back(Interval(from, to), coeff, exp, scale, shift);
    } catch (const Error& e) {
      throw SpecError(at, e.what());
    }
  }
  return out;
}

Json dump_pieces(const std::vector<PowerPiece>& pieces, const std::string& where) {
  Json out = Json::array();
  for (const auto& p : pieces) {
    Json j;
    j["from"] = to_string(p.domain().left());
    j["to"] = p.domain().right().to_string();
    j["coeff"] = exact_text(p.coefficient(), where);
    j["exp"] = to_string(p.exponent());
    if (p.scale() != 1) j["scale"] = to_string(p.scale());
    if (p.shift() != 0) j["shift"] = to_string(p.shift());
    out.push_back(std::move(j));
  }
  return out;
}

DecreasingProfile profile_at(const Json& v, const std::string& where) {
  auto pieces = pieces_at(v, where);
  try {
    return DecreasingProfile(std::move(pieces));
  } catch (const Error& e) {
    throw SpecError(where, e.what());
  }
}

MeasureSpace measure_at(const Json& v, const std::string& where) {
  only_keys(v, {"type", "total", "beta", "count"}, where);
  const Json& type = require(v, "type", where);
  try {
    if (type == "nonatomic") {
      return MeasureSpace::non_atomic(v.contains("total") ? extended_at(v["total"], where + ".total") : kInfinity);
    }
    if (type == "atomic") {
      std::optional<std::uint64_t> count;
      if (v.contains("count")) count = count_at(v["count"], where + ".count");
      return MeasureSpace::atomic(rational_at(require(v, "beta", where), where + ".beta"), count);
    }
  } catch (const SpecError&) {
    throw;
  } catch (const Error& e) {
    throw SpecError(where, e.what());
  }
  throw SpecError(where + ".type", "expected \"nonatomic\" or \"atomic\"");
}

Json dump_measure(const MeasureSpace& ms) {
  Json j;
  if (ms.is_atomic()) {
    j["type"] = "atomic";
    j["beta"] = to_string(ms.beta());
    if (ms.atom_count()) j["count"] = *ms.atom_count();
  } else {
    j["type"] = "nonatomic";
    j["total"] = ms.total().to_string();
  }
  return j;
}

FundamentalFn phi_at(const Json& v, const std::string& where) {
  try {
    if (v.is_string()) {
      const std::string s = v.get<std::string>();
      if (s == "t") return FundamentalFn::power(Rational(1));
      if (s.rfind("t^", 0) == 0) return FundamentalFn::power(parse_rational(s.substr(2)));
      throw SpecError(where, "expected \"t\", \"t^a/b\" or a list of pieces");
    }
    return FundamentalFn(pieces_at(v, where));
  } catch (const SpecError&) {
    throw;
  } catch (const Error& e) {
    throw SpecError(where, e.what());
  }
}

SpaceDescriptor space_at(const Json& v, const std::string& where) {
  only_keys(v, {"kind", "p", "phi", "measure"}, where);
  const MeasureSpace ms = v.contains("measure") ? measure_at(v["measure"], where + ".measure") : MeasureSpace::non_atomic();
  const Json& kind = require(v, "kind", where);
  if (kind == "lp") {
    const ExtendedScalar p = extended_at(require(v, "p", where), where + ".p");
    try {
      return SpaceDescriptor::lp(p, ms);
    } catch (const Error& e) {
      throw SpecError(where + ".p", e.what());
    }
  }
  if (kind == "l1_plus_linf") return SpaceDescriptor::l1_plus_linf(ms);
  if (kind == "l1_cap_linf") return SpaceDescriptor::l1_cap_linf(ms);
  if (kind == "weak_marcinkiewicz") {
    return SpaceDescriptor::weak_marcinkiewicz(phi_at(require(v, "phi", where), where + ".phi"), ms);
  }
  throw SpecError(where + ".kind", "expected lp, l1_plus_linf, l1_cap_linf or weak_marcinkiewicz");
}

Json dump_space(const SpaceDescriptor& X) {
  Json j;
  switch (X.kind()) {
    case SpaceKind::lp:
      j["kind"] = "lp";
      j["p"] = exact_text(X.exponent(), "space.p");
      break;
    case SpaceKind::l1_plus_linf:
      j["kind"] = "l1_plus_linf";
      break;
    case SpaceKind::l1_cap_linf:
      j["kind"] = "l1_cap_linf";
      break;
    case SpaceKind::weak_marcinkiewicz:
      j["kind"] = "weak_marcinkiewicz";
      j["phi"] = dump_pieces(X.phi().pieces(), "space.phi");
      break;
  }
  j["measure"] = dump_measure(X.space());
  return j;
}

StepFunction function_at(const Json& v, const MeasureSpace& ms, const std::string& where) {
  only_keys(v, {"steps"}, where);
  const Json& steps = require(v, "steps", where);
  if (!steps.is_array()) throw SpecError(where + ".steps", "expected a list");
  std::vector<Step> out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string at = where + ".steps[" + std::to_string(i) + "]";
    only_keys(steps[i], {"from", "to", "value"}, at);
    const Rational from = rational_at(require(steps[i], "from", at), at + ".from");
    const ExtendedScalar to = extended_at(require(steps[i], "to", at), at + ".to");
    const Rational value = rational_at(require(steps[i], "value", at), at + ".value");
    try {
      out.push_back({Interval(from, to), value});
    } catch (const Error& e) {
      throw SpecError(at, e.what());
    }
  }
  try {
    return StepFunction(std::move(out), ms);
  } catch (const Error& e) {
    throw SpecError(where, e.what());
  }
}

Json dump_function(const StepFunction& f) {
  Json steps = Json::array();
  for (const auto& s : f.steps()) {
    Json j;
    j["from"] = to_string(s.interval.left());
    j["to"] = s.interval.right().to_string();
    j["value"] = to_string(s.value);
    steps.push_back(std::move(j));
  }
  Json out;
  out["steps"] = std::move(steps);
  return out;
}

ShrinkFamily family_at(const Json& v, const std::string& where) {
  only_keys(v, {"kind", "components"}, where);
  const Json& kind = require(v, "kind", where);
  if (kind == "head") return ShrinkFamily::head();
  if (kind == "tail") return ShrinkFamily::tail();
  if (kind != "custom") throw SpecError(where + ".kind", "expected head, tail or custom");
  const Json& list = require(v, "components", where);
  if (!list.is_array()) throw SpecError(where + ".components", "expected a list");
  std::vector<ShrinkComponent> parts;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = where + ".components[" + std::to_string(i) + "]";
    only_keys(list[i], {"kind", "anchor", "step", "length"}, at);
    ShrinkComponent c;
    const Json& k = require(list[i], "kind", at);
    if (k == "escaping") {
      c.kind = ShrinkComponent::Kind::escaping;
      c.length = list[i].contains("length") ? extended_at(list[i]["length"], at + ".length") : kInfinity;
    } else if (k != "shrinking") {
      throw SpecError(at + ".kind", "expected shrinking or escaping");
    }
    c.anchor = rational_at(require(list[i], "anchor", at), at + ".anchor");
    c.step = rational_at(require(list[i], "step", at), at + ".step");
    parts.push_back(c);
  }
  try {
    return ShrinkFamily::custom(std::move(parts));
  } catch (const Error& e) {
    throw SpecError(where, e.what());
  }
}

Json dump_family(const ShrinkFamily& fam) {
  Json j;
  switch (fam.kind()) {
    case ShrinkFamily::Kind::head:
      j["kind"] = "head";
      return j;
    case ShrinkFamily::Kind::tail:
      j["kind"] = "tail";
      return j;
    case ShrinkFamily::Kind::custom:
      break;
  }
  j["kind"] = "custom";
  Json list = Json::array();
  for (const auto& c : fam.components()) {
    Json cj;
    cj["kind"] = c.kind == ShrinkComponent::Kind::shrinking ? "shrinking" : "escaping";
    cj["anchor"] = to_string(c.anchor);
    cj["step"] = to_string(c.step);
    if (c.kind == ShrinkComponent::Kind::escaping) cj["length"] = exact_text(c.length, "family.length");
    list.push_back(std::move(cj));
  }
  j["components"] = std::move(list);
  return j;
}

}  // namespace

SpecDocument parse_spec(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError(line_column(text, e.byte), "malformed JSON");
  }
  only_keys(root, {"space", "function", "profile", "f", "g", "family", "schedule", "k_max", "samples", "seed"}, "");
  SpecDocument doc;
  if (root.contains("space")) doc.space = space_at(root["space"], "space");
  const MeasureSpace ms = doc.space ? doc.space->space() : MeasureSpace::non_atomic();
  if (root.contains("function")) doc.function = function_at(root["function"], ms, "function");
  if (root.contains("profile")) doc.profile = profile_at(root["profile"], "profile");
  if (root.contains("f")) doc.f = profile_at(root["f"], "f");
  if (root.contains("g")) doc.g = profile_at(root["g"], "g");
  if (root.contains("family")) doc.family = family_at(root["family"], "family");
  if (root.contains("schedule")) {
    const Json& s = root["schedule"];
    if (s != "geometric" && s != "linear") throw SpecError("schedule", "expected \"geometric\" or \"linear\"");
    doc.schedule = s.get<std::string>();
  }
  if (root.contains("k_max")) doc.k_max = count_at(root["k_max"], "k_max");
  if (root.contains("samples")) doc.samples = count_at(root["samples"], "samples");
  if (root.contains("seed")) doc.seed = count_at(root["seed"], "seed");
  return doc;
}

std::string dump_spec(const SpecDocument& doc) {
  Json root = Json::object();
  if (doc.space) root["space"] = dump_space(*doc.space);
  if (doc.function) root["function"] = dump_function(*doc.function);
  if (doc.profile) root["profile"] = dump_pieces(doc.profile->pieces(), "profile");
  if (doc.f) root["f"] = dump_pieces(doc.f->pieces(), "f");
  if (doc.g) root["g"] = dump_pieces(doc.g->pieces(), "g");
  if (doc.family) root["family"] = dump_family(*doc.family);
  if (doc.schedule) root["schedule"] = *doc.schedule;
  if (doc.k_max) root["k_max"] = *doc.k_max;
  if (doc.samples) root["samples"] = *doc.samples;
  if (doc.seed) root["seed"] = *doc.seed;
  return root.dump(2) + "\n";
}

}  // namespace rikit::cli
