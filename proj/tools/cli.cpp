#include "cli.hpp"

#include "rikit/rearrange.hpp"
#include "rikit/verify.hpp"
#include "spec_io.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>

namespace rikit::cli {

namespace {

struct Options {
  std::string spec_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  std::optional<std::uint64_t> k_max;
  std::optional<std::uint64_t> samples;
  bool dump = false;
};

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  auto logger = std::make_shared<spdlog::logger>("rikit", sink);
  logger->set_pattern("[%l] %v");
  const char* env = std::getenv("RIKIT_LOG");
  const std::string level = env ? env : "";
  if (level == "quiet") {
    logger->set_level(spdlog::level::off);
  } else if (level == "info") {
    logger->set_level(spdlog::level::info);
  } else if (level == "debug") {
    logger->set_level(spdlog::level::debug);
  } else {
    logger->set_level(spdlog::level::warn);
    if (!level.empty()) logger->warn("RIKIT_LOG={} not recognised; use quiet, info or debug", level);
  }
  return logger;
}

std::string flag(const ExtendedScalar& x) { return x.approximate() ? "approx" : "exact"; }

template <class T>
const T& need(const std::optional<T>& v, const char* field) {
  if (!v) throw SpecError(field, "missing field required by this command");
  return *v;
}

int cmd_rearrange(const SpecDocument& doc, std::ostream& out) {
  const DecreasingProfile star = rearrangement(need(doc.function, "function"));
  for (const auto& piece : star.pieces()) out << piece.describe() << "\n";
  return 0;
}

int cmd_norm(const SpecDocument& doc, std::ostream& out) {
  const SpaceDescriptor& X = need(doc.space, "space");
  const DecreasingProfile p = doc.function ? rearrangement(*doc.function) : need(doc.profile, "profile");
  const ExtendedScalar n = bar_norm({X}, p);
  out << n.to_string() << " (" << flag(n) << ")\n";
  return 0;
}

int cmd_hlp(const SpecDocument& doc, std::ostream& out) {
  const HlpVerdict v = hlp_compare(need(doc.f, "f"), need(doc.g, "g"));
  if (v.majorized()) {
    out << "majorized";
  } else {
    out << "not majorized; witness t=" << to_string(*v.witness);
  }
  out << (v.approximate ? " (approx)" : "") << "\n";
  return 0;
}

int cmd_ac_test(const SpecDocument& doc, std::ostream& out) {
  const AcVerdict v = ac_two_limit_test(need(doc.space, "space"), need(doc.profile, "profile"));
  out << v.describe() << "\n";
  out << "head limit = " << v.head_limit.to_string() << ", tail limit = " << v.tail_limit.to_string() << "\n";
  return 0;
}

int cmd_ac_simulate(const SpecDocument& doc, const Options& o, std::ostream& out) {
  const std::uint64_t k_max = o.k_max.value_or(doc.k_max.value_or(1024));
  if (k_max == 0) throw SpecError("k_max", "must be at least 1");
  const bool linear = doc.schedule.value_or("geometric") == "linear";
  const auto ks = linear ? linear_schedule(k_max) : geometric_schedule(k_max);
  const ShrinkFamily family = doc.family.value_or(ShrinkFamily::head());
  const auto samples = ac_simulate(need(doc.space, "space"), need(doc.profile, "profile"), family, ks, o.jobs);
  out << "k,norm,flag\n";
  for (const auto& s : samples) out << s.k << "," << s.norm.to_string() << "," << flag(s.norm) << "\n";
  return 0;
}

int cmd_represent(const SpecDocument& doc, std::ostream& out) {
  const IdentityReport r = representation_identity_check(need(doc.space, "space"), need(doc.function, "function"));
  out << "lhs = " << r.lhs.to_string() << " (" << flag(r.lhs) << ")\n";
  out << "rhs = " << r.rhs.to_string() << " (" << flag(r.rhs) << ")\n";
  out << (r.equal ? "equal" : "NOT equal") << "\n";
  return r.equal ? 0 : 1;
}

int cmd_probe_axioms(const SpecDocument& doc, const Options& o, std::ostream& out, spdlog::logger& log) {
  const SpaceDescriptor& X = need(doc.space, "space");
  const std::uint64_t seed = o.seed.value_or(doc.seed.value_or(kDefaultSeed));
  const std::uint64_t n = o.samples.value_or(doc.samples.value_or(100));
  log.info("probing axioms for {} with {} samples, seed {}", X.describe(), n, seed);
  SampleGenerator gen(seed);
  const AxiomReport report = axiom_suite(X, gen.axiom_samples(X.space(), n));
  out << "space: " << X.describe() << "\n";
  for (const auto& v : report.verdicts) {
    out << v.name << ": " << (v.pass ? "pass" : "FAIL");
    if (!v.note.empty()) out << " (" << v.note << ")";
    out << "\n";
  }
  for (const auto& e : report.p5) {
    out << "P5 on [0," << to_string(e.measure) << "): ";
    if (e.unbounded) {
      std::string witness = e.witness->describe();
      std::replace(witness.begin(), witness.end(), '\n', ';');
      out << "unbounded, witness " << witness << "\n";
    } else {
      out << "C >= " << e.constant.to_string() << "\n";
    }
  }
  return report.all_pass() ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out, spdlog::logger& log) {
  VerifyOptions vo;
  vo.seed = o.seed.value_or(kDefaultSeed);
  vo.jobs = o.jobs;
  int failed = 0, index = 0;
  for (const auto& r : run_all_criteria(vo)) {
    ++index;
    log.debug("criterion {} done", index);
    out << (r.pass ? "PASS" : "FAIL") << " criterion " << index << " (" << r.name << "): " << r.detail << "\n";
    failed += r.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}

SpecDocument load(const Options& o) {
  if (o.spec_path.empty()) throw SpecError("--spec", "this command needs a spec file");
  std::ifstream in(o.spec_path);
  if (!in) throw SpecError("--spec", "cannot read " + o.spec_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_spec(buffer.str());
  } catch (const SpecError& e) {
    throw SpecError(o.spec_path + ": " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto log = make_logger(err);
  CLI::App app{"Exact computations in rearrangement-invariant function spaces"};
  app.name(args.empty() ? "rikit" : args.front());
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--spec", o.spec_path, "JSON spec document");
  app.add_option("--out", o.out_path, "Write the report here instead of stdout");
  app.add_option("--seed", o.seed, "Seed for every sample generator");
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--k-max", o.k_max, "Largest k for ac-simulate");
  app.add_option("--samples", o.samples, "Sample count for probe-axioms");
  app.add_flag("--dump-spec", o.dump, "Print the parsed spec document and exit");
  const std::vector<std::pair<std::string, std::string>> commands{
      {"rearrange", "Print the pieces of f*"},
      {"norm", "Evaluate the quasinorm"},
      {"hlp", "Decide f < g in the Hardy-Littlewood-Polya order"},
      {"ac-test", "Two-limit absolute continuity test"},
      {"ac-simulate", "Norms along a shrinking family as CSV"},
      {"represent", "Compare ||f|| with the representation-space norm of f*"},
      {"probe-axioms", "Probe the function-norm axioms on generated samples"},
      {"verify", "Run the acceptance suites"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  std::ostringstream report;
  int code = 0;
  try {
    if (command == "verify") {
      code = cmd_verify(o, report, *log);
    } else {
      SpecDocument doc = load(o);
      if (o.dump) {
        if (o.seed) doc.seed = o.seed;
        if (o.k_max) doc.k_max = o.k_max;
        if (o.samples) doc.samples = o.samples;
        report << dump_spec(doc);
      } else if (command == "rearrange") {
        code = cmd_rearrange(doc, report);
      } else if (command == "norm") {
        code = cmd_norm(doc, report);
      } else if (command == "hlp") {
        code = cmd_hlp(doc, report);
      } else if (command == "ac-test") {
        code = cmd_ac_test(doc, report);
      } else if (command == "ac-simulate") {
        code = cmd_ac_simulate(doc, o, report);
      } else if (command == "represent") {
        code = cmd_represent(doc, report);
      } else {
        code = cmd_probe_axioms(doc, o, report, *log);
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (o.out_path.empty()) {
    out << report.str();
  } else {
    std::ofstream file(o.out_path);
    if (!file) {
      err << "error: --out: cannot write " << o.out_path << "\n";
      return 2;
    }
    file << report.str();
    log->info("wrote {}", o.out_path);
  }
  return code;
}

}  // namespace rikit::cli
