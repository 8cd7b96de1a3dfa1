#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_util.hpp"

#include "cli.hpp"
#include "spec_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace testing;
using rikit::cli::parse_spec;
using rikit::cli::SpecError;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "rikit");
  std::ostringstream out, err;
  const int code = rikit::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class SpecFile {
 public:
  explicit SpecFile(const std::string& text) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("rikit_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json"))
                .string();
    std::ofstream(path_) << text;
  }
  ~SpecFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

Result run_spec(const std::string& command, const std::string& spec, std::vector<std::string> extra = {}) {
  const SpecFile file(spec);
  std::vector<std::string> args{command, "--spec", file.path()};
  args.insert(args.end(), extra.begin(), extra.end());
  return run_cli(args);
}

const char* kWeakClip = R"({
  "space": {"kind": "weak_marcinkiewicz", "phi": "t"},
  "profile": [
    {"from": "0", "to": "1", "coeff": "1"},
    {"from": "1", "to": "inf", "coeff": "1", "exp": "-1"}
  ]
})";

}  // namespace

TEST_CASE("norm prints the exactness flag") {
  const Result r = run_spec("norm", R"({"space": {"kind": "lp", "p": "2"},
                                        "profile": [{"from": "0", "to": "4", "coeff": "1"}]})");
  CHECK(r.code == 0);
  CHECK(r.out == "2 (exact)\n");

  const Result f = run_spec("norm", R"({"space": {"kind": "l1_cap_linf"},
                                        "function": {"steps": [{"from": "3", "to": "4", "value": "2"}]}})");
  // f* = 2·χ[0,1): sup plus integral.
  CHECK(f.out == "4 (exact)\n");
}

TEST_CASE("hlp prints the witness") {
  const Result r = run_spec("hlp", R"({"f": [{"from": "0", "to": "1", "coeff": "2"}],
                                       "g": [{"from": "0", "to": "3", "coeff": "1"}]})");
  CHECK(r.code == 0);
  CHECK(r.out == "not majorized; witness t=1\n");
}

TEST_CASE("ac-test prints the verdict") {
  const Result r = run_spec("ac-test", kWeakClip);
  CHECK(r.code == 0);
  CHECK(r.out.rfind("notAC (tail limit = 1)\n", 0) == 0);
  CHECK(r.out.find("head limit = 0, tail limit = 1") != std::string::npos);
}

TEST_CASE("rearrange prints f* pieces") {
  const Result r = run_spec("rearrange", R"({"space": {"kind": "lp", "p": "1"},
    "function": {"steps": [{"from": "0", "to": "2", "value": "2"}, {"from": "3", "to": "4", "value": "5"}]}})");
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) ++n;
  CHECK(n == 3);
}

TEST_CASE("ac-simulate writes CSV") {
  // Head family by default: sup of t on [0, 1/k).
  const Result r = run_spec("ac-simulate", kWeakClip, {"--k-max", "8"});
  CHECK(r.code == 0);
  CHECK(r.out == "k,norm,flag\n1,1,exact\n2,1/2,exact\n4,1/4,exact\n8,1/8,exact\n");

  std::string tail_spec = kWeakClip;
  tail_spec.insert(tail_spec.rfind('}'), R"(, "family": {"kind": "tail"})");
  const Result flat = run_spec("ac-simulate", tail_spec, {"--k-max", "8"});
  CHECK(flat.out == "k,norm,flag\n1,1,exact\n2,1,exact\n4,1,exact\n8,1,exact\n");

  const Result head = run_spec("ac-simulate", R"({"space": {"kind": "lp", "p": "1"},
    "profile": [{"from": "0", "to": "1", "coeff": "2"}], "family": {"kind": "head"}, "schedule": "linear", "k_max": 3})");
  CHECK(head.out == "k,norm,flag\n1,2,exact\n2,1,exact\n3,2/3,exact\n");
}

TEST_CASE("represent prints both sides") {
  const Result r = run_spec("represent", R"({"space": {"kind": "lp", "p": "2", "measure": {"type": "atomic", "beta": "1"}},
    "function": {"steps": [{"from": "0", "to": "1", "value": "3"}, {"from": "1", "to": "2", "value": "4"}]}})");
  CHECK(r.code == 0);
  CHECK(r.out == "lhs = 5 (exact)\nrhs = 5 (exact)\nequal\n");
}

TEST_CASE("probe-axioms exits 1 on a failed axiom and is deterministic") {
  const std::string spec = R"({"space": {"kind": "weak_marcinkiewicz", "phi": "t"}, "samples": 20})";
  const Result a = run_spec("probe-axioms", spec, {"--seed", "7"});
  const Result b = run_spec("probe-axioms", spec, {"--seed", "7", "--jobs", "3"});
  CHECK(a.code == 1);
  CHECK(a.out == b.out);
  CHECK(a.out.find("P5: FAIL") != std::string::npos);

  const Result l1 = run_spec("probe-axioms", R"({"space": {"kind": "lp", "p": "1"}})", {"--samples", "30"});
  CHECK(l1.code == 0);
}

TEST_CASE("malformed specs exit 2 naming the field") {
  Result r = run_spec("norm", R"({"space": {"kind": "lp", "p": "2"},
                                   "profile": [{"from": "0", "to": "1", "coeff": "1"}, {"from": "1", "to": "2", "coeff": "3"}]})");
  CHECK(r.code == 2);
  CHECK(r.err.find("profile") != std::string::npos);

  r = run_spec("norm", R"({"space": {"kind": "lp", "p": 0.5}, "profile": []})");
  CHECK(r.code == 2);
  CHECK(r.err.find("space.p") != std::string::npos);

  r = run_spec("norm", R"({"space": {"kind": "lp", "p": "2"}, "profile": [{"from": "0", "to": "1", "coef": "1"}]})");
  CHECK(r.code == 2);
  CHECK(r.err.find("profile[0]") != std::string::npos);

  r = run_spec("norm", "{\"space\": \n {\"kind\": }");
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);

  r = run_spec("hlp", R"({"f": [{"from": "0", "to": "1", "coeff": "1"}]})");
  CHECK(r.code == 2);
  CHECK(r.err.find("g") != std::string::npos);

  r = run_cli({"norm", "--spec", "/nonexistent/spec.json"});
  CHECK(r.code == 2);
  r = run_cli({"frobnicate"});
  CHECK(r.code == 2);
  r = run_cli({"--help"});
  CHECK(r.code == 0);
}

TEST_CASE("dump-spec round-trips") {
  const std::vector<std::string> specs{
      kWeakClip,
      R"({"space": {"kind": "lp", "p": "inf", "measure": {"type": "atomic", "beta": "1/2", "count": 7}},
          "function": {"steps": [{"from": "0", "to": "1", "value": "3/2"}]}, "seed": 5})",
      R"({"space": {"kind": "weak_marcinkiewicz", "phi": "t^2/3", "measure": {"type": "nonatomic", "total": "3"}},
          "f": [{"from": "0", "to": "1", "coeff": "1/2", "exp": "-1/2"}],
          "g": [{"from": "0", "to": "inf", "coeff": "3", "exp": "-2", "scale": "1", "shift": "1"}],
          "family": {"kind": "custom", "components": [{"kind": "shrinking", "anchor": "2", "step": "1"},
                                                      {"kind": "escaping", "anchor": "0", "step": "1/2", "length": "1"}]},
          "schedule": "linear", "k_max": 64, "samples": 10})"};
  for (const auto& spec : specs) {
    const Result dumped = run_spec("norm", spec, {"--dump-spec"});
    REQUIRE(dumped.code == 0);
    CHECK(parse_spec(dumped.out) == parse_spec(spec));
    const Result again = run_spec("norm", dumped.out, {"--dump-spec"});
    CHECK(again.out == dumped.out);
  }
  const Result seeded = run_spec("norm", kWeakClip, {"--dump-spec", "--seed", "99"});
  CHECK(parse_spec(seeded.out).seed == std::optional<std::uint64_t>(99));
}

TEST_CASE("--out writes the report to a file") {
  const SpecFile spec(R"({"space": {"kind": "lp", "p": "2"}, "profile": [{"from": "0", "to": "4", "coeff": "1"}]})");
  const std::string out_path = spec.path() + ".out";
  const Result r = run_cli({"norm", "--spec", spec.path(), "--out", out_path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out_path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == "2 (exact)\n");
  std::remove(out_path.c_str());
}

TEST_CASE("parse_spec reports positions") {
  try {
    parse_spec("{\n  \"seed\": 1,\n  \"k_max\": \"x\"\n}");
    FAIL("accepted a string k_max");
  } catch (const SpecError& e) {
    CHECK(e.where() == "k_max");
  }
  CHECK_THROWS_AS(parse_spec(R"({"schedule": "cubic"})"), SpecError);
  CHECK_THROWS_AS(parse_spec(R"({"bogus": 1})"), SpecError);
}
