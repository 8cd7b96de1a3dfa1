#include "rikit/verify.hpp"

#include <chrono>
#include <cstdio>
#include <thread>

int main() {
  rikit::VerifyOptions options;
  options.jobs = std::max(1u, std::thread::hardware_concurrency());
  int failed = 0;
  int index = 0;
  for (const auto& r : rikit::run_all_criteria(options)) {
    ++index;
    std::printf("%s criterion %d (%s): %s\n", r.pass ? "PASS" : "FAIL", index, r.name.c_str(), r.detail.c_str());
    std::fflush(stdout);
    failed += r.pass ? 0 : 1;
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
