#pragma once

#include "rikit/generators.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rikit {

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
};

CriterionResult check_representation_identity(const VerifyOptions& options);
CriterionResult check_hardy_littlewood(const VerifyOptions& options);
CriterionResult check_rearrangement_oracle(const VerifyOptions& options);
CriterionResult check_hlp_probe(const VerifyOptions& options);
CriterionResult check_transfer_integrals(const VerifyOptions& options);
CriterionResult check_dilation(const VerifyOptions& options);
CriterionResult check_two_limit_simulation(const VerifyOptions& options);
CriterionResult check_marcinkiewicz_classification(const VerifyOptions& options);
CriterionResult check_order_consistency(const VerifyOptions& options);
CriterionResult check_axiom_harness(const VerifyOptions& options);

/// All ten checks in order.
std::vector<CriterionResult> run_all_criteria(const VerifyOptions& options);

}  // namespace rikit
