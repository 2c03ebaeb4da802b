#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cutlab/caps.hpp"

namespace cutlab {

// Master seed the shipped verification artifacts are frozen at (verify-all
// and the acceptance runner default to it).
inline constexpr std::uint64_t kDefaultAcceptanceSeed = 20260816;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string summary;
  std::string csv;  // full report for this criterion's run
};

struct AcceptanceResult {
  std::uint64_t seed = 0;
  std::vector<CriterionResult> criteria;
  bool all_pass = false;
};

// Runs the full verification suite (ten checks at their contracted sizes)
// under one master seed; per-task seeds are derived from it. `progress`, when
// set, is invoked once per finished criterion, in order.
AcceptanceResult run_acceptance(std::uint64_t seed, const Caps& caps = {},
                                const std::function<void(const CriterionResult&)>& progress = {});

}  // namespace cutlab
