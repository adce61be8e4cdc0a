#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exsplash/finite_field.hpp"

namespace exsplash {

// Outcome of one named check. Checks marked report_only record experimental
// findings (open conjectures); they never influence the overall verdict.
struct CheckResult {
  std::string name;
  bool pass = false;
  bool report_only = false;
  std::string details;
  double seconds = 0.0;
};

struct VerifyOptions {
  unsigned q = 2;
  std::optional<CubicCoeffs> poly{}; // defining cubic override
  std::uint64_t seed = 20250817ull;  // drives every sampled check
  unsigned jobs = 1;                 // worker threads for the censuses
};

// Runs every check applicable to the given order, in a fixed sequence.
// Exhaustive censuses are gated to small q; sampled checks use the seed.
std::vector<CheckResult> run_verification(const VerifyOptions& opt);

// True when every non-report check passed.
bool all_passed(const std::vector<CheckResult>& results);

} // namespace exsplash
