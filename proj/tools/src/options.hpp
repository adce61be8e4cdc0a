#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exsplash/finite_field.hpp"

namespace exsplash::cli {

// Parsed command-line configuration shared by every subcommand.
struct Options {
  unsigned q = 2;
  std::vector<unsigned> poly_digits; // empty, or exactly 3 values t0,t1,t2
  std::uint64_t seed = 20250817ull;
  unsigned jobs = 0; // 0 = use available parallelism
  std::string format = "text";
  std::string out;  // empty = stdout
  std::string line; // splash subcommand: "l,m,n" in element digits
};

// Exit codes shared by all subcommands.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;   // an asserted property does not hold
inline constexpr int kExitConfig = 2; // invalid configuration or input

// Validated polynomial override; throws Error(BadParameters) on bad digits.
std::optional<CubicCoeffs> poly_of(const Options& opt);

// Effective worker count.
unsigned jobs_of(const Options& opt);

// Writes the artifact to opt.out (or stdout). Returns kExitPass or
// kExitConfig when the file cannot be written.
int write_artifact(const Options& opt, const std::string& payload);

// Replaces CSV-hostile characters in free-form detail text.
std::string csv_safe(std::string s);

} // namespace exsplash::cli
