#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "suptrop/lie.hpp"
#include "suptrop/selfcheck/properties.hpp"

namespace suptrop::cli {

enum class Command { Check, Triangularize, Certificate, Lcs, Spectrum, Bracket, Power, Selftest };
enum class Format { Human, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotNilpotent = 1;
inline constexpr int kExitUsage = 2;

struct JobSpec {
  Command command = Command::Check;
  std::vector<std::string> inputs;
  Format format = Format::Human;
  std::size_t max_depth = 10;
  std::size_t cap = kDefaultLevelCap;
  std::uint64_t seed = selfcheck::kDefaultSeed;
  unsigned long long exponent = 2;
  /// Empty: write the report to `out`.
  std::string output;
};

/// Runs a validated job. Diagnostics go to `err`.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

/// Full command line, program name first.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace suptrop::cli
