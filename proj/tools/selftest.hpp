#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace pdawg_cli {

struct SelftestOptions {
  std::size_t max_len = 6;
  std::uint64_t seed = 1;
  std::vector<std::string> suites;
};

struct SelftestFailure {
  std::string suite;
  std::string property;
  std::string witness;  // smallest failing input found
  std::string detail;
};

const std::vector<std::string>& all_suites();

/// Runs the suites in order and stops at the first failure.
std::optional<SelftestFailure> run_selftest(const SelftestOptions& opt, std::ostream& log);

}  // namespace pdawg_cli
