#pragma once

// Command-line front end. `run` is the whole program minus process exit so
// tests can drive it in-process.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace coxdiag::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

inline constexpr const char* kBudgetEnv = "COXDIAG_BUDGET";

// Either a node count ("1000000") or wall time ("600s", "1.5s").
struct Budget {
  std::optional<std::uint64_t> nodes;
  std::optional<double> seconds;
};

// Throws std::invalid_argument on a malformed budget.
Budget parse_budget(std::string_view text);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxdiag::cli
