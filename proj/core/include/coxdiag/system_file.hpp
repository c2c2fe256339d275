#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "coxdiag/coxeter.hpp"

namespace coxdiag {

// Line-oriented system definition:
//   rank N
//   gen <index> <name>
//   m <name> <name> <int|inf>
// with `#` comments. Every unordered pair must be given exactly once.
// Errors are ParseError with the offending line and column.
CoxeterSystem parse_system(std::string_view text);
CoxeterSystem parse_system_file(const std::filesystem::path& path);

std::string format_system(const CoxeterSystem& sys);

}  // namespace coxdiag
