#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dmm::cli {

inline constexpr const char* kVersion = "dmm 1.0.0";

/// Runs one command line (without the program name). Certificates go to
/// `out`, the human summary to `err`. Returns 0 (true), 1 (false) or 2
/// (invalid input).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string sha256Hex(const std::string& bytes);

} // namespace dmm::cli
