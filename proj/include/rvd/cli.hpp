#pragma once

// Command-line front end. Exit codes: 0 ok, 1 usage, 2 data errors,
// 3 audit failures or an INVALID verification.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace rvd::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDataError = 2, kAuditFailure = 3 };

/// 64-bit FNV-1a of the bytes.
std::uint64_t fnv1a(std::string_view bytes);

/// Runs one command. `args` excludes the program name; `in` backs "--in -".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace rvd::cli
