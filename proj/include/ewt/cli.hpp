#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ewt::cli {

/// Exit statuses.
inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kUnknown = 2;
inline constexpr int kInputError = 3;

/// Runs one command line (without the program name). The report goes to
/// `out`, input errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ewt::cli
