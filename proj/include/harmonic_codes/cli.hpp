#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace harmonic_codes::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDomainFailure = 1;
inline constexpr int kIoFailure = 2;
inline constexpr int kUsage = 64;

/// Runs one command line (without the program name). `in`/`out` stand in
/// for stdin/stdout when no file is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace harmonic_codes::cli
