#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace commlab::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kParseError = 2;

/// Runs one command line (without the program name). Results go to `out` as
/// JSON; failures go to `err` as {"error": code, "detail": text}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Report of a named demo; "pass" is true iff every check matched. Throws
/// UnknownDemo.
io::Json run_demo(const std::string& name, std::uint64_t seed);

}  // namespace commlab::cli
