#pragma once

// Command-line front end: fit, simulate, coverage, risk.
//
// Exit codes: 0 success, 2 usage or input parse error, 3 sample too small
// for leave-one-out (n < 2). All tables are written as CSV with a header row
// and 17 significant digits.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsest/pmf.hpp"

namespace gsest::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reads "index count" pairs, one per line. '#' starts a comment, indices may
// appear in any order and repeated indices are summed. Throws InputError on
// malformed lines and InsufficientSample when the total count is below 2.
FrequencyVector parse_frequency_data(std::istream& in);

std::string format_real(double x);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsest::cli
