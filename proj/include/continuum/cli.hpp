#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace continuum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInternalError = 2;

/// Entry point behind the `continuum` binary. `args` excludes the program
/// name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace continuum::cli
