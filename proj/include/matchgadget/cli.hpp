#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace matchgadget::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitMalformed = 2;

/// Runs one subcommand. `args` excludes the program name. "-" as a path
/// means `in` (inputs) or `out` (outputs). `budget` is the parsed value of
/// MATCHGADGET_BUDGET, when set.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
                std::optional<std::string> budget = std::nullopt);

}  // namespace matchgadget::cli
