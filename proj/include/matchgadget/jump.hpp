#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "matchgadget/gadget.hpp"

namespace matchgadget {

/// halts(e, sigma, n): program e, run on oracle prefix sigma, converges
/// within n steps. Expected to be monotone in n and to depend only on sigma.
using HaltingOracle = std::function<bool(std::size_t e, const std::vector<bool>& sigma, std::size_t steps)>;

/// One row of an oracle table: program e halts within min_steps on every
/// oracle string extending `prefix` ('0'/'1' characters).
struct OracleEntry {
  std::size_t e = 0;
  std::string prefix;
  std::size_t min_steps = 0;

  friend bool operator==(const OracleEntry&, const OracleEntry&) = default;
};

/// halts(e, sigma, n) iff some row has the same e, a prefix of sigma, and
/// min_steps <= n. Monotone in n by construction. Throws MalformedInput for
/// prefix characters other than '0'/'1'.
HaltingOracle oracle_from_table(std::vector<OracleEntry> table);

inline constexpr std::size_t kMaxJumpContext = 12;

/// Codes "exists n' < bound such that, for every sigma of length |context|,
/// (sigma is the coded prefix) -> halts(e, sigma, n')". Oracle outcomes become
/// TRUE / NOT(TRUE) leaves chosen at compile time.
/// Throws ContextTooLarge (|context| > 12) and PreconditionViolated (bound == 0).
CodingGraph compile_jump_query(std::span<const CodingGraph> context, std::size_t e, const HaltingOracle& oracle,
                               std::size_t bound);

/// Level 0 codes x0; level j+1 codes {e < width : the bounded jump query for
/// e against level j decodes true}.
std::vector<SetCoding> jump_hierarchy(const std::vector<bool>& x0, std::size_t levels, const HaltingOracle& oracle,
                                      std::size_t width, std::size_t bound);

}  // namespace matchgadget
