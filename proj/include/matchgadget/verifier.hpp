#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "matchgadget/formula.hpp"
#include "matchgadget/gadget.hpp"

namespace matchgadget {

inline constexpr std::size_t kDefaultUniquenessCap = 10;

struct UniquenessReport {
  /// Exact when full counting was requested; otherwise counting stops at 2.
  std::size_t count = 0;
  /// Present exactly when count == 1.
  std::optional<Matching> matching;
};

/// Throws CapExceeded when full_count is set and the graph has at least `cap`
/// perfect matchings.
UniquenessReport verify_unique_pm(const Graph& g, std::size_t cap = kDefaultUniquenessCap, bool full_count = false);

/// true iff m holds l's interior edge, false iff it holds r's.
/// Throws MalformedCodingGraph when both or neither do.
bool decode_truth(const CodingGraph& g, const Matching& m);

/// Uniqueness check plus decode; throws MalformedCodingGraph when the
/// perfect matching is not unique.
bool decode_coding_graph(const CodingGraph& g);

/// Decodes each component of a set coding.
std::vector<bool> decode_set(const SetCoding& s);

/// Boolean semantics; EXISTS is disjunction. Throws UnboundAtom / EmptyList.
bool eval_formula(const Formula& f, std::span<const bool> env);
bool eval_formula(const Formula& f, const std::vector<bool>& env);

struct RoundtripReport {
  std::size_t pm_count = 0;
  std::optional<bool> decoded;
  bool eval = false;
  bool agree = false;

  friend bool operator==(const RoundtripReport&, const RoundtripReport&) = default;
};

/// Compiles f with atoms realized as TRUE / NOT(TRUE) per env, checks
/// uniqueness, decodes and compares against eval_formula.
RoundtripReport roundtrip_check(const Formula& f, const std::vector<bool>& env);

struct FormulaCase {
  Formula formula;
  std::vector<bool> env;
};

/// roundtrip_check over a corpus, one formula per OpenMP work item.
std::vector<RoundtripReport> verify_corpus(std::span<const FormulaCase> corpus);

namespace reference {

std::vector<RoundtripReport> verify_corpus(std::span<const FormulaCase> corpus);

}  // namespace reference

}  // namespace matchgadget
