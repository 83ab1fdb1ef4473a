#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "matchgadget/graph.hpp"

namespace matchgadget {

inline constexpr std::size_t kDefaultMatchingCap = 100'000;

struct MatchingList {
  std::vector<Matching> matchings;
  /// Set when the graph has more than `cap` matchings; the list then holds
  /// the first `cap` in enumeration order.
  bool truncated = false;
};

/// All matchings of g (including the empty one), ordered lexicographically by
/// canonical edge list. Top-level branches are explored in parallel; the
/// result is identical to reference::enumerate_matchings.
MatchingList enumerate_matchings(const Graph& g, std::size_t cap = kDefaultMatchingCap);

struct PerfectMatchingCount {
  std::size_t count = 0;
  /// The first perfect matching found, when count >= 1.
  std::optional<Matching> first;
  /// Counting stopped at the cap; `count` is then a lower bound.
  bool capped = false;
};

/// Counts perfect matchings by forced-move propagation plus branching on a
/// least-degree vertex. Stops once `cap` matchings have been seen.
PerfectMatchingCount count_perfect_matchings(const Graph& g, std::size_t cap);

/// Maximum-cardinality matching by Edmonds' blossom contraction.
Matching maximum_matching(const Graph& g);

std::optional<Matching> perfect_matching(const Graph& g);

/// Exhaustive alternating depth-first search from an uncovered vertex s for a
/// path ending at an uncovered vertex, with at most max_len edges (defaults to
/// |V|). With proper_only the path must use at least one edge of m.
/// Throws CoveredStart.
std::optional<Path> find_augmenting_path(const Graph& g, const Matching& m, Vertex s, bool proper_only,
                                         std::optional<std::size_t> max_len = std::nullopt);

/// Node <a_0, ..., a_n> of the tree of partial matchings: a_i is the partner
/// of vertex i.
struct PartialMatchingNode {
  std::vector<Vertex> partners;

  /// Collapsed edge set {{i, a_i}}.
  Matching as_matching() const;
  friend bool operator==(const PartialMatchingNode&, const PartialMatchingNode&) = default;
};

/// Membership test for the tree: every {i, a_i} is an edge and the collapsed
/// edge set is a matching.
bool is_tree_node(const LazyGraph& lazy, std::span<const Vertex> partners);

/// Backtracking search for a depth n+1 node, least partner first, with
/// branching limited by the bound function. Throws NoNode or BudgetExceeded.
PartialMatchingNode bounded_pm_search(const LazyGraph& lazy, std::size_t n,
                                      std::size_t budget = kDefaultProbeBudget);

namespace reference {

/// Serial enumeration kept as the reference for the parallel kernel.
MatchingList enumerate_matchings(const Graph& g, std::size_t cap = kDefaultMatchingCap);

}  // namespace reference

}  // namespace matchgadget
