#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "matchgadget/graph.hpp"
#include "matchgadget/matching.hpp"

namespace matchgadget {

enum class ConditionMode { Definitional, Fast };

struct AnalysisLimits {
  std::size_t matching_cap = kDefaultMatchingCap;
  /// Definitional checks refuse larger graphs unless matching_cap was raised
  /// above the default.
  std::size_t definitional_vertex_limit = 12;
};

/// Definitional: every matching has an augmenting path from every uncovered
/// vertex. Fast: a perfect matching exists. Throws CapExceeded.
bool check_condition_A(const Graph& g, ConditionMode mode = ConditionMode::Fast, const AnalysisLimits& limits = {});

/// No uncovered vertex starts a proper augmenting path. Throws NotAMatching
/// when m is not a matching of g.
bool is_independent(const Graph& g, const Matching& m);

/// Greedy over vertices in id order: at each step adopt the least independent
/// matching whose support contains the current support plus that vertex.
Matching maximal_independent_matching(const Graph& g, const AnalysisLimits& limits = {});

/// Maximum cardinality matching; on finite graphs this maximizes support.
Matching maximal_support_matching(const Graph& g);

bool has_nonempty_independent_subgraph(const Graph& g, const AnalysisLimits& limits = {});

struct StarReport {
  bool hypothesis_holds = false;
  bool conclusion_holds = false;

  friend bool operator==(const StarReport&, const StarReport&) = default;
};

StarReport check_star(const Graph& g, const AnalysisLimits& limits = {});

/// perfect_matching per graph; graphs are processed in parallel.
std::vector<std::optional<Matching>> sequential_pm(std::span<const Graph> graphs);

/// Union of the matchings, retagged into disjoint_union(graphs).
/// Throws NotPerfectComponent.
Matching collection_pm(std::span<const Graph> graphs, std::span<const Matching> matchings);

/// Condition (A) on g minus V(m). Throws PreconditionViolated unless g
/// satisfies condition (A) and m is independent.
bool condition_A_preserved_after_independent_removal(const Graph& g, const Matching& m,
                                                     ConditionMode mode = ConditionMode::Fast,
                                                     const AnalysisLimits& limits = {});

struct AnalysisReport {
  /// Empty when the definitional check exceeds its limits.
  std::optional<bool> condition_A_definitional;
  bool condition_A_fast = false;
  std::optional<bool> independent;
  Matching mim;
  Matching mm;
  StarReport star;
};

AnalysisReport analyze_graph(const Graph& g, const std::optional<Matching>& m, const AnalysisLimits& limits = {});

namespace reference {

std::vector<std::optional<Matching>> sequential_pm(std::span<const Graph> graphs);

}  // namespace reference

}  // namespace matchgadget
