#include "matchgadget/analysis.hpp"

#include <algorithm>
#include <exception>

namespace matchgadget {
namespace {

MatchingList all_matchings(const Graph& g, const AnalysisLimits& limits) {
  MatchingList list = enumerate_matchings(g, limits.matching_cap);
  if (list.truncated) {
    throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(limits.matching_cap) + " matchings");
  }
  return list;
}

bool includes(const std::vector<Vertex>& super, const std::vector<Vertex>& sub) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace

bool check_condition_A(const Graph& g, ConditionMode mode, const AnalysisLimits& limits) {
  if (mode == ConditionMode::Fast) return perfect_matching(g).has_value();

  if (g.vertex_count() > limits.definitional_vertex_limit && limits.matching_cap <= kDefaultMatchingCap) {
    throw Error(ErrorCode::CapExceeded, "definitional condition (A) refuses graphs above " +
                                            std::to_string(limits.definitional_vertex_limit) + " vertices");
  }
  for (const Matching& m : all_matchings(g, limits).matchings) {
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
      if (!m.covers(s) && !find_augmenting_path(g, m, s, false)) return false;
    }
  }
  return true;
}

bool is_independent(const Graph& g, const Matching& m) {
  if (!m.is_matching_of(g)) throw Error(ErrorCode::NotAMatching, "matching uses edges outside the graph");
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (!m.covers(s) && find_augmenting_path(g, m, s, true)) return false;
  }
  return true;
}

Matching maximal_independent_matching(const Graph& g, const AnalysisLimits& limits) {
  struct Candidate {
    const Matching* matching;
    std::vector<Vertex> support;
  };
  MatchingList list = all_matchings(g, limits);
  std::vector<Candidate> independent;
  for (const Matching& m : list.matchings) {
    if (is_independent(g, m)) independent.push_back({&m, m.support()});
  }

  Matching current;
  std::vector<Vertex> support;
  for (Vertex gn = 0; gn < g.vertex_count(); ++gn) {
    std::vector<Vertex> wanted = support;
    wanted.insert(std::upper_bound(wanted.begin(), wanted.end(), gn), gn);
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
    for (const Candidate& c : independent) {
      if (includes(c.support, wanted)) {
        current = *c.matching;
        support = c.support;
        break;
      }
    }
  }
  return current;
}

Matching maximal_support_matching(const Graph& g) { return maximum_matching(g); }

bool has_nonempty_independent_subgraph(const Graph& g, const AnalysisLimits& limits) {
  for (const Matching& m : all_matchings(g, limits).matchings) {
    if (!m.empty() && is_independent(g, m)) return true;
  }
  return false;
}

StarReport check_star(const Graph& g, const AnalysisLimits& limits) {
  StarReport report;
  report.hypothesis_holds = check_condition_A(g) && !has_nonempty_independent_subgraph(g, limits);
  report.conclusion_holds = g.vertex_count() == 0;
  return report;
}

std::vector<std::optional<Matching>> sequential_pm(std::span<const Graph> graphs) {
  std::vector<std::optional<Matching>> out(graphs.size());
  std::vector<std::exception_ptr> errors(graphs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(graphs.size()); ++i) {
    try {
      out[i] = perfect_matching(graphs[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

Matching collection_pm(std::span<const Graph> graphs, std::span<const Matching> matchings) {
  if (graphs.size() != matchings.size()) {
    throw Error(ErrorCode::NotPerfectComponent, "expected one matching per graph");
  }
  std::vector<Vertex> offsets;
  Vertex next = 0;
  for (const Graph& g : graphs) {
    offsets.push_back(next);
    next += static_cast<Vertex>(g.vertex_count());
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!matchings[i].is_perfect_for(graphs[i])) {
      throw Error(ErrorCode::NotPerfectComponent, "matching " + std::to_string(i) + " is not perfect for its graph");
    }
    for (const Edge& e : matchings[i].edges()) edges.emplace_back(e.u + offsets[i], e.v + offsets[i]);
  }
  return Matching(std::move(edges));
}

bool condition_A_preserved_after_independent_removal(const Graph& g, const Matching& m, ConditionMode mode,
                                                     const AnalysisLimits& limits) {
  if (!check_condition_A(g, mode, limits)) {
    throw Error(ErrorCode::PreconditionViolated, "graph does not satisfy condition (A)");
  }
  if (!is_independent(g, m)) throw Error(ErrorCode::PreconditionViolated, "matching is not independent");
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!m.covers(v)) rest.push_back(v);
  }
  return check_condition_A(induced_subgraph(g, rest), mode, limits);
}

AnalysisReport analyze_graph(const Graph& g, const std::optional<Matching>& m, const AnalysisLimits& limits) {
  AnalysisReport report;
  report.condition_A_fast = check_condition_A(g, ConditionMode::Fast, limits);
  try {
    report.condition_A_definitional = check_condition_A(g, ConditionMode::Definitional, limits);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
  }
  if (m) report.independent = is_independent(g, *m);
  report.mim = maximal_independent_matching(g, limits);
  report.mm = maximal_support_matching(g);
  report.star = check_star(g, limits);
  return report;
}

namespace reference {

std::vector<std::optional<Matching>> sequential_pm(std::span<const Graph> graphs) {
  std::vector<std::optional<Matching>> out;
  out.reserve(graphs.size());
  for (const Graph& g : graphs) out.push_back(perfect_matching(g));
  return out;
}

}  // namespace reference

}  // namespace matchgadget
