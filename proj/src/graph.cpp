#include "matchgadget/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace matchgadget {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::OutOfRangeVertex: return "OutOfRangeVertex";
    case ErrorCode::NotAMatching: return "NotAMatching";
    case ErrorCode::NotAugmenting: return "NotAugmenting";
    case ErrorCode::EnumerationDiverges: return "EnumerationDiverges";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::CoveredStart: return "CoveredStart";
    case ErrorCode::NoNode: return "NoNode";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotAPath: return "NotAPath";
    case ErrorCode::RootUncovered: return "RootUncovered";
    case ErrorCode::Stuck: return "Stuck";
    case ErrorCode::NotPrefixClosed: return "NotPrefixClosed";
    case ErrorCode::NotPerfectComponent: return "NotPerfectComponent";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::MalformedCodingGraph: return "MalformedCodingGraph";
    case ErrorCode::EmptyList: return "EmptyList";
    case ErrorCode::UnboundAtom: return "UnboundAtom";
    case ErrorCode::ContextTooLarge: return "ContextTooLarge";
    case ErrorCode::EvenLength: return "EvenLength";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnbalancedParens: return "UnbalancedParens";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a >= adjacency_.size() || b >= adjacency_.size()) return false;
  const auto& n = adjacency_[a];
  return std::binary_search(n.begin(), n.end(), b);
}

Graph make_graph(std::size_t vertex_count, std::span<const Edge> edge_list) {
  Graph g;
  g.adjacency_.resize(vertex_count);
  g.edges_.reserve(edge_list.size());
  for (const Edge& e : edge_list) {
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    if (e.v >= vertex_count) {
      throw Error(ErrorCode::OutOfRangeVertex,
                  "vertex " + std::to_string(e.v) + " >= vertex count " + std::to_string(vertex_count));
    }
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& n : g.adjacency_) std::sort(n.begin(), n.end());
  return g;
}

Graph make_graph(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edge_list) {
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (auto [a, b] : edge_list) {
    if (a == b) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(a));
    edges.emplace_back(a, b);
  }
  return make_graph(vertex_count, std::span<const Edge>(edges));
}

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  std::vector<Vertex> seen;
  seen.reserve(edges_.size() * 2);
  for (const Edge& e : edges_) {
    seen.push_back(e.u);
    seen.push_back(e.v);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw Error(ErrorCode::NotAMatching, "edges share a vertex");
  }
}

bool Matching::contains(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

bool Matching::covers(Vertex v) const { return mate(v).has_value(); }

std::optional<Vertex> Matching::mate(Vertex v) const {
  for (const Edge& e : edges_) {
    if (e.touches(v)) return e.other(v);
  }
  return std::nullopt;
}

std::vector<Vertex> Matching::support() const {
  std::vector<Vertex> s;
  s.reserve(edges_.size() * 2);
  for (const Edge& e : edges_) {
    s.push_back(e.u);
    s.push_back(e.v);
  }
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<std::optional<Vertex>> Matching::mate_table(std::size_t n) const {
  std::vector<std::optional<Vertex>> t(n);
  for (const Edge& e : edges_) {
    if (e.u < n) t[e.u] = e.v;
    if (e.v < n) t[e.v] = e.u;
  }
  return t;
}

bool Matching::is_matching_of(const Graph& g) const {
  return std::all_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return g.has_edge(e); });
}

bool Matching::is_perfect_for(const Graph& g) const {
  return is_matching_of(g) && edges_.size() * 2 == g.vertex_count();
}

bool Path::is_simple_path_in(const Graph& g) const {
  std::vector<Vertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    if (!g.adjacent(vertices[i], vertices[i + 1])) return false;
  }
  return std::all_of(vertices.begin(), vertices.end(), [&](Vertex v) { return v < g.vertex_count(); });
}

Matching augment(const Graph& g, const Matching& m, const Path& p) {
  if (p.vertices.size() < 2 || !p.is_simple_path_in(g)) {
    throw Error(ErrorCode::NotAugmenting, "not a simple path of length >= 1 in the graph");
  }
  if (!m.is_matching_of(g)) throw Error(ErrorCode::NotAMatching, "matching uses edges outside the graph");
  // Forward: P is M-augmenting. Undo: P was the augmenting path of M's
  // predecessor, so its first and last edges lie in M.
  bool undo = m.contains(Edge(p.vertices[0], p.vertices[1]));
  if (!undo && (m.covers(p.vertices.front()) || m.covers(p.vertices.back()))) {
    throw Error(ErrorCode::NotAugmenting, "path endpoints must be uncovered");
  }
  if (p.length() % 2 == 0) throw Error(ErrorCode::NotAugmenting, "augmenting paths have odd length");
  std::vector<Edge> path_edges;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    Edge e(p.vertices[i], p.vertices[i + 1]);
    if (m.contains(e) != ((i % 2 == 1) != undo)) throw Error(ErrorCode::NotAugmenting, "path does not alternate");
    path_edges.push_back(e);
  }
  std::sort(path_edges.begin(), path_edges.end());
  std::vector<Edge> result;
  std::set_symmetric_difference(m.edges().begin(), m.edges().end(), path_edges.begin(), path_edges.end(),
                                std::back_inserter(result));
  return Matching(std::move(result));
}

DisjointUnion disjoint_union(std::span<const Graph> graphs) {
  DisjointUnion out;
  std::vector<Edge> edges;
  Vertex offset = 0;
  for (std::size_t k = 0; k < graphs.size(); ++k) {
    out.offsets.push_back(offset);
    for (Vertex v = 0; v < graphs[k].vertex_count(); ++v) out.origin.emplace_back(k, v);
    for (const Edge& e : graphs[k].edges()) edges.emplace_back(e.u + offset, e.v + offset);
    offset += static_cast<Vertex>(graphs[k].vertex_count());
  }
  out.graph = make_graph(offset, std::span<const Edge>(edges));
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  constexpr Vertex kAbsent = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> index(g.vertex_count(), kAbsent);
  for (std::size_t i = 0; i < keep.size(); ++i) index.at(keep[i]) = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u] != kAbsent && index[e.v] != kAbsent) edges.emplace_back(index[e.u], index[e.v]);
  }
  return make_graph(keep.size(), std::span<const Edge>(edges));
}

LazyGraph LazyGraph::infinite_path() {
  LazyGraph l;
  l.adjacent = [](Vertex a, Vertex b) { return a + 1 == b || b + 1 == a; };
  l.neighbor = [](Vertex v, std::size_t k) -> std::optional<Vertex> {
    if (v == 0) return k == 0 ? std::optional<Vertex>(1) : std::nullopt;
    if (k == 0) return v - 1;
    if (k == 1) return v + 1;
    return std::nullopt;
  };
  l.bound = [](Vertex v) { return v + 1; };
  return l;
}

LazyGraph LazyGraph::star(std::optional<Vertex> leaves) {
  LazyGraph l;
  l.adjacent = [leaves](Vertex a, Vertex b) {
    if (a == b || (a != 0 && b != 0)) return false;
    Vertex leaf = a == 0 ? b : a;
    return !leaves || leaf <= *leaves;
  };
  l.neighbor = [leaves](Vertex v, std::size_t k) -> std::optional<Vertex> {
    if (v != 0) {
      if (leaves && v > *leaves) return std::nullopt;
      return k == 0 ? std::optional<Vertex>(0) : std::nullopt;
    }
    if (leaves && k >= *leaves) return std::nullopt;
    return static_cast<Vertex>(k + 1);
  };
  if (leaves) {
    Vertex cap = *leaves;
    l.bound = [cap](Vertex v) { return v == 0 ? cap : Vertex{0}; };
  }
  return l;
}

LazyGraph LazyGraph::from_graph(const Graph& g) {
  LazyGraph l;
  l.adjacent = [g](Vertex a, Vertex b) { return g.adjacent(a, b); };
  l.neighbor = [g](Vertex v, std::size_t k) -> std::optional<Vertex> {
    if (v >= g.vertex_count()) return std::nullopt;
    auto n = g.neighbors(v);
    return k < n.size() ? std::optional<Vertex>(n[k]) : std::nullopt;
  };
  l.bound = [g](Vertex v) -> Vertex {
    if (v >= g.vertex_count() || g.degree(v) == 0) return 0;
    return g.neighbors(v).back();
  };
  return l;
}

Graph truncate(const LazyGraph& lazy, Vertex vertex_bound, std::size_t budget) {
  std::vector<Edge> edges;
  std::size_t probes = 0;
  for (Vertex v = 0; v < vertex_bound; ++v) {
    for (std::size_t k = 0;; ++k) {
      if (++probes > budget) {
        throw Error(ErrorCode::EnumerationDiverges,
                    "neighbor enumeration of vertex " + std::to_string(v) + " exceeded the probe budget");
      }
      auto w = lazy.neighbor(v, k);
      if (!w || *w >= vertex_bound) break;
      if (*w > v) edges.emplace_back(v, *w);
    }
  }
  return make_graph(vertex_bound, std::span<const Edge>(edges));
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.vertex_count();
}

}  // namespace matchgadget
