#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "matchgadget/error.hpp"

namespace matchgadget {

using Vertex = std::uint32_t;

/// Undirected edge stored canonically (u < v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on the dense vertex set {0, ..., n-1}.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return adjacency_.empty(); }

  /// Canonical edges in lexicographic order.
  std::span<const Edge> edges() const { return edges_; }
  /// Neighbors in increasing id order.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.adjacency_.size() == b.adjacency_.size(); }

 private:
  friend Graph make_graph(std::size_t, std::span<const std::pair<Vertex, Vertex>>);
  friend Graph make_graph(std::size_t, std::span<const Edge>);

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Builds a canonical graph. Duplicate pairs (in either orientation) collapse.
/// Throws SelfLoop / OutOfRangeVertex.
Graph make_graph(std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edge_list);
Graph make_graph(std::size_t vertex_count, std::span<const Edge> edge_list);
inline Graph make_graph(std::size_t vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edge_list) {
  return make_graph(vertex_count, std::span<const std::pair<Vertex, Vertex>>(edge_list.begin(), edge_list.size()));
}

/// Set of pairwise vertex-disjoint edges, kept sorted.
class Matching {
 public:
  Matching() = default;
  /// Throws NotAMatching when two edges share a vertex.
  explicit Matching(std::vector<Edge> edges);

  std::span<const Edge> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(const Edge& e) const;
  bool covers(Vertex v) const;
  std::optional<Vertex> mate(Vertex v) const;
  /// Covered vertices, ascending. Always of size 2 * size().
  std::vector<Vertex> support() const;
  /// mate lookup table over {0..n-1}; uncovered vertices map to nullopt.
  std::vector<std::optional<Vertex>> mate_table(std::size_t n) const;

  bool is_matching_of(const Graph& g) const;
  bool is_perfect_for(const Graph& g) const;

  friend auto operator<=>(const Matching&, const Matching&) = default;
  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Edge> edges_;
};

/// Injective vertex sequence; adjacency is checked against an ambient graph on demand.
struct Path {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  bool is_simple_path_in(const Graph& g) const;

  friend bool operator==(const Path&, const Path&) = default;
};

/// M Δ P. P must be a finite M-augmenting path of g, or the path of the
/// augmentation that produced m (first and last edges in m), which undoes it.
/// Throws NotAugmenting.
Matching augment(const Graph& g, const Matching& m, const Path& p);

/// Result of disjoint_union: origin[new_id] = (component index, original id).
struct DisjointUnion {
  Graph graph;
  std::vector<std::pair<std::size_t, Vertex>> origin;
  std::vector<Vertex> offsets;
};

DisjointUnion disjoint_union(std::span<const Graph> graphs);

/// Induced subgraph on `keep` (ascending ids); new id i corresponds to keep[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Graph presented through oracles: an adjacency predicate and an ascending
/// neighbor stream. neighbor(v, k) yields the k-th neighbor of v or nullopt
/// once the (finite) list is exhausted; infinite streams never return nullopt.
struct LazyGraph {
  std::function<bool(Vertex, Vertex)> adjacent;
  std::function<std::optional<Vertex>(Vertex, std::size_t)> neighbor;
  /// When present: {x,y} an edge implies bound(x) >= y.
  std::optional<std::function<Vertex(Vertex)>> bound;

  static LazyGraph infinite_path();
  /// Star centered at 0. Without a leaf count every i >= 1 is a leaf and no
  /// bound function exists; with one, leaves are 1..leaves and h(0) = leaves.
  static LazyGraph star(std::optional<Vertex> leaves = std::nullopt);
  static LazyGraph from_graph(const Graph& g);
};

inline constexpr std::size_t kDefaultProbeBudget = 1'000'000;

/// Induced subgraph on {0, ..., vertex_bound-1}. Throws EnumerationDiverges
/// when more than `budget` neighbor probes are needed.
Graph truncate(const LazyGraph& lazy, Vertex vertex_bound, std::size_t budget = kDefaultProbeBudget);

bool is_connected(const Graph& g);

}  // namespace matchgadget
