#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "matchgadget/graph.hpp"

namespace matchgadget {

/// A node of a tree of finite sequences; the empty address is the root.
using Address = std::vector<Vertex>;

/// Finite, prefix-closed set of addresses, kept in lexicographic order.
class Tree {
 public:
  /// Throws NotPrefixClosed when a node's parent is missing. An empty list
  /// denotes the single-node tree.
  explicit Tree(std::vector<Address> nodes);

  std::span<const Address> nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool contains(const Address& a) const;
  std::vector<Address> children(const Address& a) const;
  /// All root paths ending at a non-root node: (eps, a[0..1), ..., a).
  std::vector<std::vector<Address>> root_paths() const;

  static Tree complete(std::size_t arity, std::size_t depth);

 private:
  std::vector<Address> nodes_;
};

/// The doubled tree: root keeps one vertex, every other node becomes a
/// bottom/top pair joined by its doubling edge.
struct DoublingTreeGraph {
  Graph graph;
  Vertex root = 0;
  /// node address -> (bottom, top), non-root nodes only.
  std::map<Address, std::pair<Vertex, Vertex>> halves;
  /// vertex -> owning tree address.
  std::vector<Address> owner;

  Edge doubling_edge(const Address& a) const;
};

DoublingTreeGraph doubling_tree(const Tree& tree);

/// Path-transfer edges along the root path plus the doubling edge of every
/// off-path node. Leaves exactly top(last path node) uncovered. Throws NotAPath.
Matching doubling_path_to_matching(const DoublingTreeGraph& doubled, std::span<const Address> path);

/// Follows the matching from the root up the tree until it stops.
/// Throws RootUncovered or Stuck.
std::vector<Address> doubling_matching_to_path(const DoublingTreeGraph& doubled, const Matching& m);

}  // namespace matchgadget
