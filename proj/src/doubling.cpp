#include "matchgadget/doubling.hpp"

#include <algorithm>

namespace matchgadget {
namespace {

bool is_child_of(const Address& child, const Address& parent) {
  return child.size() == parent.size() + 1 && std::equal(parent.begin(), parent.end(), child.begin());
}

}  // namespace

Tree::Tree(std::vector<Address> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) nodes_.emplace_back();
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  if (!nodes_.front().empty()) throw Error(ErrorCode::NotPrefixClosed, "root missing");
  for (const Address& a : nodes_) {
    if (a.empty()) continue;
    Address parent(a.begin(), a.end() - 1);
    if (!contains(parent)) throw Error(ErrorCode::NotPrefixClosed, "parent of a node is missing");
  }
}

bool Tree::contains(const Address& a) const { return std::binary_search(nodes_.begin(), nodes_.end(), a); }

std::vector<Address> Tree::children(const Address& a) const {
  std::vector<Address> out;
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), a);
  for (; it != nodes_.end() && it->size() > a.size() && std::equal(a.begin(), a.end(), it->begin()); ++it) {
    if (it->size() == a.size() + 1) out.push_back(*it);
  }
  return out;
}

std::vector<std::vector<Address>> Tree::root_paths() const {
  std::vector<std::vector<Address>> out;
  for (const Address& a : nodes_) {
    if (a.empty()) continue;
    std::vector<Address> path;
    for (std::size_t k = 0; k <= a.size(); ++k) path.emplace_back(a.begin(), a.begin() + k);
    out.push_back(std::move(path));
  }
  return out;
}

Tree Tree::complete(std::size_t arity, std::size_t depth) {
  std::vector<Address> nodes{Address{}};
  std::vector<Address> frontier{Address{}};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Address> next;
    for (const Address& a : frontier) {
      for (Vertex c = 0; c < arity; ++c) {
        Address child = a;
        child.push_back(c);
        next.push_back(child);
      }
    }
    nodes.insert(nodes.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return Tree(std::move(nodes));
}

Edge DoublingTreeGraph::doubling_edge(const Address& a) const {
  auto [bottom, top] = halves.at(a);
  return Edge(bottom, top);
}

DoublingTreeGraph doubling_tree(const Tree& tree) {
  DoublingTreeGraph d;
  d.root = 0;
  d.owner.push_back(Address{});
  Vertex next = 1;
  for (const Address& a : tree.nodes()) {
    if (a.empty()) continue;
    d.halves[a] = {next, next + 1};
    d.owner.push_back(a);
    d.owner.push_back(a);
    next += 2;
  }
  std::vector<Edge> edges;
  for (const auto& [a, pair] : d.halves) {
    Address parent(a.begin(), a.end() - 1);
    Vertex attach = parent.empty() ? d.root : d.halves.at(parent).second;
    edges.emplace_back(attach, pair.first);
    edges.emplace_back(pair.first, pair.second);
  }
  d.graph = make_graph(next, std::span<const Edge>(edges));
  return d;
}

Matching doubling_path_to_matching(const DoublingTreeGraph& doubled, std::span<const Address> path) {
  if (path.empty() || !path.front().empty()) throw Error(ErrorCode::NotAPath, "path must start at the root");
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!is_child_of(path[i], path[i - 1]) || !doubled.halves.contains(path[i])) {
      throw Error(ErrorCode::NotAPath, "consecutive path nodes are not parent and child in the tree");
    }
  }
  std::vector<Edge> edges;
  Vertex attach = doubled.root;
  for (std::size_t i = 1; i < path.size(); ++i) {
    auto [bottom, top] = doubled.halves.at(path[i]);
    edges.emplace_back(attach, bottom);
    attach = top;
  }
  for (const auto& [a, pair] : doubled.halves) {
    if (std::find(path.begin(), path.end(), a) == path.end()) edges.emplace_back(pair.first, pair.second);
  }
  return Matching(std::move(edges));
}

std::vector<Address> doubling_matching_to_path(const DoublingTreeGraph& doubled, const Matching& m) {
  if (!m.is_matching_of(doubled.graph)) throw Error(ErrorCode::Stuck, "matching uses edges outside the doubled tree");
  auto mate = m.mate_table(doubled.graph.vertex_count());
  if (!mate[doubled.root]) throw Error(ErrorCode::RootUncovered, "root is not matched");
  std::vector<Address> path{Address{}};
  Vertex at = doubled.root;
  while (mate[at]) {
    Vertex next = *mate[at];
    const Address& node = doubled.owner[next];
    auto [bottom, top] = doubled.halves.at(node);
    if (next != bottom || !is_child_of(node, path.back())) {
      throw Error(ErrorCode::Stuck, "matching leaves the tree route at vertex " + std::to_string(at));
    }
    path.push_back(node);
    at = top;
  }
  return path;
}

}  // namespace matchgadget
