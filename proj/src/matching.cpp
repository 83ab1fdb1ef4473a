#include "matchgadget/matching.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace matchgadget {
namespace {

// Preorder walk over increasing edge indices; emits matchings in
// lexicographic order of their sorted edge lists.
class MatchingEnumerator {
 public:
  MatchingEnumerator(const Graph& g, std::size_t cap) : edges_(g.edges()), used_(g.vertex_count(), 0), cap_(cap) {}

  void extend_from(std::size_t start) {
    for (std::size_t i = start; i < edges_.size() && !truncated_; ++i) {
      const Edge& e = edges_[i];
      if (used_[e.u] || used_[e.v]) continue;
      take(e);
      emit();
      extend_from(i + 1);
      release(e);
    }
  }

  // Only the subtree whose smallest edge is edges_[first].
  void subtree(std::size_t first) {
    const Edge& e = edges_[first];
    take(e);
    emit();
    extend_from(first + 1);
    release(e);
  }

  void emit_empty() { emit(); }

  std::vector<Matching> take_results() { return std::move(out_); }
  bool truncated() const { return truncated_; }

 private:
  void take(const Edge& e) {
    used_[e.u] = used_[e.v] = 1;
    current_.push_back(e);
  }
  void release(const Edge& e) {
    used_[e.u] = used_[e.v] = 0;
    current_.pop_back();
  }
  void emit() {
    if (out_.size() >= cap_) {
      truncated_ = true;
      return;
    }
    out_.emplace_back(current_);
  }

  std::span<const Edge> edges_;
  std::vector<char> used_;
  std::vector<Edge> current_;
  std::vector<Matching> out_;
  std::size_t cap_;
  bool truncated_ = false;
};

class PerfectMatchingCounter {
 public:
  PerfectMatchingCounter(const Graph& g, std::size_t cap)
      : g_(g), matched_(g.vertex_count(), 0), degree_(g.vertex_count()), cap_(cap) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) degree_[v] = g.degree(v);
    unmatched_ = g.vertex_count();
  }

  PerfectMatchingCount run() {
    PerfectMatchingCount result;
    if (cap_ == 0) {
      result.capped = true;
      return result;
    }
    if (g_.vertex_count() % 2 == 0) {
      std::vector<Vertex> queue;
      for (Vertex v = 0; v < g_.vertex_count(); ++v) {
        if (degree_[v] <= 1) queue.push_back(v);
      }
      search(std::move(queue));
    }
    result.count = count_;
    result.first = std::move(first_);
    result.capped = count_ >= cap_ && !exhausted_;
    return result;
  }

 private:
  void match(Vertex v, Vertex w, std::vector<Vertex>& queue) {
    matched_[v] = matched_[w] = 1;
    unmatched_ -= 2;
    stack_.emplace_back(v, w);
    for (Vertex end : {v, w}) {
      for (Vertex x : g_.neighbors(end)) {
        if (matched_[x]) continue;
        if (--degree_[x] <= 1) queue.push_back(x);
      }
    }
  }

  void unmatch_to(std::size_t mark) {
    while (stack_.size() > mark) {
      Edge e = stack_.back();
      stack_.pop_back();
      matched_[e.u] = matched_[e.v] = 0;
      unmatched_ += 2;
      for (Vertex end : {e.u, e.v}) {
        for (Vertex x : g_.neighbors(end)) {
          if (!matched_[x] && x != e.u && x != e.v) ++degree_[x];
        }
      }
    }
  }

  // Applies forced moves; false on contradiction.
  bool propagate(std::vector<Vertex>& queue) {
    while (!queue.empty()) {
      Vertex v = queue.back();
      queue.pop_back();
      if (matched_[v]) continue;
      if (degree_[v] == 0) return false;
      if (degree_[v] == 1) {
        for (Vertex w : g_.neighbors(v)) {
          if (!matched_[w]) {
            match(v, w, queue);
            break;
          }
        }
      }
    }
    return true;
  }

  void search(std::vector<Vertex> queue) {
    std::size_t mark = stack_.size();
    if (propagate(queue)) {
      if (unmatched_ == 0) {
        if (count_ == 0) first_ = Matching(std::vector<Edge>(stack_.begin(), stack_.end()));
        ++count_;
      } else {
        Vertex pivot = 0;
        std::size_t best = SIZE_MAX;
        for (Vertex v = 0; v < g_.vertex_count(); ++v) {
          if (!matched_[v] && degree_[v] < best) {
            best = degree_[v];
            pivot = v;
          }
        }
        std::vector<Vertex> options;
        for (Vertex w : g_.neighbors(pivot)) {
          if (!matched_[w]) options.push_back(w);
        }
        for (Vertex w : options) {
          if (count_ >= cap_) return unmatch_to(mark);
          std::size_t branch_mark = stack_.size();
          std::vector<Vertex> next;
          match(pivot, w, next);
          search(std::move(next));
          unmatch_to(branch_mark);
        }
      }
    }
    unmatch_to(mark);
  }

  const Graph& g_;
  std::vector<char> matched_;
  std::vector<std::size_t> degree_;
  std::vector<Edge> stack_;
  std::size_t unmatched_ = 0;
  std::size_t count_ = 0;
  std::size_t cap_;
  bool exhausted_ = false;
  std::optional<Matching> first_;
};

// Edmonds' blossom algorithm: BFS from each exposed vertex over an
// alternating forest, contracting odd cycles onto their base.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g), n_(g.vertex_count()), mate_(n_, kNone), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  Matching run() {
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] != kNone) continue;
      for (Vertex w : g_.neighbors(v)) {
        if (mate_[w] == kNone) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] != kNone) continue;
      Vertex u = find_path(v);
      while (u != kNone) {
        Vertex pv = parent_[u];
        Vertex ppv = mate_[pv];
        mate_[u] = pv;
        mate_[pv] = u;
        u = ppv;
      }
    }
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] != kNone && v < mate_[v]) edges.emplace_back(v, mate_[v]);
    }
    return Matching(std::move(edges));
  }

 private:
  static constexpr Vertex kNone = static_cast<Vertex>(-1);

  Vertex lca(Vertex a, Vertex b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] == kNone) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kNone && parent_[mate_[to]] != kNone)) {
          Vertex cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (mate_[to] == kNone) return to;
          used_[mate_[to]] = 1;
          queue.push_back(mate_[to]);
        }
      }
    }
    return kNone;
  }

  const Graph& g_;
  Vertex n_;
  std::vector<Vertex> mate_, parent_, base_;
  std::vector<char> used_, in_blossom_;
};

class AlternatingSearch {
 public:
  AlternatingSearch(const Graph& g, const Matching& m, bool proper_only, std::size_t max_len)
      : g_(g), mate_(m.mate_table(g.vertex_count())), on_path_(g.vertex_count(), 0),
        proper_only_(proper_only), max_len_(max_len) {}

  std::optional<Path> from(Vertex s) {
    path_.assign(1, s);
    on_path_[s] = 1;
    bool found = dfs(false);
    on_path_[s] = 0;
    if (!found) return std::nullopt;
    return Path{path_};
  }

 private:
  // path_.back() is s or was reached through an edge of the matching.
  bool dfs(bool used_matching_edge) {
    std::size_t len = path_.size() - 1;
    if (len + 1 > max_len_) return false;
    Vertex v = path_.back();
    for (Vertex w : g_.neighbors(v)) {
      if (on_path_[w]) continue;
      if (!mate_[w]) {
        if (proper_only_ && !used_matching_edge) continue;
        path_.push_back(w);
        return true;
      }
      Vertex x = *mate_[w];
      if (on_path_[x] || len + 2 > max_len_) continue;
      path_.push_back(w);
      path_.push_back(x);
      on_path_[w] = on_path_[x] = 1;
      if (dfs(true)) return true;
      on_path_[w] = on_path_[x] = 0;
      path_.resize(path_.size() - 2);
    }
    return false;
  }

  const Graph& g_;
  std::vector<std::optional<Vertex>> mate_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
  bool proper_only_;
  std::size_t max_len_;
};

class TreeSearch {
 public:
  TreeSearch(const LazyGraph& lazy, std::size_t n, std::size_t budget)
      : lazy_(lazy), n_(n), budget_(budget), partners_(n + 1) {}

  PartialMatchingNode run() {
    if (!search(0)) {
      throw Error(ErrorCode::NoNode, "no matching covers {0.." + std::to_string(n_) + "}");
    }
    return PartialMatchingNode{partners_};
  }

 private:
  bool search(Vertex i) {
    if (i > n_) return true;
    if (auto it = assigned_.find(i); it != assigned_.end()) {
      partners_[i] = it->second;
      return search(i + 1);
    }
    const Vertex limit = (*lazy_.bound)(i);
    for (std::size_t k = 0;; ++k) {
      if (++probes_ > budget_) throw Error(ErrorCode::BudgetExceeded, "tree search exceeded the probe budget");
      auto w = lazy_.neighbor(i, k);
      if (!w || *w > limit) break;
      if (assigned_.contains(*w)) continue;
      assigned_[i] = *w;
      assigned_[*w] = i;
      partners_[i] = *w;
      if (search(i + 1)) return true;
      assigned_.erase(i);
      assigned_.erase(*w);
    }
    return false;
  }

  const LazyGraph& lazy_;
  Vertex n_;
  std::size_t budget_;
  std::size_t probes_ = 0;
  std::vector<Vertex> partners_;
  std::unordered_map<Vertex, Vertex> assigned_;
};

}  // namespace

namespace reference {

MatchingList enumerate_matchings(const Graph& g, std::size_t cap) {
  MatchingEnumerator en(g, cap);
  en.emit_empty();
  en.extend_from(0);
  bool truncated = en.truncated();
  return MatchingList{en.take_results(), truncated};
}

}  // namespace reference

MatchingList enumerate_matchings(const Graph& g, std::size_t cap) {
  const std::size_t m = g.edge_count();
  if (cap == 0) return MatchingList{{}, true};
  std::vector<std::vector<Matching>> parts(m);
  std::vector<char> part_truncated(m, 0);
  // Each subtree needs at most cap-1 entries: the empty matching is always first.
#pragma omp parallel for schedule(dynamic, 1) if (m > 8)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
    MatchingEnumerator en(g, cap - 1);
    en.subtree(static_cast<std::size_t>(i));
    part_truncated[i] = en.truncated();
    parts[i] = en.take_results();
  }
  MatchingList out;
  out.matchings.emplace_back();
  for (std::size_t i = 0; i < m; ++i) {
    for (auto& mt : parts[i]) {
      if (out.matchings.size() >= cap) {
        out.truncated = true;
        return out;
      }
      out.matchings.push_back(std::move(mt));
    }
    if (part_truncated[i]) {
      out.truncated = true;
      out.matchings.resize(std::min(out.matchings.size(), cap));
      return out;
    }
  }
  return out;
}

PerfectMatchingCount count_perfect_matchings(const Graph& g, std::size_t cap) {
  return PerfectMatchingCounter(g, cap).run();
}

Matching maximum_matching(const Graph& g) { return Blossom(g).run(); }

std::optional<Matching> perfect_matching(const Graph& g) {
  if (g.vertex_count() % 2 != 0) return std::nullopt;
  Matching m = maximum_matching(g);
  if (m.size() * 2 != g.vertex_count()) return std::nullopt;
  return m;
}

std::optional<Path> find_augmenting_path(const Graph& g, const Matching& m, Vertex s, bool proper_only,
                                         std::optional<std::size_t> max_len) {
  if (s >= g.vertex_count()) throw Error(ErrorCode::OutOfRangeVertex, "start vertex out of range");
  if (m.covers(s)) throw Error(ErrorCode::CoveredStart, "vertex " + std::to_string(s) + " is covered");
  std::size_t limit = std::min(max_len.value_or(g.vertex_count()), g.vertex_count());
  return AlternatingSearch(g, m, proper_only, limit).from(s);
}

Matching PartialMatchingNode::as_matching() const {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < partners.size(); ++i) edges.emplace_back(i, partners[i]);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Matching(std::move(edges));
}

bool is_tree_node(const LazyGraph& lazy, std::span<const Vertex> partners) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < partners.size(); ++i) {
    if (partners[i] == i || !lazy.adjacent(i, partners[i])) return false;
    edges.emplace_back(i, partners[i]);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  try {
    Matching m(std::move(edges));
  } catch (const Error&) {
    return false;
  }
  return true;
}

PartialMatchingNode bounded_pm_search(const LazyGraph& lazy, std::size_t n, std::size_t budget) {
  if (!lazy.bound) throw Error(ErrorCode::PreconditionViolated, "tree search needs a bound function");
  return TreeSearch(lazy, n, budget).run();
}

}  // namespace matchgadget
