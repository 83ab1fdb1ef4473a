#include "matchgadget/gadget.hpp"

#include <algorithm>
#include <initializer_list>
#include <limits>

namespace matchgadget {
namespace {

constexpr Vertex kDropped = std::numeric_limits<Vertex>::max();

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorCode::MalformedCodingGraph, why); }

// Allocates vertices in insertion order: embedded gadgets first, then the
// new vertices of the current step.
class Composer {
 public:
  /// Copies g without the `drop` vertices (and their edges); returns old->new.
  std::vector<Vertex> embed(const CodingGraph& g, const std::string& slot, std::initializer_list<Vertex> drop) {
    const Graph& graph = g.graph();
    std::vector<Vertex> map(graph.vertex_count(), kDropped);
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
      if (std::find(drop.begin(), drop.end(), v) != drop.end()) continue;
      std::string name = v < g.labels().size() ? g.labels()[v] : std::to_string(v);
      map[v] = add(slot + "/" + name);
    }
    for (const Edge& e : graph.edges()) {
      if (map[e.u] != kDropped && map[e.v] != kDropped) edges_.emplace_back(map[e.u], map[e.v]);
    }
    return map;
  }

  Vertex add(std::string label) {
    labels_.push_back(std::move(label));
    return static_cast<Vertex>(labels_.size() - 1);
  }

  void connect(Vertex a, Vertex b) { edges_.emplace_back(a, b); }

  void cycle(std::initializer_list<Vertex> vs) {
    auto it = vs.begin();
    for (std::size_t i = 0; i < vs.size(); ++i) connect(it[i], it[(i + 1) % vs.size()]);
  }

  CodingGraph finish(Vertex l, Vertex r, Vertex c) {
    Graph g = make_graph(labels_.size(), std::span<const Edge>(edges_));
    return CodingGraph(std::move(g), Marks{l, r, c}, std::move(labels_));
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

}  // namespace

CodingGraph::CodingGraph(Graph graph, Marks marks, std::vector<std::string> labels)
    : graph_(std::move(graph)), marks_(marks), labels_(std::move(labels)) {}

Vertex CodingGraph::l() const {
  if (!marks_.l) malformed("mark l missing");
  return *marks_.l;
}
Vertex CodingGraph::r() const {
  if (!marks_.r) malformed("mark r missing");
  return *marks_.r;
}
Vertex CodingGraph::c() const {
  if (!marks_.c) malformed("mark c missing");
  return *marks_.c;
}

std::vector<Vertex> CodingGraph::interior() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < graph_.vertex_count(); ++v) {
    if (v != marks_.l && v != marks_.r && v != marks_.c) out.push_back(v);
  }
  return out;
}

namespace {

Vertex unique_interior_neighbor(const CodingGraph& g, Vertex mark, const char* name) {
  std::optional<Vertex> found;
  for (Vertex w : g.graph().neighbors(mark)) {
    if (w == g.marks().l || w == g.marks().r || w == g.marks().c) continue;
    if (found) malformed(std::string(name) + " has more than one interior neighbor");
    found = w;
  }
  if (!found) malformed(std::string(name) + " has no interior neighbor");
  return *found;
}

}  // namespace

Vertex CodingGraph::l_anchor() const { return unique_interior_neighbor(*this, l(), "l"); }
Vertex CodingGraph::r_anchor() const { return unique_interior_neighbor(*this, r(), "r"); }

void validate(const CodingGraph& g) {
  Vertex l = g.l(), r = g.r(), c = g.c();
  const Graph& graph = g.graph();
  if (l >= graph.vertex_count() || r >= graph.vertex_count() || c >= graph.vertex_count()) {
    malformed("mark out of range");
  }
  if (l == r || l == c || r == c) malformed("marks must be distinct");
  if (!is_connected(graph)) malformed("graph is not connected");
  g.l_anchor();
  g.r_anchor();
  auto cn = graph.neighbors(c);
  if (cn.size() != 2 || !graph.adjacent(c, l) || !graph.adjacent(c, r)) malformed("c must be adjacent to exactly l and r");
}

bool is_well_formed(const CodingGraph& g) {
  try {
    validate(g);
    return true;
  } catch (const Error&) {
    return false;
  }
}

CodingGraph compile_true() {
  Composer k;
  Vertex l = k.add("l"), r = k.add("r"), c = k.add("c");
  Vertex x = k.add("x"), y = k.add("y"), z = k.add("z");
  k.cycle({x, y, r, c, l});
  k.connect(y, z);
  return k.finish(l, r, c);
}

CodingGraph compile_not(const CodingGraph& g) {
  validate(g);
  Composer k;
  auto map = k.embed(g, "n", {g.c()});
  Vertex old_l = map[g.l()], old_r = map[g.r()];
  Vertex l = k.add("l"), r = k.add("r"), c = k.add("c");
  k.connect(old_l, l);
  k.connect(old_r, r);
  k.connect(c, l);
  k.connect(c, r);
  return k.finish(l, r, c);
}

CodingGraph compile_andnot(const CodingGraph& g1, const CodingGraph& g2) {
  validate(g1);
  validate(g2);
  Composer k;
  auto m1 = k.embed(g1, "a", {g1.c()});
  auto m2 = k.embed(g2, "b", {g2.c()});
  Vertex l1 = m1[g1.l()], r1 = m1[g1.r()];
  Vertex l2 = m2[g2.l()], r2 = m2[g2.r()];
  Vertex rr = k.add("rr"), l = k.add("l"), r = k.add("r"), c = k.add("c");
  k.cycle({l1, l2, r1, r2, rr, r, c, l});
  return k.finish(l, r, c);
}

CodingGraph compile_connective(Connective op, const CodingGraph& g1, const CodingGraph& g2) {
  switch (op) {
    case Connective::And: return compile_andnot(compile_not(g1), g2);
    case Connective::Or: return compile_not(compile_andnot(g1, compile_not(g2)));
    case Connective::Implies: return compile_not(compile_andnot(compile_not(g1), compile_not(g2)));
  }
  malformed("unknown connective");
}

CodingGraph compile_exists(std::span<const CodingGraph> list) {
  if (list.empty()) throw Error(ErrorCode::EmptyList, "existential over an empty list");
  for (const CodingGraph& g : list) validate(g);

  // hats[i] codes P(i) and not (P(0) or ... or P(i-1)).
  std::vector<CodingGraph> hats;
  hats.reserve(list.size());
  hats.push_back(list[0]);
  CodingGraph earlier = list[0];
  for (std::size_t i = 1; i < list.size(); ++i) {
    hats.push_back(compile_andnot(earlier, list[i]));
    if (i + 1 < list.size()) earlier = compile_connective(Connective::Or, earlier, list[i]);
  }

  Composer k;
  std::vector<Vertex> anchors, rights;
  for (std::size_t i = 0; i < hats.size(); ++i) {
    const CodingGraph& h = hats[i];
    Vertex anchor = h.l_anchor();
    auto map = k.embed(h, "h" + std::to_string(i), {h.l(), h.c()});
    anchors.push_back(map[anchor]);
    rights.push_back(map[h.r()]);
  }
  Vertex x = k.add("x"), y = k.add("y"), z = k.add("z");
  Vertex l = k.add("l"), r = k.add("r"), c = k.add("c");
  for (Vertex a : anchors) k.connect(y, a);
  for (Vertex rv : rights) k.connect(z, rv);
  k.connect(y, x);
  k.connect(x, l);
  k.connect(l, c);
  k.connect(c, r);
  k.connect(r, z);
  return k.finish(l, r, c);
}

SetCoding compile_set(std::span<const CodingGraph> list) {
  SetCoding s;
  std::vector<Graph> graphs;
  for (const CodingGraph& g : list) {
    validate(g);
    graphs.push_back(g.graph());
  }
  DisjointUnion u = disjoint_union(graphs);
  s.graph = std::move(u.graph);
  s.offsets = std::move(u.offsets);
  s.components.assign(list.begin(), list.end());
  for (std::size_t i = 0; i < list.size(); ++i) {
    Vertex off = s.offsets[i];
    s.marks.push_back(Marks{list[i].l() + off, list[i].r() + off, list[i].c() + off});
  }
  return s;
}

CodingGraph compile_constant(bool value) { return value ? compile_true() : compile_not(compile_true()); }

CodingGraph compile_formula(const Formula& f, std::span<const CodingGraph> env) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::True: return compile_true();
    case K::Atom:
      if (f.atom >= env.size()) throw Error(ErrorCode::UnboundAtom, "atom @" + std::to_string(f.atom) + " is unbound");
      return env[f.atom];
    case K::Not: return compile_not(compile_formula(f.children.at(0), env));
    case K::And:
    case K::Or:
    case K::Implies:
    case K::AndNot: {
      CodingGraph a = compile_formula(f.children.at(0), env);
      CodingGraph b = compile_formula(f.children.at(1), env);
      if (f.kind == K::AndNot) return compile_andnot(a, b);
      Connective op = f.kind == K::And ? Connective::And : f.kind == K::Or ? Connective::Or : Connective::Implies;
      return compile_connective(op, a, b);
    }
    case K::Exists: {
      if (f.children.empty()) throw Error(ErrorCode::EmptyList, "existential over an empty list");
      std::vector<CodingGraph> parts;
      parts.reserve(f.children.size());
      for (const Formula& c : f.children) parts.push_back(compile_formula(c, env));
      return compile_exists(parts);
    }
  }
  malformed("unknown formula node");
}

SeparationPath separation_path(std::size_t length) {
  if (length % 2 == 0) throw Error(ErrorCode::EvenLength, "separation paths have odd length, got " + std::to_string(length));
  std::vector<Edge> edges;
  for (Vertex v = 0; v < length; ++v) edges.emplace_back(v, v + 1);
  Vertex mid = static_cast<Vertex>((length - 1) / 2);
  return SeparationPath{make_graph(length + 1, std::span<const Edge>(edges)), Edge(mid, mid + 1)};
}

RangeGadget range_gadget(std::uint64_t n, bool in_range) {
  RangeGadget g;
  if (!in_range) {
    g.labels = {4 * n, 4 * n + 2};
    g.graph = make_graph(2, {{0, 1}});
    g.center = Edge(0, 1);
    return g;
  }
  g.labels = {4 * n, 4 * n + 1, 4 * n + 2, 4 * n + 3};
  g.graph = make_graph(4, {{1, 0}, {0, 2}, {2, 3}});
  g.center = Edge(0, 2);
  return g;
}

}  // namespace matchgadget
