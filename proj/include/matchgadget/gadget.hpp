#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matchgadget/formula.hpp"
#include "matchgadget/graph.hpp"

namespace matchgadget {

struct Marks {
  std::optional<Vertex> l;
  std::optional<Vertex> r;
  std::optional<Vertex> c;

  friend bool operator==(const Marks&, const Marks&) = default;
};

/// Marked graph <G, l, r, c>. Its unique perfect matching codes "true" when
/// it contains l's interior edge and "false" when it contains r's.
///
/// Labels are hierarchical ("a/b/x"): each composition prefixes the labels of
/// the gadgets it embeds with the slot they occupy, so the label without its
/// last segment names the sub-gadget a vertex came from.
class CodingGraph {
 public:
  CodingGraph() = default;
  CodingGraph(Graph graph, Marks marks, std::vector<std::string> labels = {});

  const Graph& graph() const { return graph_; }
  const Marks& marks() const { return marks_; }
  std::span<const std::string> labels() const { return labels_; }

  /// Mark accessors throw MalformedCodingGraph when the mark is absent.
  Vertex l() const;
  Vertex r() const;
  Vertex c() const;

  std::vector<Vertex> interior() const;
  /// The unique interior neighbor of l (resp. r).
  Vertex l_anchor() const;
  Vertex r_anchor() const;
  Edge true_edge() const { return Edge(l(), l_anchor()); }
  Edge false_edge() const { return Edge(r(), r_anchor()); }

  /// Upper bound on the number of edges of any simple path.
  std::size_t path_length_bound() const { return graph_.empty() ? 0 : graph_.vertex_count() - 1; }

 private:
  Graph graph_;
  Marks marks_;
  std::vector<std::string> labels_;
};

/// Checks connectivity, distinct marks, unique interior neighbors of l and r,
/// and that c is adjacent to exactly l and r. Throws MalformedCodingGraph.
void validate(const CodingGraph& g);
bool is_well_formed(const CodingGraph& g);

/// Six vertices {l,r,c,x,y,z}: cycle x-y-r-c-l-x plus the pendant y-z.
CodingGraph compile_true();
/// Drops c; new l', r', c with l-l', r-r', c-l', c-r'.
CodingGraph compile_not(const CodingGraph& g);
/// Codes (not P1) and P2. Drops c1, c2; adds rr, l, r, c and the cycle
/// l1-l2-r1-r2-rr-r-c-l-l1.
CodingGraph compile_andnot(const CodingGraph& g1, const CodingGraph& g2);

enum class Connective { And, Or, Implies };
/// AND = ANDNOT(NOT a, b); OR = NOT(ANDNOT(a, NOT b)); IMPLIES = NOT(ANDNOT(NOT a, NOT b)).
CodingGraph compile_connective(Connective op, const CodingGraph& g1, const CodingGraph& g2);

/// Codes the disjunction of the list. Each input i is first replaced by a
/// gadget coding "P(i) and no earlier P(j)", so at most one of them codes
/// true; then their l/c marks are dropped, former l-anchors attach to a shared
/// y, former r marks to a shared z, and the path y-x-l-c-r-z is added.
/// Throws EmptyList.
CodingGraph compile_exists(std::span<const CodingGraph> list);

/// Disjoint union of coding graphs; component i codes membership of i.
struct SetCoding {
  Graph graph;
  std::vector<CodingGraph> components;
  std::vector<Vertex> offsets;
  /// Marks of each component, in union ids.
  std::vector<Marks> marks;
};

SetCoding compile_set(std::span<const CodingGraph> list);

/// TRUE for true, NOT(TRUE) for false.
CodingGraph compile_constant(bool value);

/// Structural recursion over the formula; atom i is realized by env[i].
/// Throws UnboundAtom / EmptyList.
CodingGraph compile_formula(const Formula& f, std::span<const CodingGraph> env);

// Center-edge bookkeeping for the separation construction.
struct SeparationPath {
  Graph graph;
  Edge center;
};

/// Path with `length` edges on vertices 0..length. Throws EvenLength.
SeparationPath separation_path(std::size_t length);

/// One component of the range-of-f construction. Dense ids map to the
/// construction's numbering through `labels`: 4n, 4n+2 and, when in range,
/// the odd endpoints 4n+1 and 4n+3.
struct RangeGadget {
  Graph graph;
  std::vector<std::uint64_t> labels;
  /// The edge {4n, 4n+2} in dense ids.
  Edge center;
};

RangeGadget range_gadget(std::uint64_t n, bool in_range);

}  // namespace matchgadget
