#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "matchgadget/analysis.hpp"
#include "matchgadget/gadget.hpp"
#include "matchgadget/verifier.hpp"

namespace matchgadget {

/// On-disk graph: {"vertices": N, "edges": [[u,v],...], "marks": {...}?}.
/// The remaining fields are optional extras written by the CLI.
struct GraphDocument {
  Graph graph;
  Marks marks;
  std::vector<std::string> labels;
  std::optional<std::string> formula;
  std::optional<std::vector<bool>> env;
  std::optional<Edge> center;

  bool has_marks() const { return marks.l || marks.r || marks.c; }
  /// Throws MalformedCodingGraph when marks are missing or invalid.
  CodingGraph coding_graph() const;
};

/// Throws MalformedInput on any shape or type mismatch.
GraphDocument graph_from_json(const nlohmann::json& j);
GraphDocument parse_graph(const std::string& text);
nlohmann::json graph_to_json(const GraphDocument& doc);

GraphDocument document_for(const CodingGraph& g);

/// Accepts {"edges": [[u,v],...]} or a bare edge array.
Matching matching_from_json(const nlohmann::json& j);
Matching parse_matching(const std::string& text);
nlohmann::json matching_to_json(const Matching& m);

nlohmann::json vertices_to_json(const std::vector<Vertex>& vs);

std::vector<bool> parse_bits(const std::string& bits);
std::string format_bits(const std::vector<bool>& bits);

/// Undirected DOT. l, r and c get distinct shapes; with labels of the form
/// "slot/..." interiors are shaded by top-level slot.
void write_dot(std::ostream& out, const Graph& g, const Marks& marks, const std::vector<std::string>& labels = {},
               const std::optional<Edge>& highlight = std::nullopt);
void write_dot(std::ostream& out, const GraphDocument& doc);

nlohmann::json report_to_json(const AnalysisReport& r);
nlohmann::json report_to_json(const RoundtripReport& r);
nlohmann::json report_to_json(const UniquenessReport& r);

}  // namespace matchgadget
