#include "matchgadget/graph_io.hpp"

#include <array>
#include <map>
#include <ostream>

using nlohmann::json;

namespace matchgadget {
namespace {

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorCode::MalformedInput, why); }

Vertex vertex_id(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 || j.get<std::int64_t>() > 0xFFFFFFFELL) {
    malformed(std::string(what) + " must be a non-negative integer");
  }
  return static_cast<Vertex>(j.get<std::int64_t>());
}

Edge edge_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) malformed("edge must be a [u, v] pair");
  Vertex u = vertex_id(j[0], "edge endpoint");
  Vertex v = vertex_id(j[1], "edge endpoint");
  if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at " + std::to_string(u));
  return Edge(u, v);
}

json edge_to_json(const Edge& e) { return json::array({e.u, e.v}); }

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

CodingGraph GraphDocument::coding_graph() const {
  CodingGraph g(graph, marks, labels);
  validate(g);
  return g;
}

GraphDocument graph_from_json(const json& j) {
  if (!j.is_object()) malformed("graph document must be a JSON object");
  if (!j.contains("vertices")) malformed("missing \"vertices\"");
  if (!j.contains("edges") || !j["edges"].is_array()) malformed("missing \"edges\" array");

  GraphDocument doc;
  std::size_t n = vertex_id(j["vertices"], "\"vertices\"");
  std::vector<Edge> edges;
  for (const json& e : j["edges"]) edges.push_back(edge_from_json(e));
  doc.graph = make_graph(n, std::span<const Edge>(edges));

  if (j.contains("marks")) {
    const json& m = j["marks"];
    if (!m.is_object()) malformed("\"marks\" must be an object");
    for (const auto& [key, value] : m.items()) {
      Vertex v = vertex_id(value, "mark");
      if (v >= n) throw Error(ErrorCode::OutOfRangeVertex, "mark " + key + " = " + std::to_string(v));
      if (key == "l") doc.marks.l = v;
      else if (key == "r") doc.marks.r = v;
      else if (key == "c") doc.marks.c = v;
      else malformed("unknown mark \"" + key + "\"");
    }
  }
  if (j.contains("labels")) {
    const json& labels = j["labels"];
    if (!labels.is_array() || labels.size() != n) malformed("\"labels\" must list one label per vertex");
    for (const json& label : labels) {
      if (label.is_string()) doc.labels.push_back(label.get<std::string>());
      else if (label.is_number_integer()) doc.labels.push_back(std::to_string(label.get<std::int64_t>()));
      else malformed("labels must be strings or integers");
    }
  }
  if (j.contains("formula")) {
    if (!j["formula"].is_string()) malformed("\"formula\" must be a string");
    doc.formula = j["formula"].get<std::string>();
  }
  if (j.contains("env")) {
    if (!j["env"].is_string()) malformed("\"env\" must be a 0/1 string");
    doc.env = parse_bits(j["env"].get<std::string>());
  }
  if (j.contains("center")) {
    Edge c = edge_from_json(j["center"]);
    if (!doc.graph.has_edge(c)) malformed("\"center\" is not an edge of the graph");
    doc.center = c;
  }
  return doc;
}

GraphDocument parse_graph(const std::string& text) { return graph_from_json(parse_json_text(text)); }

json graph_to_json(const GraphDocument& doc) {
  json j;
  j["vertices"] = doc.graph.vertex_count();
  json edges = json::array();
  for (const Edge& e : doc.graph.edges()) edges.push_back(edge_to_json(e));
  j["edges"] = std::move(edges);
  if (doc.has_marks()) {
    json m = json::object();
    if (doc.marks.l) m["l"] = *doc.marks.l;
    if (doc.marks.r) m["r"] = *doc.marks.r;
    if (doc.marks.c) m["c"] = *doc.marks.c;
    j["marks"] = std::move(m);
  }
  if (!doc.labels.empty()) j["labels"] = doc.labels;
  if (doc.formula) j["formula"] = *doc.formula;
  if (doc.env) j["env"] = format_bits(*doc.env);
  if (doc.center) j["center"] = edge_to_json(*doc.center);
  return j;
}

GraphDocument document_for(const CodingGraph& g) {
  GraphDocument doc;
  doc.graph = g.graph();
  doc.marks = g.marks();
  doc.labels.assign(g.labels().begin(), g.labels().end());
  return doc;
}

Matching matching_from_json(const json& j) {
  const json* list = &j;
  if (j.is_object()) {
    if (!j.contains("edges")) malformed("matching object needs \"edges\"");
    list = &j["edges"];
  }
  if (!list->is_array()) malformed("matching must be an edge array");
  std::vector<Edge> edges;
  for (const json& e : *list) edges.push_back(edge_from_json(e));
  return Matching(std::move(edges));
}

Matching parse_matching(const std::string& text) { return matching_from_json(parse_json_text(text)); }

json matching_to_json(const Matching& m) {
  json edges = json::array();
  for (const Edge& e : m.edges()) edges.push_back(edge_to_json(e));
  return json{{"edges", std::move(edges)}};
}

json vertices_to_json(const std::vector<Vertex>& vs) { return json(vs); }

std::vector<bool> parse_bits(const std::string& bits) {
  std::vector<bool> out;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') malformed("bit string may only contain 0 and 1: \"" + bits + "\"");
    out.push_back(ch == '1');
  }
  return out;
}

std::string format_bits(const std::vector<bool>& bits) {
  std::string s;
  for (bool b : bits) s.push_back(b ? '1' : '0');
  return s;
}

void write_dot(std::ostream& out, const Graph& g, const Marks& marks, const std::vector<std::string>& labels,
               const std::optional<Edge>& highlight) {
  static constexpr std::array<const char*, 8> kPalette = {"#dbe9f6", "#fde2c8", "#d9f0d3", "#f3d9ec",
                                                          "#fff3b0", "#e0e0e0", "#cde7e5", "#f6d5d5"};
  std::map<std::string, std::size_t> shade;
  out << "graph G {\n  node [shape=circle, style=filled, fillcolor=white];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::string label = v < labels.size() ? labels[v] : std::to_string(v);
    out << "  " << v << " [label=\"" << label << "\"";
    if (v == marks.l) {
      out << ", shape=box, fillcolor=\"#9ecae1\"";
    } else if (v == marks.r) {
      out << ", shape=diamond, fillcolor=\"#fc9272\"";
    } else if (v == marks.c) {
      out << ", shape=doublecircle, fillcolor=\"#bdbdbd\"";
    } else if (auto slash = label.find('/'); slash != std::string::npos) {
      auto [it, fresh] = shade.try_emplace(label.substr(0, slash), shade.size());
      out << ", fillcolor=\"" << kPalette[it->second % kPalette.size()] << "\"";
    }
    out << "];\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (highlight && *highlight == e) out << " [penwidth=3]";
    out << ";\n";
  }
  out << "}\n";
}

void write_dot(std::ostream& out, const GraphDocument& doc) { write_dot(out, doc.graph, doc.marks, doc.labels, doc.center); }

json report_to_json(const AnalysisReport& r) {
  json j;
  j["condition_A"] = r.condition_A_fast;
  j["condition_A_definitional"] = r.condition_A_definitional ? json(*r.condition_A_definitional) : json(nullptr);
  if (r.independent) j["independent"] = *r.independent;
  j["mim_support"] = vertices_to_json(r.mim.support());
  j["mm_support"] = vertices_to_json(r.mm.support());
  j["star"] = {{"hypothesis_holds", r.star.hypothesis_holds}, {"conclusion_holds", r.star.conclusion_holds}};
  return j;
}

json report_to_json(const RoundtripReport& r) {
  json j;
  j["pm_count"] = r.pm_count;
  if (r.decoded) j["decoded"] = *r.decoded;
  j["eval"] = r.eval;
  j["agree"] = r.agree;
  return j;
}

json report_to_json(const UniquenessReport& r) {
  json j;
  j["pm_count"] = r.count;
  if (r.matching) j["matching"] = matching_to_json(*r.matching)["edges"];
  return j;
}

}  // namespace matchgadget
