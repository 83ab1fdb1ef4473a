#include "matchgadget/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "matchgadget/analysis.hpp"
#include "matchgadget/doubling.hpp"
#include "matchgadget/graph_io.hpp"
#include "matchgadget/jump.hpp"
#include "matchgadget/matching.hpp"
#include "matchgadget/verifier.hpp"

using nlohmann::json;

namespace matchgadget::cli {
namespace {

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorCode::MalformedInput, why); }

struct Io {
  std::istream& in;
  std::ostream& out;
  std::optional<std::size_t> budget;
};

std::string read_text(const std::string& path, Io& io) {
  if (path == "-") {
    std::ostringstream buf;
    buf << io.in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) malformed("cannot open " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text, Io& io) {
  if (path == "-") {
    io.out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) malformed("cannot write " + path);
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::size_t parse_budget(const std::string& text) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    malformed("MATCHGADGET_BUDGET must be a positive integer, got \"" + text + "\"");
  }
  return value;
}

AnalysisLimits limits_for(const Io& io) {
  AnalysisLimits limits;
  if (io.budget) limits.matching_cap = *io.budget;
  return limits;
}

void emit_graph(const GraphDocument& doc, const std::string& out_path, const std::string& dot_path, Io& io) {
  if (!out_path.empty()) write_text(out_path, dump(graph_to_json(doc)), io);
  if (!dot_path.empty()) {
    std::ostringstream dot;
    write_dot(dot, doc);
    write_text(dot_path, dot.str(), io);
  }
}

// compile ------------------------------------------------------------------

struct CompileArgs {
  std::string formula;
  std::string env;
  std::string out = "-";
  std::string dot;
};

int run_compile(const CompileArgs& a, Io& io) {
  Formula f = parse_formula(a.formula);
  std::vector<bool> env = parse_bits(a.env);
  std::vector<CodingGraph> atoms;
  for (bool b : env) atoms.push_back(compile_constant(b));
  GraphDocument doc = document_for(compile_formula(f, atoms));
  doc.formula = to_string(f);
  doc.env = env;
  emit_graph(doc, a.out, a.dot, io);
  return kExitOk;
}

// match --------------------------------------------------------------------

Matching brute_force_maximum(const Graph& g, const Io& io) {
  MatchingList list = enumerate_matchings(g, io.budget.value_or(kDefaultMatchingCap));
  if (list.truncated) throw Error(ErrorCode::CapExceeded, "too many matchings for brute force");
  const Matching* best = &list.matchings.front();
  for (const Matching& m : list.matchings) {
    if (m.size() > best->size()) best = &m;
  }
  return *best;
}

int run_match(const std::string& path, const std::string& algo, Io& io) {
  GraphDocument doc = parse_graph(read_text(path, io));
  Matching m = algo == "brute" ? brute_force_maximum(doc.graph, io) : maximum_matching(doc.graph);
  json j;
  j["algo"] = algo;
  j["size"] = m.size();
  j["perfect"] = m.is_perfect_for(doc.graph);
  j["edges"] = matching_to_json(m)["edges"];
  if (doc.center) j["center_in_matching"] = m.contains(*doc.center);
  io.out << dump(j);
  return kExitOk;
}

// verify -------------------------------------------------------------------

int run_verify(const std::string& path, bool full_count, Io& io) {
  GraphDocument doc = parse_graph(read_text(path, io));
  std::size_t cap = full_count ? io.budget.value_or(kDefaultMatchingCap) : kDefaultUniquenessCap;
  UniquenessReport u = verify_unique_pm(doc.graph, cap, full_count);
  json j;
  j["pm_count"] = u.count;
  bool ok = u.count == 1;

  if (doc.has_marks()) {
    CodingGraph g = doc.coding_graph();
    std::optional<bool> decoded;
    if (u.matching) {
      try {
        decoded = decode_truth(g, *u.matching);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::MalformedCodingGraph) throw;
      }
    }
    j["decoded"] = decoded ? json(*decoded) : json(nullptr);
    ok = ok && decoded.has_value();
    if (doc.formula) {
      Formula f = parse_formula(*doc.formula);
      bool eval = eval_formula(f, doc.env.value_or(std::vector<bool>{}));
      j["eval"] = eval;
      j["agree"] = decoded.has_value() && *decoded == eval;
      ok = ok && j["agree"].get<bool>();
    }
  }
  io.out << dump(j);
  return ok ? kExitOk : kExitDisagreement;
}

// analyze ------------------------------------------------------------------

int run_analyze(const std::string& path, const std::string& matching_path, Io& io) {
  GraphDocument doc = parse_graph(read_text(path, io));
  std::optional<Matching> m;
  if (!matching_path.empty()) {
    m = parse_matching(read_text(matching_path, io));
    if (!m->is_matching_of(doc.graph)) malformed("matching uses edges outside the graph");
  }
  AnalysisReport r = analyze_graph(doc.graph, m, limits_for(io));
  io.out << dump(report_to_json(r));
  bool agree = !r.condition_A_definitional || *r.condition_A_definitional == r.condition_A_fast;
  return agree ? kExitOk : kExitDisagreement;
}

// gadget -------------------------------------------------------------------

Address parse_address(const std::string& text) {
  Address a;
  if (text.empty()) return a;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '.')) {
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      malformed("tree address must be dot-separated integers: \"" + text + "\"");
    }
    a.push_back(v);
  }
  return a;
}

std::string format_address(const Address& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "." : "") + std::to_string(a[i]);
  return s;
}

struct DoublingArgs {
  std::string nodes;
  std::size_t arity = 0;
  std::size_t depth = 0;
  std::string path;
  bool has_path = false;
  std::string out = "-";
  std::string dot;
};

int run_doubling(const DoublingArgs& a, Io& io) {
  std::vector<Address> nodes{Address{}};
  if (!a.nodes.empty()) {
    std::stringstream ss(a.nodes);
    std::string item;
    while (std::getline(ss, item, ';')) {
      if (!item.empty()) nodes.push_back(parse_address(item));
    }
  }
  Tree tree = a.nodes.empty() ? Tree::complete(a.arity, a.depth) : Tree(std::move(nodes));
  DoublingTreeGraph d = doubling_tree(tree);

  GraphDocument doc;
  doc.graph = d.graph;
  doc.labels.resize(d.graph.vertex_count());
  doc.labels[d.root] = "root";
  for (const auto& [addr, halves] : d.halves) {
    doc.labels[halves.first] = format_address(addr) + "/bottom";
    doc.labels[halves.second] = format_address(addr) + "/top";
  }
  json j = graph_to_json(doc);
  if (a.has_path) {
    Address end = parse_address(a.path);
    std::vector<Address> path;
    for (std::size_t k = 0; k <= end.size(); ++k) path.emplace_back(end.begin(), end.begin() + k);
    j["matching"] = matching_to_json(doubling_path_to_matching(d, path))["edges"];
  }
  write_text(a.out, dump(j), io);
  if (!a.dot.empty()) {
    std::ostringstream dot;
    write_dot(dot, doc);
    write_text(a.dot, dot.str(), io);
  }
  return kExitOk;
}

int run_sep_path(std::size_t length, const std::string& out, const std::string& dot, Io& io) {
  SeparationPath p = separation_path(length);
  GraphDocument doc;
  doc.graph = p.graph;
  doc.center = p.center;
  emit_graph(doc, out, dot, io);
  return kExitOk;
}

int run_range(std::uint64_t n, bool in_range, const std::string& out, const std::string& dot, Io& io) {
  RangeGadget r = range_gadget(n, in_range);
  GraphDocument doc;
  doc.graph = r.graph;
  doc.center = r.center;
  for (std::uint64_t label : r.labels) doc.labels.push_back(std::to_string(label));
  emit_graph(doc, out, dot, io);
  return kExitOk;
}

// demo jump ----------------------------------------------------------------

std::vector<OracleEntry> parse_oracle_table(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid oracle JSON: ") + e.what());
  }
  if (!j.is_array()) malformed("oracle table must be a list of [e, prefix, min_steps] triples");
  std::vector<OracleEntry> table;
  for (const json& row : j) {
    if (!row.is_array() || row.size() != 3 || !row[0].is_number_unsigned() || !row[1].is_string() ||
        !row[2].is_number_unsigned()) {
      malformed("oracle row must be [e, \"prefix\", min_steps]: " + row.dump());
    }
    table.push_back({row[0].get<std::size_t>(), row[1].get<std::string>(), row[2].get<std::size_t>()});
  }
  return table;
}

struct JumpArgs {
  std::string oracle;
  std::size_t e = 0;
  std::size_t width = 1;
  std::size_t levels = 1;
  std::size_t bound = 1;
  std::string x0;
};

int run_jump(const JumpArgs& a, Io& io) {
  if (a.e >= a.width) malformed("--e must be below --width");
  if (a.levels == 0) malformed("--levels must be at least 1");
  HaltingOracle oracle = oracle_from_table(parse_oracle_table(read_text(a.oracle, io)));
  std::vector<bool> x0 = parse_bits(a.x0);

  std::vector<SetCoding> hierarchy = jump_hierarchy(x0, a.levels, oracle, a.width, a.bound);

  // Direct evaluation: bit e of level j+1 is "some n' < bound has halts(e, level j, n')".
  std::vector<std::vector<bool>> expected{x0};
  for (std::size_t level = 0; level < a.levels; ++level) {
    std::vector<bool> next(a.width);
    for (std::size_t e = 0; e < a.width; ++e) {
      for (std::size_t n = 0; n < a.bound && !next[e]; ++n) next[e] = oracle(e, expected.back(), n);
    }
    expected.push_back(std::move(next));
  }

  json levels = json::array();
  bool agree = true;
  std::vector<bool> decoded;
  for (std::size_t level = 0; level < hierarchy.size(); ++level) {
    decoded = decode_set(hierarchy[level]);
    agree = agree && decoded == expected[level];
    levels.push_back({{"level", level},
                      {"vertices", hierarchy[level].graph.vertex_count()},
                      {"decoded", format_bits(decoded)},
                      {"expected", format_bits(expected[level])}});
  }
  json j;
  j["levels"] = std::move(levels);
  j["query"] = {{"e", a.e}, {"level", a.levels}, {"member", static_cast<bool>(decoded[a.e])}};
  j["agree"] = agree;
  io.out << dump(j);
  return agree ? kExitOk : kExitDisagreement;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
                std::optional<std::string> budget) {
  CLI::App app{"Perfect-matching gadgets, matching analysis and verification", "matchgadget"};
  app.require_subcommand(1);

  CompileArgs compile;
  auto* compile_cmd = app.add_subcommand("compile", "Compile a formula into a coding graph");
  compile_cmd->add_option("formula", compile.formula, "Formula, e.g. \"(T&!@0)\"")->required();
  compile_cmd->add_option("--env", compile.env, "Atom values as a 0/1 string");
  compile_cmd->add_option("--out", compile.out, "Graph JSON output (- for stdout)");
  compile_cmd->add_option("--dot", compile.dot, "DOT output (- for stdout)");

  std::string graph_path, algo = "blossom", matching_path;
  bool full_count = false;
  auto* match_cmd = app.add_subcommand("match", "Maximum matching of a graph");
  match_cmd->add_option("graph", graph_path, "Graph JSON (- for stdin)")->required();
  match_cmd->add_option("--algo", algo, "blossom or brute")->check(CLI::IsMember({"blossom", "brute"}));

  auto* verify_cmd = app.add_subcommand("verify", "Check perfect-matching uniqueness and decode");
  verify_cmd->add_option("graph", graph_path, "Graph JSON (- for stdin)")->required();
  verify_cmd->add_flag("--full-count", full_count, "Count all perfect matchings up to the budget");

  auto* analyze_cmd = app.add_subcommand("analyze", "Condition (A), independence, MIM, MM and star report");
  analyze_cmd->add_option("graph", graph_path, "Graph JSON (- for stdin)")->required();
  analyze_cmd->add_option("--matching", matching_path, "Matching JSON to test for independence");

  auto* gadget_cmd = app.add_subcommand("gadget", "Emit a standalone gadget");
  gadget_cmd->require_subcommand(1);

  DoublingArgs doubling;
  auto* doubling_cmd = gadget_cmd->add_subcommand("doubling-tree", "Doubled tree");
  auto* nodes_opt = doubling_cmd->add_option("--nodes", doubling.nodes, "Semicolon-separated addresses, e.g. \"0;1;0.0\"");
  auto* arity_opt = doubling_cmd->add_option("--arity", doubling.arity, "Complete tree arity");
  auto* depth_opt = doubling_cmd->add_option("--depth", doubling.depth, "Complete tree depth");
  auto* path_opt = doubling_cmd->add_option("--path", doubling.path, "Also emit the matching of the root path ending here");
  doubling_cmd->add_option("--out", doubling.out, "Graph JSON output (- for stdout)");
  doubling_cmd->add_option("--dot", doubling.dot, "DOT output (- for stdout)");
  nodes_opt->excludes(arity_opt)->excludes(depth_opt);
  arity_opt->needs(depth_opt);
  depth_opt->needs(arity_opt);

  std::size_t length = 0;
  std::string gadget_out = "-", gadget_dot;
  auto* sep_cmd = gadget_cmd->add_subcommand("sep-path", "Odd path with a marked center edge");
  sep_cmd->add_option("--length", length, "Number of edges (odd)")->required();
  sep_cmd->add_option("--out", gadget_out, "Graph JSON output (- for stdout)");
  sep_cmd->add_option("--dot", gadget_dot, "DOT output (- for stdout)");

  std::uint64_t range_n = 0;
  bool in_range = false;
  auto* range_cmd = gadget_cmd->add_subcommand("range", "One component of the range construction");
  range_cmd->add_option("--n", range_n, "Component index")->required();
  range_cmd->add_flag("--in-range", in_range, "n is in the range");
  range_cmd->add_option("--out", gadget_out, "Graph JSON output (- for stdout)");
  range_cmd->add_option("--dot", gadget_dot, "DOT output (- for stdout)");

  auto* demo_cmd = app.add_subcommand("demo", "Demonstrations");
  demo_cmd->require_subcommand(1);
  JumpArgs jump;
  auto* jump_cmd = demo_cmd->add_subcommand("jump", "Bounded jump hierarchy from an oracle table");
  jump_cmd->add_option("--oracle", jump.oracle, "Oracle table JSON (- for stdin)")->required();
  jump_cmd->add_option("--e", jump.e, "Queried index")->required();
  jump_cmd->add_option("--width", jump.width, "Indices per level")->required()->check(CLI::Range(1, 12));
  jump_cmd->add_option("--levels", jump.levels, "Number of jumps")->required();
  jump_cmd->add_option("--bound", jump.bound, "Step bound N")->required();
  jump_cmd->add_option("--x0", jump.x0, "Base set as a 0/1 string");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    Io io{in, out, std::nullopt};
    if (budget) io.budget = parse_budget(*budget);

    if (*compile_cmd) return run_compile(compile, io);
    if (*match_cmd) return run_match(graph_path, algo, io);
    if (*verify_cmd) return run_verify(graph_path, full_count, io);
    if (*analyze_cmd) return run_analyze(graph_path, matching_path, io);
    if (*doubling_cmd) {
      if (doubling.nodes.empty() && !*arity_opt) malformed("doubling-tree needs --nodes or --arity/--depth");
      doubling.has_path = path_opt->count() > 0;
      return run_doubling(doubling, io);
    }
    if (*sep_cmd) return run_sep_path(length, gadget_out, gadget_dot, io);
    if (*range_cmd) return run_range(range_n, in_range, gadget_out, gadget_dot, io);
    if (*jump_cmd) return run_jump(jump, io);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}

}  // namespace matchgadget::cli
