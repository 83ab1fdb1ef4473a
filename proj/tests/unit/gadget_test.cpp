#include <gtest/gtest.h>

#include <algorithm>

#include "brute_force.hpp"
#include "formula_corpus.hpp"
#include "matchgadget/gadget.hpp"
#include "matchgadget/matching.hpp"
#include "matchgadget/verifier.hpp"

namespace mg = matchgadget;
namespace brute = matchgadget::testing::brute;
using mg::CodingGraph;
using mg::Connective;
using mg::Edge;
using mg::ErrorCode;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const mg::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::MalformedInput;
}

mg::Vertex find_label(const CodingGraph& g, const std::string& label) {
  auto labels = g.labels();
  auto it = std::find(labels.begin(), labels.end(), label);
  EXPECT_NE(it, labels.end()) << label;
  return static_cast<mg::Vertex>(it - labels.begin());
}

// The single perfect matching, by the naive oracle.
mg::Matching unique_pm(const CodingGraph& g) {
  auto pms = brute::perfect_matchings(g.graph());
  EXPECT_EQ(pms.size(), 1u);
  return pms.empty() ? mg::Matching{} : pms.front();
}

bool decodes(const CodingGraph& g) {
  EXPECT_TRUE(mg::is_well_formed(g));
  return mg::decode_truth(g, unique_pm(g));
}

const CodingGraph kTrue = mg::compile_true();
const CodingGraph kFalse = mg::compile_not(mg::compile_true());

}  // namespace

TEST(CompileTrue, Shape) {
  const CodingGraph& g = kTrue;
  EXPECT_EQ(g.graph().vertex_count(), 6u);
  EXPECT_EQ(g.graph().edge_count(), 6u);
  mg::Vertex l = g.l(), r = g.r(), c = g.c();
  mg::Vertex x = find_label(g, "x"), y = find_label(g, "y"), z = find_label(g, "z");
  for (auto [a, b] : {std::pair{l, x}, {x, y}, {y, r}, {r, c}, {c, l}, {y, z}}) EXPECT_TRUE(g.graph().adjacent(a, b));
  EXPECT_EQ(unique_pm(g), mg::Matching({Edge(l, x), Edge(r, c), Edge(y, z)}));
  EXPECT_TRUE(decodes(g));
}

TEST(CompileNot, OfTrue) {
  const CodingGraph& g = kFalse;
  EXPECT_EQ(g.graph().vertex_count(), 8u);
  mg::Vertex y = find_label(g, "n/y"), z = find_label(g, "n/z"), x = find_label(g, "n/x");
  mg::Vertex old_l = find_label(g, "n/l"), old_r = find_label(g, "n/r");
  mg::Matching expected({Edge(y, z), Edge(x, old_l), Edge(old_r, g.r()), Edge(g.c(), g.l())});
  EXPECT_EQ(unique_pm(g), expected);
  EXPECT_FALSE(decodes(g));
}

TEST(CompileNot, DoubleNegation) { EXPECT_TRUE(decodes(mg::compile_not(kFalse))); }

TEST(CompileNot, MissingMark) {
  CodingGraph unmarked(kTrue.graph(), mg::Marks{kTrue.l(), kTrue.r(), std::nullopt});
  EXPECT_EQ(code_of([&] { mg::compile_not(unmarked); }), ErrorCode::MalformedCodingGraph);
}

TEST(CompileAndNot, Examples) {
  EXPECT_FALSE(decodes(mg::compile_andnot(kTrue, kTrue)));
  EXPECT_TRUE(decodes(mg::compile_andnot(kFalse, kTrue)));
  EXPECT_FALSE(decodes(mg::compile_andnot(kTrue, kFalse)));
  EXPECT_FALSE(decodes(mg::compile_andnot(kFalse, kFalse)));
}

TEST(CompileAndNot, EightCycle) {
  CodingGraph g = mg::compile_andnot(kTrue, kTrue);
  std::vector<mg::Vertex> cycle{find_label(g, "a/l"), find_label(g, "b/l"), find_label(g, "a/r"), find_label(g, "b/r"),
                                find_label(g, "rr"), g.r(), g.c(), g.l()};
  for (std::size_t i = 0; i < cycle.size(); ++i) EXPECT_TRUE(g.graph().adjacent(cycle[i], cycle[(i + 1) % cycle.size()]));
}

TEST(CompileConnective, Examples) {
  EXPECT_TRUE(decodes(mg::compile_connective(Connective::And, kTrue, kTrue)));
  EXPECT_FALSE(decodes(mg::compile_connective(Connective::Or, kFalse, kFalse)));
  EXPECT_FALSE(decodes(mg::compile_connective(Connective::Implies, kTrue, kFalse)));
}

TEST(CompileConnective, TruthTables) {
  for (bool a : {false, true}) {
    for (bool b : {false, true}) {
      const CodingGraph& ga = a ? kTrue : kFalse;
      const CodingGraph& gb = b ? kTrue : kFalse;
      EXPECT_EQ(decodes(mg::compile_connective(Connective::And, ga, gb)), a && b);
      EXPECT_EQ(decodes(mg::compile_connective(Connective::Or, ga, gb)), a || b);
      EXPECT_EQ(decodes(mg::compile_connective(Connective::Implies, ga, gb)), !a || b);
    }
  }
}

TEST(CompileExists, Examples) {
  std::vector<CodingGraph> mixed{kFalse, kTrue};
  std::vector<CodingGraph> none{kFalse, kFalse, kFalse};
  std::vector<CodingGraph> single{kTrue};
  EXPECT_TRUE(decodes(mg::compile_exists(mixed)));
  EXPECT_FALSE(decodes(mg::compile_exists(none)));
  EXPECT_TRUE(decodes(mg::compile_exists(single)));
  EXPECT_EQ(code_of([] { mg::compile_exists({}); }), ErrorCode::EmptyList);
}

TEST(CompileExists, DegenerateFalseSingleton) {
  std::vector<CodingGraph> single{kFalse};
  EXPECT_FALSE(decodes(mg::compile_exists(single)));
}

// The shared y is matched into the least-index branch that codes true.
TEST(CompileExists, RoutesThroughLeastTrueBranch) {
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<CodingGraph> list;
    for (unsigned i = 0; i < 4; ++i) list.push_back(((mask >> i) & 1U) ? kTrue : kFalse);
    CodingGraph g = mg::compile_exists(list);
    mg::Matching pm = unique_pm(g);
    mg::Vertex y = find_label(g, "y");
    auto mate = pm.mate(y);
    ASSERT_TRUE(mate.has_value());
    std::string label(g.labels()[*mate]);
    unsigned least = static_cast<unsigned>(__builtin_ctz(mask));
    EXPECT_EQ(label.substr(0, label.find('/')), "h" + std::to_string(least)) << "mask " << mask;
  }
}

TEST(CompileSet, Examples) {
  std::vector<CodingGraph> two{kTrue, kFalse};
  mg::SetCoding s = mg::compile_set(two);
  EXPECT_EQ(mg::decode_set(s), (std::vector<bool>{true, false}));
  EXPECT_EQ(mg::count_perfect_matchings(s.graph, 10).count, 1u);

  mg::SetCoding empty = mg::compile_set({});
  EXPECT_TRUE(empty.graph.empty());
  EXPECT_TRUE(mg::decode_set(empty).empty());

  std::vector<CodingGraph> three{kTrue, kTrue, kFalse};
  EXPECT_EQ(mg::decode_set(mg::compile_set(three)), (std::vector<bool>{true, true, false}));
}

TEST(CompileSet, UnionPmIsUnionOfComponentPms) {
  std::vector<CodingGraph> parts{kTrue, kFalse, kTrue};
  mg::SetCoding s = mg::compile_set(parts);
  auto whole = mg::count_perfect_matchings(s.graph, 10);
  ASSERT_EQ(whole.count, 1u);
  std::vector<Edge> expected;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    mg::Matching part = unique_pm(parts[i]);
    for (const Edge& e : part.edges()) expected.emplace_back(e.u + s.offsets[i], e.v + s.offsets[i]);
  }
  EXPECT_EQ(*whole.first, mg::Matching(expected));
  for (std::size_t i = 0; i < parts.size(); ++i) EXPECT_EQ(*s.marks[i].l, parts[i].l() + s.offsets[i]);
}

TEST(CompileFormula, Examples) {
  EXPECT_EQ(mg::compile_formula(mg::Formula::truth(), {}).graph(), kTrue.graph());
  std::vector<CodingGraph> env_true{kTrue};
  std::vector<CodingGraph> env_false{kFalse};
  EXPECT_FALSE(decodes(mg::compile_formula(mg::parse_formula("!@0"), env_true)));
  EXPECT_TRUE(decodes(mg::compile_formula(mg::parse_formula("E[@0,!@0]"), env_false)));
  EXPECT_EQ(code_of([] { mg::compile_formula(mg::parse_formula("@1"), {}); }), ErrorCode::UnboundAtom);
  EXPECT_EQ(code_of([] { mg::compile_formula(mg::Formula::exists({}), {}); }), ErrorCode::EmptyList);
}

TEST(CompileFormula, DeterministicLayout) {
  mg::Formula f = mg::parse_formula("E[(@0&T),!@1,(@1->F)]");
  std::vector<CodingGraph> env{kTrue, kFalse};
  CodingGraph a = mg::compile_formula(f, env);
  CodingGraph b = mg::compile_formula(f, env);
  EXPECT_EQ(a.graph(), b.graph());
  EXPECT_TRUE(std::equal(a.labels().begin(), a.labels().end(), b.labels().begin(), b.labels().end()));
}

TEST(CompileFormula, WellFormedAndSemanticNegationInvolution) {
  for (const auto& c : mg::testing::random_formula_corpus(31, 60, {3, 3, 3})) {
    std::vector<CodingGraph> env;
    for (bool b : c.env) env.push_back(mg::compile_constant(b));
    CodingGraph g = mg::compile_formula(c.formula, env);
    ASSERT_TRUE(mg::is_well_formed(g));
    CodingGraph twice = mg::compile_not(mg::compile_not(g));
    EXPECT_EQ(mg::decode_coding_graph(twice), mg::decode_coding_graph(g));
  }
}

TEST(CompileFormula, LongestPathWithinReportedBound) {
  std::vector<CodingGraph> small{kTrue, kFalse, mg::compile_not(kFalse), mg::compile_andnot(kTrue, kFalse)};
  std::vector<CodingGraph> pair{kFalse, kTrue};
  small.push_back(mg::compile_exists(pair));
  for (const CodingGraph& g : small) {
    EXPECT_LE(brute::longest_simple_path(g.graph()), g.path_length_bound());
  }
}

TEST(SeparationPath, Examples) {
  mg::SeparationPath one = mg::separation_path(1);
  EXPECT_EQ(one.graph.vertex_count(), 2u);
  EXPECT_EQ(one.center, Edge(0, 1));

  mg::SeparationPath five = mg::separation_path(5);
  EXPECT_EQ(five.center, Edge(2, 3));
  auto pm5 = brute::perfect_matchings(five.graph);
  ASSERT_EQ(pm5.size(), 1u);
  EXPECT_EQ(pm5[0], mg::Matching({Edge(0, 1), Edge(2, 3), Edge(4, 5)}));

  mg::SeparationPath three = mg::separation_path(3);
  EXPECT_EQ(three.center, Edge(1, 2));
  auto pm3 = brute::perfect_matchings(three.graph);
  ASSERT_EQ(pm3.size(), 1u);
  EXPECT_FALSE(pm3[0].contains(three.center));

  EXPECT_EQ(code_of([] { mg::separation_path(4); }), ErrorCode::EvenLength);
}

TEST(SeparationPath, ResidueRule) {
  for (std::size_t len = 1; len <= 19; len += 2) {
    mg::SeparationPath p = mg::separation_path(len);
    auto pms = brute::perfect_matchings(p.graph);
    ASSERT_EQ(pms.size(), 1u);
    EXPECT_EQ(pms[0].contains(p.center), len % 4 == 1) << len;
  }
}

TEST(RangeGadget, Examples) {
  mg::RangeGadget out = mg::range_gadget(0, false);
  EXPECT_EQ(out.labels, (std::vector<std::uint64_t>{0, 2}));
  auto pm_out = brute::perfect_matchings(out.graph);
  ASSERT_EQ(pm_out.size(), 1u);
  EXPECT_TRUE(pm_out[0].contains(out.center));

  mg::RangeGadget in = mg::range_gadget(0, true);
  auto pm_in = brute::perfect_matchings(in.graph);
  ASSERT_EQ(pm_in.size(), 1u);
  EXPECT_FALSE(pm_in[0].contains(in.center));
  // PM is {j,0} and {2,k} in construction numbering.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> labelled;
  for (const Edge& e : pm_in[0].edges()) {
    auto a = in.labels[e.u], b = in.labels[e.v];
    labelled.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(labelled.begin(), labelled.end());
  EXPECT_EQ(labelled, (std::vector<std::pair<std::uint64_t, std::uint64_t>>{{0, 1}, {2, 3}}));

  mg::RangeGadget three = mg::range_gadget(3, true);
  EXPECT_EQ(three.labels[three.center.u], 12u);
  EXPECT_EQ(three.labels[three.center.v], 14u);
}
