#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "brute_force.hpp"
#include "graph_corpus.hpp"

namespace mg = matchgadget;
namespace brute = matchgadget::testing::brute;

namespace {

// Smallest edge list over all relabelings; only usable for tiny n.
std::vector<mg::Edge> slow_canonical(const mg::Graph& g) {
  std::vector<mg::Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<mg::Edge> best;
  bool first = true;
  do {
    std::vector<mg::Edge> relabeled;
    for (const mg::Edge& e : g.edges()) relabeled.emplace_back(perm[e.u], perm[e.v]);
    std::sort(relabeled.begin(), relabeled.end());
    if (first || relabeled < best) best = relabeled;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST(GraphCorpus, ClassCountsOnSmallVertexSets) {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (std::size_t n = 0; n < 8; ++n) EXPECT_EQ(mg::testing::nonisomorphic_graphs(n).size(), expected[n]) << n;
}

TEST(GraphCorpus, RepresentativesArePairwiseNonisomorphic) {
  for (std::size_t n = 0; n <= 6; ++n) {
    std::set<std::vector<mg::Edge>> seen;
    for (const mg::Graph& g : mg::testing::nonisomorphic_graphs(n)) {
      ASSERT_EQ(g.vertex_count(), n);
      ASSERT_TRUE(seen.insert(slow_canonical(g)).second);
    }
  }
}

TEST(TreeCorpus, RootedTreeCounts) {
  const std::size_t expected[] = {1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842, 4766};
  for (std::size_t n = 1; n <= 12; ++n) {
    auto trees = mg::testing::rooted_trees(n);
    EXPECT_EQ(trees.size(), expected[n - 1]) << n;
    for (const mg::Tree& t : trees) ASSERT_EQ(t.size(), n);
  }
}

TEST(Brute, KnownCounts) {
  EXPECT_EQ(brute::perfect_matchings(mg::testing::complete_graph(4)).size(), 3u);
  EXPECT_EQ(brute::perfect_matchings(mg::testing::complete_graph(6)).size(), 15u);
  EXPECT_EQ(brute::matchings(mg::testing::complete_graph(4)).size(), 10u);
  EXPECT_EQ(brute::maximum_matching_size(mg::testing::path_graph(5)), 2u);
  EXPECT_EQ(brute::longest_simple_path(mg::testing::cycle_graph(6)), 5u);
  EXPECT_FALSE(brute::condition_A(mg::testing::path_graph(3)));
  EXPECT_TRUE(brute::condition_A(mg::testing::cycle_graph(4)));
}
