// Serial reference vs OpenMP kernels. Usage: bench_kernels [repeats]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "formula_corpus.hpp"
#include "graph_corpus.hpp"
#include "matchgadget/analysis.hpp"
#include "matchgadget/matching.hpp"
#include "matchgadget/verifier.hpp"

namespace mg = matchgadget;

static double best_of(int repeats, const std::function<void()>& fn) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

static void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms);
}

int main(int argc, char** argv) {
  int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d, best of %d\n", omp_get_max_threads(), repeats);

  mg::Graph k11 = mg::testing::complete_graph(12);
  std::size_t sink = 0;
  report("enumerate_matchings K12",
         best_of(repeats, [&] { sink += mg::reference::enumerate_matchings(k11, 100'000'000).matchings.size(); }),
         best_of(repeats, [&] { sink += mg::enumerate_matchings(k11, 100'000'000).matchings.size(); }));

  auto corpus = mg::testing::random_formula_corpus(17, 400);
  report("verify_corpus 400 formulas", best_of(repeats, [&] { sink += mg::reference::verify_corpus(corpus).size(); }),
         best_of(repeats, [&] { sink += mg::verify_corpus(corpus).size(); }));

  auto graphs = mg::testing::random_graphs(23, 4000, 20, 60);
  report("sequential_pm 4000 graphs", best_of(repeats, [&] { sink += mg::reference::sequential_pm(graphs).size(); }),
         best_of(repeats, [&] { sink += mg::sequential_pm(graphs).size(); }));

  auto small = mg::testing::random_graphs(29, 300, 8, 10);
  double brute = best_of(repeats, [&] {
    for (const auto& g : small) {
      std::size_t best = 0;
      for (const auto& m : mg::enumerate_matchings(g, 100'000'000).matchings) best = std::max(best, m.size());
      sink += best;
    }
  });
  double blossom = best_of(repeats, [&] {
    for (const auto& g : small) sink += mg::maximum_matching(g).size();
  });
  std::printf("%-28s brute  %9.2f ms   blossom  %9.2f ms\n", "maximum matching 300 graphs", brute, blossom);
  return sink == 0 ? 1 : 0;
}
