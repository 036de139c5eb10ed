#include <gtest/gtest.h>

#include "hubs/corpus.hpp"
#include "hubs/cuts.hpp"
#include "hubs/extremal.hpp"
#include "hubs/minimality.hpp"
#include "hubs/oracle.hpp"

namespace hubs {
namespace {

CorpusOptions small() {
  CorpusOptions o;
  o.max_interior = 8;
  o.max_chords = 2;
  return o;
}

TEST(Oracle, MinimalGraphIsItsOwnOptimum) {
  const OracleReport r = min_hub_subgraph(grid_graph(2, 2).network);
  EXPECT_EQ(r.min_hubs, 8);
  EXPECT_EQ(r.optional_edges, 0);
  EXPECT_EQ(r.num_minimal_subgraphs, 1);
}

TEST(Oracle, RedundantChordsAreDropped) {
  Network g = grid_graph(2, 2).network;
  g.add_edge(4, 5, false);
  g.add_edge(5, 9, false);
  const OracleReport r = min_hub_subgraph(g);
  EXPECT_LE(r.min_hubs, 8);
  EXPECT_TRUE(in_class(r.min_hub_subgraph));
  EXPECT_TRUE(is_minimal(r.min_hub_subgraph));
  EXPECT_EQ(hub_count(r.min_hub_subgraph).value, r.min_hubs);
  EXPECT_GT(r.num_feasible_subgraphs, r.num_minimal_subgraphs - 1);
}

TEST(Oracle, SerialAndParallelAgree) {
  for (const CorpusInstance& inst : random_corpus({2, 2}, 30, 77, small())) {
    const OracleReport a = min_hub_subgraph(inst.planted.network);
    const OracleReport b = min_hub_subgraph_serial(inst.planted.network);
    EXPECT_EQ(a.min_hubs, b.min_hubs);
    EXPECT_EQ(a.edges, b.edges);
    EXPECT_EQ(a.num_minimal_subgraphs, b.num_minimal_subgraphs);
    EXPECT_EQ(a.num_feasible_subgraphs, b.num_feasible_subgraphs);
  }
}

TEST(Oracle, NeverBeatsMinimalizeFromAbove) {
  for (const CorpusInstance& inst : random_corpus({2, 1}, 30, 78, small())) {
    const OracleReport r = min_hub_subgraph(inst.planted.network);
    EXPECT_LE(r.min_hubs, hub_count(minimalize(inst.planted.network, inst.seed)).value);
    EXPECT_LE(r.min_hubs, 4);
  }
}

TEST(Oracle, GuardsLargeInputs) {
  try {
    OracleOptions o;
    o.max_edges = 0;
    Network g = grid_graph(2, 2).network;
    g.add_edge(4, 5, false);
    min_hub_subgraph(g, o);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "oracle-guard");
  }
  EXPECT_THROW(brute_force_cut(grid_graph(4, 3).network, 0), Error);  // 24 interior vertices
}

TEST(Oracle, RejectsOutOfClass) {
  Network g = grid_graph(2, 2).network;
  g.remove_edge(0);
  EXPECT_THROW(min_hub_subgraph(g), Error);
}

TEST(Bound, TheoreticalValues) {
  EXPECT_EQ(theoretical_bound({5}), 0);
  EXPECT_EQ(theoretical_bound({3, 4}), 24);
  EXPECT_EQ(theoretical_bound({3, 2, 1, 1}), 2 * (6 + 2));
  EXPECT_EQ(theoretical_bound({1, 3, 2}), 2 * (6 + 1));
  EXPECT_EQ(theoretical_bound({2, 2, 2}), 12);
  EXPECT_EQ(theoretical_bound({2, 2, 3}), finiteness_bound({2, 2, 3}));
}

TEST(Bound, WitnessWithinTwelve) {
  const BoundCheck b = check_bound(witness_222().network);
  EXPECT_EQ(b.min_hubs, 12);
  EXPECT_TRUE(b.ok);
}

TEST(Enumeration, CountsMatchReroutability) {
  for (const CorpusInstance& inst : random_corpus({2, 2}, 40, 79, small())) {
    const Network& g = inst.planted.network;
    const auto systems = demand_systems(g);
    for (int i = 0; i < 2; ++i) {
      const auto all = enumerate_path_systems(g, i);
      EXPECT_GE(all.size(), 1u);
      for (const PathSystem& s : all) validate_system(g, s);
      EXPECT_EQ(all.size() > 1, is_reroutable(g, systems, i)) << "seed " << inst.seed;
    }
  }
}

}  // namespace
}  // namespace hubs
