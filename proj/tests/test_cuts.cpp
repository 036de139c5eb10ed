#include <gtest/gtest.h>

#include "helpers.hpp"
#include "hubs/corpus.hpp"
#include "hubs/cuts.hpp"
#include "hubs/extremal.hpp"
#include "hubs/oracle.hpp"

namespace hubs {
namespace {

TEST(Cuts, GridCutsEqualDemands) {
  for (int c1 = 1; c1 <= 4; ++c1) {
    for (int c2 = 1; c2 <= 4; ++c2) {
      const Network g = grid_graph(c1, c2).network;
      EXPECT_EQ(min_vertex_cut(g, 0).value, c1);
      EXPECT_EQ(min_vertex_cut(g, 1).value, c2);
      EXPECT_TRUE(in_class(g));
    }
  }
}

TEST(Cuts, SeparatorDisconnectsThePair) {
  const Network g = grid_graph(3, 2).network;
  const CutResult cut = min_vertex_cut(g, 0);
  ASSERT_EQ(static_cast<int>(cut.separator.size()), cut.value);
  Network h = g;
  for (VertexId v : cut.separator) h.remove_vertex(v);
  EXPECT_EQ(max_disjoint_paths(h, 0), 0);
}

TEST(Cuts, DirectEdgesCountOneEach) {
  Network g;
  for (int k = 0; k < 3; ++k) g.add_vertex();
  g.add_pair(0, 1, 3);
  g.add_edge(0, 1, true);
  g.add_edge(0, 1, true);
  g.add_edge(0, 2, true);
  g.add_edge(2, 1, true);
  const CutResult cut = min_vertex_cut(g, 0);
  EXPECT_EQ(cut.value, 3);
  EXPECT_EQ(cut.direct_edges, 2);
  EXPECT_EQ(cut.separator, std::vector<VertexId>{2});
  EXPECT_EQ(brute_force_cut(g, 0), 3);
}

TEST(Cuts, DisconnectedPairHasCutZero) {
  Network g;
  for (int k = 0; k < 2; ++k) g.add_vertex();
  g.add_pair(0, 1, 1);
  EXPECT_EQ(min_vertex_cut(g, 0).value, 0);
  EXPECT_FALSE(in_class(g));
  EXPECT_FALSE(vertex_disjoint_paths(g, 0, 1).has_value());
}

TEST(Cuts, ExcessConnectivityIsOutOfClass) {
  Network g = grid_graph(1, 1).network;
  g.add_edge(0, g.add_vertex(), true);
  const VertexId extra = g.vertex_bound() - 1;
  g.add_edge(extra, 1, true);
  EXPECT_EQ(min_vertex_cut(g, 0).value, 2);
  EXPECT_FALSE(in_class(g));
}

TEST(Cuts, DemandSystemsAreValid) {
  const Document d = witness_222();
  const auto systems = demand_systems(d.network);
  ASSERT_EQ(systems.size(), 3u);
  for (const PathSystem& s : systems) EXPECT_NO_THROW(validate_system(d.network, s));
  Network out = d.network;
  out.remove_edge(0);
  EXPECT_THROW(demand_systems(out), Error);
}

// Flow cut against subset enumeration on random graphs.
TEST(CutsProperty, FlowMatchesBruteForce) {
  CorpusOptions opts;
  opts.max_interior = 10;
  int checked = 0;
  for (const std::vector<int>& demands : {std::vector<int>{2, 2}, {3, 1}, {1, 2, 2}, {3}}) {
    for (const CorpusInstance& inst : random_corpus(demands, 40, 101, opts)) {
      const Network& g = inst.planted.network;
      for (int i = 0; i < g.num_pairs(); ++i) {
        ASSERT_EQ(min_vertex_cut(g, i).value, brute_force_cut(g, i)) << "seed " << inst.seed;
        Network h = g;
        h.remove_edge(h.edge_ids().front());
        ASSERT_EQ(min_vertex_cut(h, i).value, brute_force_cut(h, i)) << "seed " << inst.seed;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 300);
}

TEST(CutsProperty, PathsAreDisjointAndOrdered) {
  for (const CorpusInstance& inst : random_corpus({3, 2}, 50, 5)) {
    const Network& g = inst.planted.network;
    for (int i = 0; i < 2; ++i) {
      const auto s = vertex_disjoint_paths(g, i, g.pair(i).demand);
      ASSERT_TRUE(s.has_value());
      validate_system(g, *s);
      for (std::size_t k = 1; k < s->paths().size(); ++k) {
        EXPECT_LT(s->paths()[k - 1].steps.front().edge, s->paths()[k].steps.front().edge);
      }
      EXPECT_FALSE(vertex_disjoint_paths(g, i, g.pair(i).demand + 1).has_value());
    }
  }
}

}  // namespace
}  // namespace hubs
