#include <algorithm>

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "hubs/corpus.hpp"
#include "hubs/cuts.hpp"
#include "hubs/extremal.hpp"
#include "hubs/io.hpp"
#include "hubs/minimality.hpp"
#include "hubs/oracle.hpp"

namespace hubs {
namespace {

TEST(ConsistentCycle, GridHasNone) {
  for (int c1 = 1; c1 <= 4; ++c1) {
    for (int c2 = 1; c2 <= 4; ++c2) {
      const Document d = grid_graph(c1, c2);
      EXPECT_FALSE(find_consistent_cycle(d.network, d.systems, 0).has_value());
      EXPECT_FALSE(find_consistent_cycle(d.network, d.systems, 1).has_value());
    }
  }
}

TEST(ConsistentCycle, ChordClosesAForwardLoop) {
  Document d = grid_graph(2, 2);
  // phi_1 runs S1 -> 4 -> 5 -> 6 -> 7 -> R1; a chord 7 - 4 closes 4..7.
  const EdgeId chord = d.network.add_edge(7, 4, false);
  const auto cycle = find_consistent_cycle(d.network, d.systems, 0);
  ASSERT_TRUE(cycle.has_value());
  EXPECT_NO_THROW(validate_cycle(d.network, d.systems, *cycle));
  bool uses_chord = false;
  for (const Step& s : cycle->steps) uses_chord = uses_chord || s.edge == chord;
  EXPECT_TRUE(uses_chord);
}

TEST(ConsistentCycle, DisjointSystemsHaveNone) {
  const auto c = testing::crossing();
  EXPECT_FALSE(find_consistent_cycle(c.g, c.systems, 0).has_value());
  EXPECT_FALSE(find_consistent_cycle(c.g, c.systems, 1).has_value());
}

TEST(ConsistentCycle, ValidateRejectsWrongDirection) {
  Document d = grid_graph(2, 2);
  d.network.add_edge(7, 4, false);
  auto cycle = *find_consistent_cycle(d.network, d.systems, 0);
  std::reverse(cycle.steps.begin(), cycle.steps.end());
  for (Step& s : cycle.steps) s.forward = !s.forward;
  EXPECT_THROW(validate_cycle(d.network, d.systems, cycle), Error);
}

TEST(Reroutable, WitnessThirdPair) {
  const Document d = reroutable_witness();
  EXPECT_FALSE(is_reroutable(d.network, d.systems, 0));
  EXPECT_FALSE(is_reroutable(d.network, d.systems, 1));
  EXPECT_TRUE(is_reroutable(d.network, d.systems, 2));
}

TEST(Reroutable, SinglePathIsUnique) {
  Network g;
  for (int k = 0; k < 3; ++k) g.add_vertex();
  g.add_pair(0, 1, 1);
  const EdgeId a = g.add_edge(0, 2, true), b = g.add_edge(2, 1, true);
  EXPECT_FALSE(is_reroutable(g, {PathSystem(0, {testing::forward({a, b})})}, 0));
}

TEST(Reroutable, GridMatchesEnumeration) {
  for (int c1 = 1; c1 <= 3; ++c1) {
    for (int c2 = 1; c2 <= 3; ++c2) {
      const Document d = grid_graph(c1, c2);
      for (int i = 0; i < 2; ++i) {
        EXPECT_FALSE(is_reroutable(d.network, d.systems, i));
        EXPECT_EQ(enumerate_path_systems(d.network, i).size(), 1u);
      }
    }
  }
}

TEST(Minimal, KnownGraphs) {
  EXPECT_TRUE(is_minimal(grid_graph(3, 3).network));
  EXPECT_TRUE(is_minimal(ones_graph(2, 2, 2).network));
  EXPECT_EQ(hub_count(ones_graph(2, 2, 2).network).value, 12);
  Network g = grid_graph(2, 2).network;
  g.add_edge(4, 5, false);  // parallel to the shared lambda-mu edge
  EXPECT_FALSE(is_minimal(g));
  Network out = grid_graph(2, 2).network;
  out.remove_edge(0);
  try {
    is_minimal(out);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "not-in-class");
  }
}

TEST(Minimal, SerialAndParallelAgree) {
  for (const CorpusInstance& inst : random_corpus({2, 2}, 60, 17)) {
    EXPECT_EQ(is_minimal(inst.planted.network), is_minimal_serial(inst.planted.network));
    EXPECT_EQ(is_minimal(inst.covered), is_minimal_serial(inst.covered));
  }
}

TEST(Minimalize, FixpointOnMinimalGraphs) {
  const Network g = grid_graph(3, 2).network;
  EXPECT_TRUE(minimalize(g) == g);
  EXPECT_TRUE(minimalize(g, 5) == g);
}

TEST(Minimalize, ChordedGridReturnsToEightHubs) {
  Network g = grid_graph(2, 2).network;
  g.add_edge(4, 5, false);
  g.add_edge(5, 9, false);
  g.add_edge(7, 10, false);
  ASSERT_TRUE(in_class(g));
  for (std::optional<std::uint64_t> seed : {std::optional<std::uint64_t>{}, std::optional<std::uint64_t>{3}}) {
    const Network m = minimalize(g, seed);
    EXPECT_TRUE(is_minimal(m));
    EXPECT_LE(hub_count(m).value, 8);
  }
}

TEST(Minimalize, SinglePairLeavesNoHubs) {
  for (int c = 1; c <= 4; ++c) {
    for (const CorpusInstance& inst : random_corpus({c}, 25, 40 + c)) {
      const Network m = minimalize(inst.planted.network, inst.seed);
      EXPECT_TRUE(in_class(m));
      EXPECT_EQ(hub_count(m).value, 0) << "seed " << inst.seed;
    }
  }
}

TEST(MinimalizeProperty, NeverAddsHubsAndIsMinimal) {
  for (const std::vector<int>& demands : {std::vector<int>{2, 2}, {3, 2}, {2, 1, 1}}) {
    for (const CorpusInstance& inst : random_corpus(demands, 40, 9)) {
      const Network m = minimalize(inst.planted.network, inst.seed);
      EXPECT_TRUE(is_minimal(m));
      EXPECT_LE(hub_count(m).value, hub_count(inst.planted.network).value);
    }
  }
}

TEST(Equivalence, GridsAgreeAllTrue) {
  for (int c1 = 1; c1 <= 4; ++c1) {
    for (int c2 = 1; c2 <= 4; ++c2) {
      const Document d = grid_graph(c1, c2);
      const Theorem1Report r = theorem1_agreement(d.network, d.systems);
      EXPECT_TRUE(r.minimal && r.non_reroutable && r.no_consistent_cycle && r.agree);
    }
  }
}

TEST(Equivalence, CoveredChordAgreesAllFalse) {
  // grid(2,2) plus a parallel shared edge carried by psi_1.
  Document d = grid_graph(2, 2);
  const EdgeId extra = d.network.add_edge(4, 5, false);
  std::vector<Path> psi = d.systems[1].paths();
  for (Step& s : psi[0].steps) {
    if (s.edge == d.systems[0].paths()[0].steps[1].edge) s.edge = extra;
  }
  const std::vector<PathSystem> systems{d.systems[0], PathSystem(1, psi)};
  ASSERT_TRUE(covered_by(d.network, systems));
  const Theorem1Report r = theorem1_agreement(d.network, systems);
  EXPECT_FALSE(r.minimal);
  EXPECT_FALSE(r.non_reroutable);
  EXPECT_FALSE(r.no_consistent_cycle);
  EXPECT_TRUE(r.agree);
}

TEST(Equivalence, RejectsThreePairs) {
  const Document d = witness_222();
  try {
    theorem1_agreement(d.network, d.systems);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "out-of-contract");
  }
}

TEST(Equivalence, DeletablePrivateEdgeWhenReroutable) {
  int reroutable = 0;
  for (const CorpusInstance& inst : random_corpus({2, 2}, 150, 23)) {
    const Network& g = inst.covered;
    const auto& systems = inst.planted.systems;
    for (int i = 0; i < 2; ++i) {
      if (!is_reroutable(g, systems, i)) continue;
      ++reroutable;
      const auto e = deletable_private_edge(g, systems, i);
      ASSERT_TRUE(e.has_value()) << "seed " << inst.seed;
      EXPECT_TRUE(in_class(g.without_edge(*e)));
      const auto tags = classify_edges(g, systems);
      EXPECT_EQ(tags.at(*e).kind, EdgeClass::private_edge);
      EXPECT_EQ(tags.at(*e).owner, i);
    }
  }
  EXPECT_GT(reroutable, 20);
}

// Frozen corpus instance (demands 3,2): minimal and non-reroutable, yet the
// cycle 12 -> 6 -> 15 -> 11 -> 12 keeps every phi edge forward. It passes
// vertex 15 of phi_3 on two psi edges, so no rerouting follows from it.
TEST(Equivalence, CycleThroughForeignPathVertexOnMinimalGraph) {
  const Document doc = read_network_file(HUBS_FIXTURES "/degenerate_cycle_32.json");
  const Network& g = doc.network;
  const auto& systems = doc.systems;
  const Theorem1Report r = theorem1_agreement(g, systems);
  EXPECT_TRUE(r.minimal);
  EXPECT_TRUE(r.non_reroutable);
  ASSERT_TRUE(r.cycles[0].has_value());
  validate_cycle(g, systems, *r.cycles[0]);
  EXPECT_FALSE(r.agree);
  // Exhaustive confirmation of the first two predicates.
  for (EdgeId e : g.edge_ids()) {
    const Network h = g.without_edge(e);
    EXPECT_TRUE(brute_force_cut(h, 0) < 3 || brute_force_cut(h, 1) < 2);
  }
  EXPECT_EQ(enumerate_path_systems(g, 0).size(), 1u);
  EXPECT_EQ(enumerate_path_systems(g, 1).size(), 1u);
}

}  // namespace
}  // namespace hubs
