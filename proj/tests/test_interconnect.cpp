#include <algorithm>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "hubs/corpus.hpp"
#include "hubs/cuts.hpp"
#include "hubs/extremal.hpp"
#include "hubs/interconnect.hpp"
#include "hubs/minimality.hpp"
#include "json.hpp"

namespace hubs {
namespace {

struct Prepared {
  Representation rep;
  Decomposition dec;
};

Prepared prepare(const Document& d) {
  Representation rep = to_representation(d.network, d.systems);
  Decomposition dec = decompose_private(rep);
  return {std::move(rep), std::move(dec)};
}

int occupied_hubs(const Network& g, const InterconnectRun& run) {
  int n = 0;
  for (VertexId v : g.vertices()) n += !g.is_terminal(v) && g.degree(v) >= 3 && run.occupied[v];
  return n;
}

TEST(Interconnect, ExampleFindsTwoPaths) {
  const Prepared p = prepare(example_graph());
  const InterconnectRun run = run_interconnect(p.rep, p.dec);
  EXPECT_EQ(run.delta, 2);
  EXPECT_EQ(run.paths.size(), 2u);
  EXPECT_EQ(run.iterations, 2);
  EXPECT_EQ(occupied_hubs(p.rep.graph, run), 8);
  const VerifyReport v = verify_run(p.rep, p.dec, run);
  EXPECT_TRUE(v.ok()) << (v.failures.empty() ? "" : v.failures.front());
}

TEST(Interconnect, GridBoundIsTight) {
  for (int c1 = 1; c1 <= 5; ++c1) {
    for (int c2 = 1; c2 <= 5; ++c2) {
      const Prepared p = prepare(grid_graph(c1, c2));
      const InterconnectRun run = run_interconnect(p.rep, p.dec);
      const VerifyReport v = verify_run(p.rep, p.dec, run);
      EXPECT_TRUE(v.ok()) << c1 << "," << c2 << ": " << (v.failures.empty() ? "" : v.failures.front());
      const int delta = std::min(c1, c2);
      EXPECT_EQ(run.delta, delta);
      EXPECT_EQ(hub_count(p.rep.graph).value, 2 * delta * (c1 + c2 - delta));
      EXPECT_EQ(occupied_hubs(p.rep.graph, run), 2 * c1 * c2);
    }
  }
}

TEST(Interconnect, NoSharedEdgesMeansNoPaths) {
  Network g;
  for (int k = 0; k < 6; ++k) g.add_vertex();
  g.add_pair(0, 1, 1);
  g.add_pair(2, 3, 1);
  const EdgeId a = g.add_edge(0, 4, true), b = g.add_edge(4, 1, true);
  const EdgeId c = g.add_edge(2, 5, true), d = g.add_edge(5, 3, true);
  const Document doc{g, {PathSystem(0, {Path{{{a, true}, {b, true}}}}), PathSystem(1, {Path{{{c, true}, {d, true}}}})}};
  const Prepared p = prepare(doc);
  const InterconnectRun run = run_interconnect(p.rep, p.dec);
  EXPECT_EQ(run.delta, 0);
  EXPECT_TRUE(run.paths.empty());
  EXPECT_EQ(hub_count(p.rep.graph).value, 0);
  EXPECT_TRUE(verify_run(p.rep, p.dec, run).ok());
}

TEST(Interconnect, PostconditionsHoldForEveryStartOrder) {
  for (const Document& d : {example_graph(), grid_graph(3, 3), grid_graph(2, 4)}) {
    const Prepared p = prepare(d);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      InterconnectOptions options;
      options.seed = seed;
      const InterconnectRun run = run_interconnect(p.rep, p.dec, options);
      EXPECT_TRUE(verify_run(p.rep, p.dec, run).ok()) << "seed " << seed;
    }
  }
}

TEST(Interconnect, TraceIsJsonLines) {
  const Prepared p = prepare(grid_graph(3, 3));
  const InterconnectRun run = run_interconnect(p.rep, p.dec);
  std::istringstream in(trace_json_lines(run));
  std::string line;
  std::set<std::string> steps;
  int stores = 0;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    ASSERT_TRUE(j.contains("iteration") && j.contains("step") && j.contains("action") && j.contains("vertices"));
    steps.insert(j["step"].get<std::string>());
    stores += j["action"] == "store";
    ++lines;
  }
  EXPECT_EQ(lines, run.trace.size());
  EXPECT_EQ(stores, run.delta);
  EXPECT_TRUE(steps.count("STEP 2") && steps.count("STEP 6"));
}

TEST(Interconnect, TraceCanBeSkipped) {
  const Prepared p = prepare(grid_graph(2, 2));
  InterconnectOptions options;
  options.record_trace = false;
  const InterconnectRun run = run_interconnect(p.rep, p.dec, options);
  EXPECT_TRUE(run.trace.empty());
  EXPECT_EQ(run.paths.size(), 2u);
}

// Switch events record the depth d; replay checks each switch rebuilt paths
// that remain vertex-disjoint at the end of the run.
TEST(Interconnect, PathsAreVertexDisjoint) {
  const Prepared p = prepare(grid_graph(4, 3));
  const InterconnectRun run = run_interconnect(p.rep, p.dec);
  std::set<VertexId> seen;
  for (const InterconnectingPath& path : run.paths) {
    for (VertexId v : path.vertices) EXPECT_TRUE(seen.insert(v).second);
  }
}

TEST(InterconnectProperty, RandomMinimalRepresentations) {
  int verified = 0, switches = 0;
  for (int c1 = 1; c1 <= 3; ++c1) {
    for (int c2 = 1; c2 <= 3; ++c2) {
      for (const CorpusInstance& inst : random_corpus({c1, c2}, 25, 1000 + 7 * c1 + c2)) {
        const Network m = minimalize(inst.planted.network, inst.seed);
        const Representation rep = to_representation(m, demand_systems(m));
        if (!is_minimal(rep.graph)) continue;
        const Decomposition dec = decompose_private(rep);
        InterconnectOptions options;
        options.seed = inst.seed;
        const InterconnectRun run = run_interconnect(rep, dec, options);
        const VerifyReport v = verify_run(rep, dec, run);
        EXPECT_TRUE(v.ok()) << "seed " << inst.seed << ": " << (v.failures.empty() ? "" : v.failures.front());
        for (const InterconnectEvent& ev : run.trace) switches += ev.action == "switch";
        ++verified;
      }
    }
  }
  EXPECT_GT(verified, 200);
  EXPECT_GT(switches, 0);
}

}  // namespace
}  // namespace hubs
