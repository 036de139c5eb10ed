#include <algorithm>
#include <functional>

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "hubs/extremal.hpp"
#include "hubs/network.hpp"

namespace hubs {
namespace {

std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

TEST(Network, IdsAreNeverReused) {
  Network g;
  const VertexId a = g.add_vertex(), b = g.add_vertex(), c = g.add_vertex();
  const EdgeId e0 = g.add_edge(a, b, false);
  const EdgeId e1 = g.add_edge(b, c, false);
  g.remove_edge(e0);
  EXPECT_EQ(g.add_edge(a, c, false), e1 + 1);
  g.remove_vertex(c);
  EXPECT_EQ(g.add_vertex(), c + 1);
  EXPECT_FALSE(g.has_edge(e1));
  EXPECT_EQ(g.num_edges(), 0u);
}

TEST(Network, IncidentListsAreAscending) {
  const Network g = grid_graph(3, 3).network;
  for (VertexId v : g.vertices()) {
    const auto& inc = g.incident(v);
    EXPECT_TRUE(std::is_sorted(inc.begin(), inc.end()));
  }
}

TEST(Network, ParallelEdgesAreAllowed) {
  Network g;
  g.add_vertex();
  g.add_vertex();
  g.add_edge(0, 1, false);
  g.add_edge(0, 1, false);
  EXPECT_EQ(g.degree(0), 2);
}

TEST(Network, ValidateNamesTheInvariant) {
  Network g;
  for (int k = 0; k < 3; ++k) g.add_vertex();
  g.add_pair(0, 1, 1);
  g.add_edge(2, 0, true);
  EXPECT_EQ(code_of([&] { g.validate(); }), "source-incoming-edge");

  Network h;
  for (int k = 0; k < 3; ++k) h.add_vertex();
  h.add_pair(0, 1, 1);
  h.add_edge(1, 2, true);
  EXPECT_EQ(code_of([&] { h.validate(); }), "sink-outgoing-edge");

  Network d;
  d.add_vertex();
  d.add_vertex();
  d.add_edge(0, 1, true);
  EXPECT_EQ(code_of([&] { d.validate(); }), "directed-interior-edge");
}

TEST(Network, HubCountCountsInteriorDegreeThree) {
  EXPECT_EQ(hub_count(grid_graph(3, 3).network).value, 18);
  const auto c = testing::crossing();
  EXPECT_EQ(hub_count(c.g).value, 1);
}

TEST(Network, WithoutEdgeLeavesOriginal) {
  const Network g = grid_graph(2, 2).network;
  const Network h = g.without_edge(0);
  EXPECT_TRUE(g.has_edge(0));
  EXPECT_FALSE(h.has_edge(0));
  EXPECT_EQ(h.num_edges() + 1, g.num_edges());
}

TEST(PathSystem, ValidationCatchesSharedVertices) {
  const auto c = testing::crossing();
  Network g = c.g;
  g.add_pair(0, 1, 2);  // a second copy of pair 0 with demand 2
  const EdgeId a = g.add_edge(0, 4, true), b = g.add_edge(4, 1, true);
  PathSystem bad(2, {testing::forward({0, 1}), testing::forward({a, b})});
  EXPECT_EQ(code_of([&] { validate_system(g, bad); }), "bad-system");
  for (const PathSystem& s : c.systems) EXPECT_NO_THROW(validate_system(c.g, s));
  EXPECT_TRUE(covered_by(c.g, c.systems));
}

TEST(PathSystem, ClassifiesPublicAndPrivateEdges) {
  const Document d = example_graph();
  const auto tags = classify_edges(d.network, d.systems);
  int pub = 0, priv = 0;
  for (const auto& [e, t] : tags) {
    pub += t.kind == EdgeClass::public_edge;
    priv += t.kind == EdgeClass::private_edge;
  }
  EXPECT_EQ(pub, 4);  // e3, e8, e9, e14
  EXPECT_EQ(priv, 12);
  EXPECT_EQ(tags.at(2).kind, EdgeClass::public_edge);
  EXPECT_EQ(tags.at(0).owner, 0);
  EXPECT_EQ(tags.at(1).owner, 1);
}

}  // namespace
}  // namespace hubs
