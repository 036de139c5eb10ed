#include <algorithm>
#include <limits>

#include <gtest/gtest.h>

#include "hubs/cuts.hpp"
#include "hubs/extremal.hpp"
#include "hubs/io.hpp"
#include "hubs/minimality.hpp"
#include "hubs/oracle.hpp"
#include "hubs/representation.hpp"

namespace hubs {
namespace {

// Plain recursion without memoization, used as an independent reference.
unsigned long long reference_bound(const std::vector<int>& c) {
  const std::size_t k = c.size();
  if (k == 1) return 0;
  if (k == 2) return 2ull * c[0] * c[1];
  const unsigned long long n1 = reference_bound({c.begin(), c.end() - 1});
  unsigned long long n2 = 0;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    std::vector<int> rest;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i) rest.push_back(c[j]);
    }
    n2 += reference_bound(rest);
  }
  return n1 + n2 + (k - 1) * n1 * (c.back() + n2);
}

TEST(Grid, HubCountsAndMinimality) {
  EXPECT_EQ(hub_count(grid_graph(3, 3).network).value, 18);
  EXPECT_EQ(hub_count(grid_graph(1, 1).network).value, 2);
  for (int c1 = 1; c1 <= 5; ++c1) {
    for (int c2 = 1; c2 <= 5; ++c2) {
      const Document d = grid_graph(c1, c2);
      EXPECT_TRUE(in_class(d.network));
      EXPECT_TRUE(is_minimal(d.network));
      EXPECT_TRUE(naturally_oriented(d.network, d.systems));
      EXPECT_EQ(hub_count(d.network).value, 2 * c1 * c2);
    }
  }
}

TEST(Grid, MeetAndPartOrder) {
  const Document d = grid_graph(3, 2);
  // phi_1 visits lambda(0,0), mu(0,0), lambda(0,1), mu(0,1) in order.
  const auto vs = path_vertices(d.network, d.systems[0].paths()[0]);
  EXPECT_EQ(vs, (std::vector<VertexId>{0, 4, 5, 6, 7, 1}));
  // psi_2 visits lambda(i,1), mu(i,1) for i = 0..2.
  const auto ws = path_vertices(d.network, d.systems[1].paths()[1]);
  EXPECT_EQ(ws, (std::vector<VertexId>{2, 6, 7, 10, 11, 14, 15, 3}));
}

TEST(Grid, RejectsZeroDemand) { EXPECT_THROW(grid_graph(0, 2), Error); }

TEST(Ones, HubFormulaAndMinimality) {
  EXPECT_EQ(hub_count(ones_graph(2, 2, 2).network).value, 12);
  for (int c1 = 1; c1 <= 4; ++c1) {
    for (int c2 = 1; c2 <= 4; ++c2) {
      for (int n = 0; n <= 3; ++n) {
        const Document d = ones_graph(c1, c2, n);
        EXPECT_TRUE(in_class(d.network));
        EXPECT_TRUE(is_minimal(d.network));
        EXPECT_EQ(hub_count(d.network).value, 2 * (c1 * c2 + n));
        for (const PathSystem& s : d.systems) EXPECT_NO_THROW(validate_system(d.network, s));
      }
    }
  }
}

TEST(Ones, ZeroUnitPairsIsTheGrid) {
  for (int c = 1; c <= 4; ++c) {
    const Document a = ones_graph(c, c + 1, 0), b = grid_graph(c, c + 1);
    EXPECT_EQ(serialize_network(a.network, a.systems), serialize_network(b.network, b.systems));
  }
}

TEST(Witness, TwelveHubsMinimal) {
  const Document d = witness_222();
  EXPECT_EQ(d.network.num_pairs(), 3);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(d.network.pair(i).demand, 2);
  EXPECT_TRUE(in_class(d.network));
  EXPECT_TRUE(is_minimal(d.network));
  EXPECT_EQ(hub_count(d.network).value, 12);
}

TEST(Witness, ReroutableThirdPair) {
  const Document d = reroutable_witness();
  EXPECT_TRUE(in_class(d.network));
  EXPECT_TRUE(is_minimal(d.network));
  EXPECT_TRUE(is_reroutable(d.network, d.systems, 2));
  // Exactly the two captioned systems: {e1 e3 e7, e2 e6 e8}, {e1 e5 e8, e2 e4 e7}.
  const auto all = enumerate_path_systems(d.network, 2);
  ASSERT_EQ(all.size(), 2u);
  std::vector<std::vector<std::vector<EdgeId>>> found;
  for (const PathSystem& s : all) {
    std::vector<std::vector<EdgeId>> paths;
    for (const Path& p : s.paths()) {
      std::vector<EdgeId> es;
      for (const Step& st : p.steps) es.push_back(st.edge + 1);
      paths.push_back(es);
    }
    found.push_back(paths);
  }
  std::sort(found.begin(), found.end());
  const std::vector<std::vector<std::vector<EdgeId>>> expected{{{1, 3, 7}, {2, 6, 8}}, {{1, 5, 8}, {2, 4, 7}}};
  EXPECT_EQ(found, expected);
}

TEST(Bound, BaseCases) {
  for (int c = 1; c <= 10; ++c) {
    EXPECT_EQ(finiteness_bound({c}), 0);
    for (int d = 1; d <= 10; ++d) EXPECT_EQ(finiteness_bound({c, d}), 2 * c * d);
  }
}

TEST(Bound, TripleTwosIs312) {
  EXPECT_EQ(reference_bound({2, 2, 2}), 312ull);
  EXPECT_EQ(finiteness_bound({2, 2, 2}), 312);
  EXPECT_GE(finiteness_bound({2, 2, 2}), 12);
}

TEST(Bound, MatchesReferenceRecursion) {
  for (const std::vector<int>& c : {std::vector<int>{1, 2, 3}, {3, 2, 1}, {2, 2, 2, 2}, {1, 1, 1, 1, 1}, {4, 1, 3}}) {
    EXPECT_EQ(finiteness_bound(c), BigInt(reference_bound(c)));
  }
}

TEST(Bound, OrderOfLastDemandMatters) {
  // The last demand plays the distinguished pair.
  EXPECT_NE(finiteness_bound({1, 2, 3}), finiteness_bound({3, 2, 1}));
}

TEST(Bound, GrowsBeyondMachineWords) {
  const BigInt big = finiteness_bound({5, 5, 5, 5, 5, 5});
  EXPECT_GT(big, BigInt(std::numeric_limits<unsigned long long>::max()));
}

TEST(Bound, RejectsBadInput) {
  EXPECT_THROW(finiteness_bound({}), Error);
  EXPECT_THROW(finiteness_bound({2, 0}), Error);
}

}  // namespace
}  // namespace hubs
