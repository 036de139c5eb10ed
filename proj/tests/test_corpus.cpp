#include <gtest/gtest.h>

#include "hubs/corpus.hpp"
#include "hubs/cuts.hpp"
#include "hubs/io.hpp"

namespace hubs {
namespace {

TEST(Corpus, InstancesAreInClassAndCovered) {
  for (const std::vector<int>& demands : {std::vector<int>{1}, {3, 3}, {2, 1, 2}}) {
    for (const CorpusInstance& inst : random_corpus(demands, 40, 3)) {
      EXPECT_TRUE(in_class(inst.planted.network));
      EXPECT_TRUE(in_class(inst.covered));
      EXPECT_TRUE(covered_by(inst.covered, inst.planted.systems));
      for (const PathSystem& s : inst.planted.systems) validate_system(inst.planted.network, s);
      for (int i = 0; i < inst.covered.num_pairs(); ++i) {
        const TerminalPair& p = inst.covered.pair(i);
        EXPECT_EQ(inst.covered.degree(p.source), p.demand);
        EXPECT_EQ(inst.covered.degree(p.sink), p.demand);
      }
    }
  }
}

TEST(Corpus, SameSeedSameGraph) {
  const auto a = random_corpus({2, 3}, 10, 99);
  const auto b = random_corpus({2, 3}, 10, 99);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].seed, b[k].seed);
    EXPECT_EQ(serialize_network(a[k].planted.network, a[k].planted.systems),
              serialize_network(b[k].planted.network, b[k].planted.systems));
  }
  EXPECT_NE(serialize_network(a[0].planted.network), serialize_network(a[1].planted.network));
}

TEST(Corpus, LaterSystemsShareEdges) {
  int with_public = 0;
  for (const CorpusInstance& inst : random_corpus({2, 2}, 30, 4)) {
    bool any = false;
    for (const auto& [e, tag] : classify_edges(inst.covered, inst.planted.systems)) {
      any = any || tag.kind == EdgeClass::public_edge;
    }
    with_public += any;
  }
  EXPECT_GT(with_public, 15);
}

TEST(Corpus, RejectsEmptyDemands) { EXPECT_THROW(random_instance({}, 1), Error); }

}  // namespace
}  // namespace hubs
