#pragma once

#include <vector>

#include "hubs/extremal.hpp"
#include "hubs/network.hpp"

namespace hubs {

// Exhaustive list of demand-many vertex-disjoint path sets for one pair,
// paths ordered by first edge id. Throws "oracle-guard" past 20 interior
// vertices.
std::vector<PathSystem> enumerate_path_systems(const Network& g, int pair_index);

// Minimum interior-vertex cut by trying vertex subsets in increasing size.
// Direct source -> sink edges add one each. Throws "oracle-guard" past 20
// interior vertices.
int brute_force_cut(const Network& g, int pair_index);

struct OracleOptions {
  // Largest number of optional edges searched (edges whose deletion alone
  // keeps g in class).
  int max_edges = 24;
  // Decisions fixed before the search fans out across OpenMP threads.
  int split_depth = 6;
};

struct OracleReport {
  Network min_hub_subgraph;
  std::vector<EdgeId> edges;  // edge set of min_hub_subgraph, ascending
  int min_hubs = 0;
  long num_minimal_subgraphs = 0;
  long num_feasible_subgraphs = 0;
  int mandatory_edges = 0;
  int optional_edges = 0;
  double elapsed_ms = 0;
};

// Exact minimum hub count over in-class edge subsets of g. Ties among
// minimal subgraphs go to the lexicographically smallest edge-id vector.
OracleReport min_hub_subgraph(const Network& g, const OracleOptions& options = {});
// Same search on one thread; reference for the parallel version.
OracleReport min_hub_subgraph_serial(const Network& g, const OracleOptions& options = {});

// Known value of the worst case for a demand signature: 0 for one pair,
// 2*C1*C2 for two, 2*(C1*C2 + m) with m unit pairs, 12 for (2,2,2), the
// finiteness bound otherwise.
BigInt theoretical_bound(const std::vector<int>& demands);

struct BoundCheck {
  int min_hubs = 0;
  BigInt bound;
  bool ok = false;
};

BoundCheck check_bound(const Network& g, const OracleOptions& options = {});

}  // namespace hubs
