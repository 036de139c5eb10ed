#pragma once

#include <climits>
#include <optional>
#include <vector>

#include "hubs/network.hpp"

namespace hubs {

struct CutResult {
  int value = 0;
  // Interior vertices whose removal leaves only direct source->sink edges.
  std::vector<VertexId> separator;
  // Direct source->sink edges; each counts one unit that no vertex can cut.
  int direct_edges = 0;
};

// Exact minimum interior-vertex cut for one pair via unit vertex capacities
// and integral max flow. A disconnected pair yields value 0.
CutResult min_vertex_cut(const Network& g, int pair_index);

// Maximum number of vertex-disjoint paths, computed only up to `limit`.
int max_disjoint_paths(const Network& g, int pair_index, int limit = INT_MAX);

// k vertex-disjoint source->sink paths, or nullopt when the cut is below k.
// Paths are ordered by their first edge and follow the lowest edge id.
std::optional<PathSystem> vertex_disjoint_paths(const Network& g, int pair_index, int k);

// Membership in the demand class: every pair's min cut equals its demand.
bool in_class(const Network& g);

// Systems realising every pair's demand (requires in_class).
std::vector<PathSystem> demand_systems(const Network& g);

}  // namespace hubs
