#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hubs/network.hpp"

namespace hubs {

struct ConsistentCycle {
  // Closed walk: the head of the last step is the tail of the first.
  std::vector<Step> steps;
  // Index into the systems vector the cycle is consistent with.
  int system_tag = -1;
};

// Directed cycle avoiding terminals in the auxiliary graph where every edge
// of systems[tag] keeps its natural direction and every other edge may be
// used either way. An edge is used at most once.
std::optional<ConsistentCycle> find_consistent_cycle(const Network& g,
                                                     const std::vector<PathSystem>& systems,
                                                     int tag);

// Checks the ConsistentCycle invariants; throws "bad-cycle" otherwise.
void validate_cycle(const Network& g, const std::vector<PathSystem>& systems,
                    const ConsistentCycle& cycle);

// Whether another set of demand-many vertex-disjoint paths exists for the
// pair. The system is loaded as a unit flow; it is unique exactly when no
// flow-carrying arc lies on a residual cycle.
bool is_reroutable(const Network& g, const std::vector<PathSystem>& systems, int pair_index);

// Definition check: deleting any single edge leaves the class. The edge
// loop runs under OpenMP; is_minimal_serial is the reference.
bool is_minimal(const Network& g);
bool is_minimal_serial(const Network& g);

// Deletes edges while the graph stays in class, in ascending id order or in
// a seeded permutation. Vertices are kept.
Network minimalize(const Network& g, std::optional<std::uint64_t> seed = std::nullopt);

struct Theorem1Report {
  bool minimal = false;
  bool non_reroutable = false;
  bool no_consistent_cycle = false;
  bool agree = false;
  std::vector<bool> reroutable;  // per pair
  std::vector<std::optional<ConsistentCycle>> cycles;  // per tag
};

// Evaluates the three predicates on a two-pair graph covered by `systems`.
// Throws "out-of-contract" for any other number of pairs.
Theorem1Report theorem1_agreement(const Network& g, const std::vector<PathSystem>& systems);

// First private edge of systems[pair_index] whose deletion keeps g in class.
std::optional<EdgeId> deletable_private_edge(const Network& g,
                                             const std::vector<PathSystem>& systems,
                                             int pair_index);

}  // namespace hubs
