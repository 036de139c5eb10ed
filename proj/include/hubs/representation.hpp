#pragma once

#include <map>
#include <string>
#include <vector>

#include "hubs/network.hpp"

namespace hubs {

/// A two-pair graph with its path systems at some stage of the canonical
/// transformation. Provenance maps every edge and vertex back to the input
/// graph the pipeline started from.
struct Representation {
  Network graph;
  std::vector<PathSystem> systems;  // systems[0] = phi (pair 0), systems[1] = psi (pair 1)
  // Edge -> input edges it replaces (empty for an edge created from nothing).
  std::map<EdgeId, std::vector<EdgeId>> edge_provenance;
  std::map<VertexId, VertexId> vertex_provenance;
  bool naturally_oriented = false;
};

// Every public edge is traversed the same way by both systems.
bool naturally_oriented(const Network& g, const std::vector<PathSystem>& systems);

// Wraps a (C1,C2)-graph as the starting stage with identity provenance.
// Throws "out-of-contract" unless there are exactly two pairs with one
// system each and every edge lies on a system path ("not-covered").
Representation initial_stage(const Network& g, const std::vector<PathSystem>& systems);

// Contracts every non-terminal vertex of degree 2 into a single edge, in
// ascending vertex id. Isolated non-terminals are dropped. The merged edge
// is directed iff it touches a terminal.
Representation remove_relays(const Representation& in);

// Replaces each degree-4 crossing vertex by two degree-3 vertices joined by
// a new public edge, in ascending vertex id.
Representation stretch_crossings(const Representation& in);

// Reroutes psi around every public edge whose two natural directions
// disagree, in ascending public edge id.
Representation match_directions(const Representation& in);

Representation to_representation(const Network& g, const std::vector<PathSystem>& systems);

// Representation invariants that fail (empty when all hold): degree three
// at every non-terminal, natural orientability, membership, minimality.
std::vector<std::string> representation_violations(const Representation& rep);

enum class PathKind { S1S2, S1R1, R2S2, R2R1 };

std::string to_string(PathKind kind);

/// A maximal private-edge path anchored at S1 or R2. Vertex positions count
/// edges from the anchor; "right of" means a larger position.
struct AlternatingPath {
  PathKind kind = PathKind::S1S2;
  std::vector<EdgeId> steps;
  std::vector<VertexId> vertices;  // steps.size() + 1 entries, anchor first
  std::vector<VertexId> upper;     // tails of private edges, left to right
  std::vector<VertexId> lower;     // heads of private edges, left to right
  VertexId choke = -1;             // S1S2 and R2R1 only
};

struct VertexSlot {
  int path = -1;
  int position = -1;
  bool upper = false;
};

struct Decomposition {
  std::vector<AlternatingPath> paths;
  std::map<VertexId, VertexSlot> slots;  // every hub of the representation
  int delta = 0;                         // number of S1S2 paths
};

// Partitions the private edges into alternating paths, walking from each
// S1 out-edge, then each R2 in-edge, in ascending edge id. Throws
// "decomposition-violation" when the input is not a valid representation.
Decomposition decompose_private(const Representation& rep);

// Independent check of the structural claims about a decomposition:
// partition, path count, kind counts, alternation, distinct parent paths,
// deck sizes, head/tail rule. Returns the failures.
std::vector<std::string> decomposition_violations(const Representation& rep,
                                                  const Decomposition& dec);

}  // namespace hubs
