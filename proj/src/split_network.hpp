#pragma once

// Vertex-split flow network for one terminal pair. Internal to the library.
//
// Every interior vertex v becomes in(v) -> out(v) with capacity 1. The pair's
// own source and sink are single nodes; terminals of other pairs are dropped
// (a foreign source cannot be entered, a foreign sink cannot be left).
// Undirected edges become two antiparallel arcs out(a)->in(b), out(b)->in(a).
// A direct source->sink edge is an arc of capacity 1, so a collapsed relay
// chain keeps contributing one unit.

#include <limits>
#include <vector>

#include "hubs/network.hpp"

namespace hubs::detail {

struct Arc {
  int to = -1;
  int cap = 0;
  int flow = 0;
  EdgeId edge = -1;     // -1 for vertex arcs and residual twins
  bool forward = true;  // traversal direction of `edge` this arc represents
  VertexId vertex = -1; // for vertex arcs: the split vertex

  int residual() const { return cap - flow; }
};

class SplitNetwork {
 public:
  static constexpr int kInfinite = 1 << 28;

  SplitNetwork(const Network& g, int pair_index, int edge_capacity);

  int source() const { return source_; }
  int sink() const { return sink_; }
  int num_nodes() const { return static_cast<int>(adj_.size()); }

  // Edmonds-Karp; stops once the flow reaches `limit`. Returns total flow.
  int augment(int limit);
  int flow_value() const { return value_; }

  // Pushes one unit along the arcs of a source->sink path (used to load a
  // given path system as the current flow).
  void push_path(const Network& g, const Path& p);

  std::vector<bool> residual_reachable_from_source() const;
  std::vector<int> residual_scc() const;

  // Interior vertices whose split arc crosses the source side of a min cut.
  std::vector<VertexId> separator() const;
  int direct_arc_count() const { return direct_arcs_; }

  // Net flow per edge, decomposed into source->sink paths following the
  // lowest edge id at every branch point.
  std::vector<Path> decompose(const Network& g) const;

  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  int add_arc(int from, int to, int cap, EdgeId edge, bool forward, VertexId vertex);
  // Node a traversal enters when it reaches vertex v / leaves from v;
  // -1 for vertices outside this pair's network.
  int entry(VertexId v) const { return in_[v]; }
  int exit(VertexId v) const { return out_[v]; }

  std::vector<Arc> arcs_;  // arcs_[k ^ 1] is the residual twin of arcs_[k]
  std::vector<std::vector<int>> adj_;
  std::vector<int> in_;
  std::vector<int> out_;
  std::vector<int> edge_arcs_;  // arc ids of edge arcs, twins excluded
  int source_ = -1;
  int sink_ = -1;
  int value_ = 0;
  int direct_arcs_ = 0;
  VertexId source_vertex_ = -1;
  VertexId sink_vertex_ = -1;
};

}  // namespace hubs::detail
