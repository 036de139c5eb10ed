#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hubs {

using VertexId = int;
using EdgeId = int;

// Every failure raised by the library carries a short machine-readable code
// (e.g. "source-incoming-edge", "not-in-class") next to the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct Edge {
  EdgeId id = -1;
  VertexId u = -1;
  VertexId v = -1;
  // Terminal edges are directed u -> v; interior edges are undirected.
  bool directed = false;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool operator==(const Edge&) const = default;
};

struct TerminalPair {
  VertexId source = -1;
  VertexId sink = -1;
  int demand = 0;
  bool operator==(const TerminalPair&) const = default;
};

struct HubCount {
  int value = 0;
  auto operator<=>(const HubCount&) const = default;
};

/// Mixed multigraph with source/sink pairs and their vertex-cut demands.
///
/// Ids are dense non-negative integers and are never reused: removing an
/// edge or vertex leaves a hole, and newly created elements always take the
/// next id past the largest one ever seen. All enumeration is in ascending id.
class Network {
 public:
  Network() = default;

  VertexId add_vertex();
  void add_vertex(VertexId id);
  EdgeId add_edge(VertexId u, VertexId v, bool directed);
  void add_edge(const Edge& e);
  void add_pair(VertexId source, VertexId sink, int demand);

  void remove_edge(EdgeId id);
  // Removes the vertex together with all incident edges.
  void remove_vertex(VertexId id);

  bool has_vertex(VertexId id) const;
  bool has_edge(EdgeId id) const;
  const Edge& edge(EdgeId id) const;

  std::vector<VertexId> vertices() const;
  std::vector<Edge> edges() const;
  std::vector<EdgeId> edge_ids() const;
  const std::vector<EdgeId>& incident(VertexId v) const;
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return num_edges_; }
  VertexId vertex_bound() const { return static_cast<VertexId>(vertex_present_.size()); }
  EdgeId edge_bound() const { return static_cast<EdgeId>(edges_.size()); }

  const std::vector<TerminalPair>& pairs() const { return pairs_; }
  const TerminalPair& pair(int index) const { return pairs_.at(index); }
  int num_pairs() const { return static_cast<int>(pairs_.size()); }

  bool is_source(VertexId v) const;
  bool is_sink(VertexId v) const;
  bool is_terminal(VertexId v) const { return is_source(v) || is_sink(v); }

  // Throws Error naming the violated invariant.
  void validate() const;

  Network without_edge(EdgeId id) const;

  // Structural equality: same vertex set, edges (with ids) and pairs.
  bool operator==(const Network& other) const;

 private:
  std::vector<bool> vertex_present_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<std::optional<Edge>> edges_;
  std::vector<TerminalPair> pairs_;
  std::size_t num_vertices_ = 0;
  std::size_t num_edges_ = 0;
};

HubCount hub_count(const Network& g);

struct Step {
  EdgeId edge = -1;
  // true when the edge is traversed from its `u` end to its `v` end.
  bool forward = true;
  bool operator==(const Step&) const = default;
};

struct Path {
  std::vector<Step> steps;

  bool empty() const { return steps.empty(); }
  std::size_t size() const { return steps.size(); }
  bool operator==(const Path&) const = default;
};

VertexId tail_of(const Network& g, const Step& s);
VertexId head_of(const Network& g, const Step& s);
// Full vertex sequence of a path (size() + 1 vertices). Throws
// "broken-path" if consecutive steps do not share a vertex.
std::vector<VertexId> path_vertices(const Network& g, const Path& p);

/// A set of demand-many vertex-disjoint source->sink paths for one pair,
/// together with the orientation each path induces on its edges.
class PathSystem {
 public:
  PathSystem() = default;
  PathSystem(int pair_index, std::vector<Path> paths);

  int pair_index() const { return pair_index_; }
  const std::vector<Path>& paths() const { return paths_; }
  // edge id -> forward flag of the traversing path.
  const std::map<EdgeId, bool>& orientation() const { return orientation_; }
  bool uses(EdgeId e) const { return orientation_.count(e) != 0; }

  bool operator==(const PathSystem& other) const {
    return pair_index_ == other.pair_index_ && paths_ == other.paths_;
  }

 private:
  int pair_index_ = -1;
  std::vector<Path> paths_;
  std::map<EdgeId, bool> orientation_;
};

// Checks the PathSystem invariants against g: endpoints, simplicity,
// direction of terminal edges, pairwise vertex-disjointness and path count.
void validate_system(const Network& g, const PathSystem& system);

// True when every edge of g lies on some path of `systems`.
bool covered_by(const Network& g, const std::vector<PathSystem>& systems);

enum class EdgeClass { unused, public_edge, private_edge };

struct EdgeTag {
  EdgeClass kind = EdgeClass::unused;
  // Index into the systems vector for private edges, -1 otherwise.
  int owner = -1;
  bool operator==(const EdgeTag&) const = default;
};

// Public/private classification for the two-pair case.
std::map<EdgeId, EdgeTag> classify_edges(const Network& g,
                                         const std::vector<PathSystem>& systems);

}  // namespace hubs
