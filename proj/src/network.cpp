#include "hubs/network.hpp"

#include <algorithm>
#include <set>

namespace hubs {

namespace {

const std::vector<EdgeId> kNoEdges;

std::string str(int x) { return std::to_string(x); }

}  // namespace

VertexId Network::add_vertex() {
  VertexId id = vertex_bound();
  add_vertex(id);
  return id;
}

void Network::add_vertex(VertexId id) {
  if (id < 0) throw Error("bad-id", "negative vertex id " + str(id));
  if (id >= vertex_bound()) {
    vertex_present_.resize(id + 1, false);
    incident_.resize(id + 1);
  }
  if (vertex_present_[id]) throw Error("duplicate-vertex", "vertex " + str(id));
  vertex_present_[id] = true;
  ++num_vertices_;
}

EdgeId Network::add_edge(VertexId u, VertexId v, bool directed) {
  Edge e{edge_bound(), u, v, directed};
  add_edge(e);
  return e.id;
}

void Network::add_edge(const Edge& e) {
  if (e.id < 0) throw Error("bad-id", "negative edge id " + str(e.id));
  if (e.u == e.v) throw Error("self-loop", "edge " + str(e.id) + " at vertex " + str(e.u));
  if (!has_vertex(e.u) || !has_vertex(e.v)) {
    throw Error("unknown-vertex", "edge " + str(e.id) + " references a missing vertex");
  }
  if (e.id >= edge_bound()) edges_.resize(e.id + 1);
  if (edges_[e.id]) throw Error("duplicate-edge", "edge id " + str(e.id));
  edges_[e.id] = e;
  // Edge ids are handed out increasingly in the common case, so appending
  // keeps the incidence lists sorted; fall back to an insert otherwise.
  for (VertexId x : {e.u, e.v}) {
    auto& inc = incident_[x];
    inc.insert(std::upper_bound(inc.begin(), inc.end(), e.id), e.id);
  }
  ++num_edges_;
}

void Network::add_pair(VertexId source, VertexId sink, int demand) {
  pairs_.push_back({source, sink, demand});
}

void Network::remove_edge(EdgeId id) {
  if (!has_edge(id)) throw Error("unknown-edge", "edge " + str(id));
  const Edge e = *edges_[id];
  for (VertexId x : {e.u, e.v}) {
    auto& inc = incident_[x];
    inc.erase(std::find(inc.begin(), inc.end(), id));
  }
  edges_[id].reset();
  --num_edges_;
}

void Network::remove_vertex(VertexId id) {
  if (!has_vertex(id)) throw Error("unknown-vertex", "vertex " + str(id));
  const std::vector<EdgeId> inc = incident_[id];
  for (EdgeId e : inc) remove_edge(e);
  vertex_present_[id] = false;
  --num_vertices_;
}

bool Network::has_vertex(VertexId id) const {
  return id >= 0 && id < vertex_bound() && vertex_present_[id];
}

bool Network::has_edge(EdgeId id) const {
  return id >= 0 && id < edge_bound() && edges_[id].has_value();
}

const Edge& Network::edge(EdgeId id) const {
  if (!has_edge(id)) throw Error("unknown-edge", "edge " + str(id));
  return *edges_[id];
}

std::vector<VertexId> Network::vertices() const {
  std::vector<VertexId> out;
  out.reserve(num_vertices_);
  for (VertexId v = 0; v < vertex_bound(); ++v) {
    if (vertex_present_[v]) out.push_back(v);
  }
  return out;
}

std::vector<Edge> Network::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (const auto& e : edges_) {
    if (e) out.push_back(*e);
  }
  return out;
}

std::vector<EdgeId> Network::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(num_edges_);
  for (const auto& e : edges_) {
    if (e) out.push_back(e->id);
  }
  return out;
}

const std::vector<EdgeId>& Network::incident(VertexId v) const {
  if (!has_vertex(v)) return kNoEdges;
  return incident_[v];
}

bool Network::is_source(VertexId v) const {
  return std::any_of(pairs_.begin(), pairs_.end(),
                     [v](const TerminalPair& p) { return p.source == v; });
}

bool Network::is_sink(VertexId v) const {
  return std::any_of(pairs_.begin(), pairs_.end(),
                     [v](const TerminalPair& p) { return p.sink == v; });
}

void Network::validate() const {
  std::set<VertexId> terminals;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const auto& p = pairs_[i];
    const std::string where = "pair " + std::to_string(i);
    if (p.demand <= 0) throw Error("demand-not-positive", where);
    if (!has_vertex(p.source) || !has_vertex(p.sink)) {
      throw Error("unknown-vertex", where + " references a missing terminal");
    }
    if (p.source == p.sink) throw Error("source-equals-sink", where);
    if (!terminals.insert(p.source).second || !terminals.insert(p.sink).second) {
      throw Error("duplicate-terminal", where + " shares a terminal with another pair");
    }
  }
  for (const Edge& e : edges()) {
    const std::string where = "edge " + str(e.id);
    if (e.u == e.v) throw Error("self-loop", where);
    for (VertexId x : {e.u, e.v}) {
      if (is_source(x) && !(e.directed && e.u == x)) {
        throw Error("source-incoming-edge", where + " at source " + str(x));
      }
      if (is_sink(x) && !(e.directed && e.v == x)) {
        throw Error("sink-outgoing-edge", where + " at sink " + str(x));
      }
    }
    if (e.directed && !is_source(e.u) && !is_sink(e.v)) {
      throw Error("directed-interior-edge", where);
    }
  }
}

Network Network::without_edge(EdgeId id) const {
  Network copy = *this;
  copy.remove_edge(id);
  return copy;
}

bool Network::operator==(const Network& other) const {
  return vertices() == other.vertices() && edges() == other.edges() &&
         pairs_ == other.pairs_;
}

HubCount hub_count(const Network& g) {
  HubCount count;
  for (VertexId v : g.vertices()) {
    if (!g.is_terminal(v) && g.degree(v) >= 3) ++count.value;
  }
  return count;
}

VertexId tail_of(const Network& g, const Step& s) {
  const Edge& e = g.edge(s.edge);
  return s.forward ? e.u : e.v;
}

VertexId head_of(const Network& g, const Step& s) {
  const Edge& e = g.edge(s.edge);
  return s.forward ? e.v : e.u;
}

std::vector<VertexId> path_vertices(const Network& g, const Path& p) {
  std::vector<VertexId> out;
  if (p.empty()) return out;
  out.push_back(tail_of(g, p.steps.front()));
  for (const Step& s : p.steps) {
    if (tail_of(g, s) != out.back()) {
      throw Error("broken-path", "step on edge " + str(s.edge) + " does not continue the path");
    }
    out.push_back(head_of(g, s));
  }
  return out;
}

PathSystem::PathSystem(int pair_index, std::vector<Path> paths)
    : pair_index_(pair_index), paths_(std::move(paths)) {
  for (const Path& p : paths_) {
    for (const Step& s : p.steps) {
      if (!orientation_.emplace(s.edge, s.forward).second) {
        throw Error("edge-reused", "edge " + str(s.edge) + " appears twice in the system of pair " +
                                       str(pair_index_));
      }
    }
  }
}

void validate_system(const Network& g, const PathSystem& system) {
  const int index = system.pair_index();
  if (index < 0 || index >= g.num_pairs()) {
    throw Error("bad-system", "pair index " + str(index) + " out of range");
  }
  const TerminalPair& pair = g.pair(index);
  const std::string where = "system of pair " + str(index);
  if (static_cast<int>(system.paths().size()) != pair.demand) {
    throw Error("bad-system", where + " has " + str(static_cast<int>(system.paths().size())) +
                                  " paths, demand is " + str(pair.demand));
  }
  std::set<VertexId> seen;
  for (const Path& p : system.paths()) {
    for (const Step& s : p.steps) {
      if (!g.has_edge(s.edge)) throw Error("bad-system", where + " uses missing edge " + str(s.edge));
      if (g.edge(s.edge).directed && !s.forward) {
        throw Error("bad-system", where + " traverses directed edge " + str(s.edge) + " backwards");
      }
    }
    const auto vs = path_vertices(g, p);
    if (vs.empty() || vs.front() != pair.source || vs.back() != pair.sink) {
      throw Error("bad-system", where + " has a path not running source to sink");
    }
    for (std::size_t k = 1; k + 1 < vs.size(); ++k) {
      if (!seen.insert(vs[k]).second) {
        throw Error("bad-system", where + " revisits vertex " + str(vs[k]));
      }
    }
  }
}

bool covered_by(const Network& g, const std::vector<PathSystem>& systems) {
  for (EdgeId e : g.edge_ids()) {
    bool used = std::any_of(systems.begin(), systems.end(),
                            [e](const PathSystem& s) { return s.uses(e); });
    if (!used) return false;
  }
  return true;
}

std::map<EdgeId, EdgeTag> classify_edges(const Network& g,
                                         const std::vector<PathSystem>& systems) {
  if (systems.size() != 2) {
    throw Error("not-two-pair", "public/private classification needs exactly two systems");
  }
  std::map<EdgeId, EdgeTag> tags;
  for (EdgeId e : g.edge_ids()) {
    const bool first = systems[0].uses(e);
    const bool second = systems[1].uses(e);
    EdgeTag tag;
    if (first && second) {
      tag.kind = EdgeClass::public_edge;
    } else if (first || second) {
      tag.kind = EdgeClass::private_edge;
      tag.owner = first ? 0 : 1;
    }
    tags[e] = tag;
  }
  return tags;
}

}  // namespace hubs
