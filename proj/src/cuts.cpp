#include "hubs/cuts.hpp"

#include <algorithm>
#include <queue>

#include "split_network.hpp"

namespace hubs {

namespace detail {

SplitNetwork::SplitNetwork(const Network& g, int pair_index, int edge_capacity) {
  if (pair_index < 0 || pair_index >= g.num_pairs()) {
    throw Error("bad-pair", "pair index " + std::to_string(pair_index) + " out of range");
  }
  const TerminalPair& pair = g.pair(pair_index);
  source_vertex_ = pair.source;
  sink_vertex_ = pair.sink;
  in_.assign(g.vertex_bound(), -1);
  out_.assign(g.vertex_bound(), -1);
  int nodes = 0;
  for (VertexId v : g.vertices()) {
    if (v == pair.source) {
      source_ = in_[v] = out_[v] = nodes++;
    } else if (v == pair.sink) {
      sink_ = in_[v] = out_[v] = nodes++;
    } else if (!g.is_terminal(v)) {
      in_[v] = nodes++;
      out_[v] = nodes++;
    }
  }
  adj_.resize(nodes);
  for (VertexId v : g.vertices()) {
    if (!g.is_terminal(v)) add_arc(in_[v], out_[v], 1, -1, true, v);
  }
  for (const Edge& e : g.edges()) {
    if (exit(e.u) < 0 || entry(e.v) < 0) continue;
    if (e.u == source_vertex_ && e.v == sink_vertex_) {
      ++direct_arcs_;
      edge_arcs_.push_back(add_arc(source_, sink_, 1, e.id, true, -1));
      continue;
    }
    if (e.directed) {
      edge_arcs_.push_back(add_arc(exit(e.u), entry(e.v), edge_capacity, e.id, true, -1));
      continue;
    }
    edge_arcs_.push_back(add_arc(exit(e.u), entry(e.v), edge_capacity, e.id, true, -1));
    edge_arcs_.push_back(add_arc(exit(e.v), entry(e.u), edge_capacity, e.id, false, -1));
  }
}

int SplitNetwork::add_arc(int from, int to, int cap, EdgeId edge, bool forward, VertexId vertex) {
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, cap, 0, edge, forward, vertex});
  arcs_.push_back({from, 0, 0, -1, forward, -1});
  adj_[from].push_back(id);
  adj_[to].push_back(id + 1);
  return id;
}

int SplitNetwork::augment(int limit) {
  std::vector<int> via(adj_.size());
  while (value_ < limit) {
    std::fill(via.begin(), via.end(), -1);
    std::queue<int> frontier;
    frontier.push(source_);
    via[source_] = -2;
    while (!frontier.empty() && via[sink_] == -1) {
      int x = frontier.front();
      frontier.pop();
      for (int a : adj_[x]) {
        const Arc& arc = arcs_[a];
        if (arc.residual() > 0 && via[arc.to] == -1) {
          via[arc.to] = a;
          frontier.push(arc.to);
        }
      }
    }
    if (via[sink_] == -1) break;
    int bottleneck = limit - value_;
    for (int x = sink_; x != source_; x = arcs_[via[x] ^ 1].to) {
      bottleneck = std::min(bottleneck, arcs_[via[x]].residual());
    }
    for (int x = sink_; x != source_; x = arcs_[via[x] ^ 1].to) {
      arcs_[via[x]].flow += bottleneck;
      arcs_[via[x] ^ 1].flow -= bottleneck;
    }
    value_ += bottleneck;
  }
  return value_;
}

void SplitNetwork::push_path(const Network& g, const Path& p) {
  auto bump = [this](int a) {
    arcs_[a].flow += 1;
    arcs_[a ^ 1].flow -= 1;
  };
  const std::vector<VertexId> vs = path_vertices(g, p);
  for (std::size_t k = 0; k < p.steps.size(); ++k) {
    const Step& s = p.steps[k];
    const int from = exit(vs[k]);
    auto it = std::find_if(edge_arcs_.begin(), edge_arcs_.end(), [&](int a) {
      return arcs_[a].edge == s.edge && arcs_[a].forward == s.forward;
    });
    if (it == edge_arcs_.end() || arcs_[*it ^ 1].to != from) {
      throw Error("bad-system", "path step on edge " + std::to_string(s.edge) +
                                    " is not an arc of this pair's network");
    }
    bump(*it);
    if (k + 1 < p.steps.size()) {
      // The split arc of the intermediate vertex.
      const int in = entry(vs[k + 1]);
      auto split = std::find_if(adj_[in].begin(), adj_[in].end(), [&](int a) {
        return (a & 1) == 0 && arcs_[a].vertex == vs[k + 1];
      });
      bump(*split);
    }
  }
  ++value_;
}

std::vector<bool> SplitNetwork::residual_reachable_from_source() const {
  std::vector<bool> seen(adj_.size(), false);
  std::vector<int> stack{source_};
  seen[source_] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int a : adj_[x]) {
      if (arcs_[a].residual() > 0 && !seen[arcs_[a].to]) {
        seen[arcs_[a].to] = true;
        stack.push_back(arcs_[a].to);
      }
    }
  }
  return seen;
}

std::vector<int> SplitNetwork::residual_scc() const {
  // Iterative Tarjan over arcs with positive residual capacity.
  const int n = num_nodes();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<bool> on_stack(n, false);
  std::vector<std::pair<int, std::size_t>> call;
  int counter = 0, comps = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& [x, next] = call.back();
      if (next == 0 && index[x] == -1) {
        index[x] = low[x] = counter++;
        stack.push_back(x);
        on_stack[x] = true;
      }
      bool descended = false;
      while (next < adj_[x].size()) {
        const Arc& arc = arcs_[adj_[x][next++]];
        if (arc.residual() <= 0) continue;
        if (index[arc.to] == -1) {
          call.push_back({arc.to, 0});
          descended = true;
          break;
        }
        if (on_stack[arc.to]) low[x] = std::min(low[x], index[arc.to]);
      }
      if (descended) continue;
      const int done = x;
      if (low[done] == index[done]) {
        int y;
        do {
          y = stack.back();
          stack.pop_back();
          on_stack[y] = false;
          comp[y] = comps;
        } while (y != done);
        ++comps;
      }
      call.pop_back();
      if (!call.empty()) {
        int parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return comp;
}

std::vector<VertexId> SplitNetwork::separator() const {
  const std::vector<bool> reach = residual_reachable_from_source();
  std::vector<VertexId> out;
  for (const Arc& a : arcs_) {
    if (a.vertex < 0) continue;
    const int in = in_[a.vertex];
    if (reach[in] && !reach[a.to]) out.push_back(a.vertex);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path> SplitNetwork::decompose(const Network& g) const {
  // Net flow per edge; antiparallel units on one undirected edge cancel.
  std::vector<int> net(g.edge_bound(), 0);
  for (int a : edge_arcs_) {
    if (arcs_[a].flow > 0) net[arcs_[a].edge] += arcs_[a].forward ? arcs_[a].flow : -arcs_[a].flow;
  }
  auto next_step = [&](VertexId x) -> std::optional<Step> {
    for (EdgeId e : g.incident(x)) {
      const Edge& edge = g.edge(e);
      if (edge.u == x && net[e] > 0) return Step{e, true};
      if (edge.v == x && net[e] < 0) return Step{e, false};
    }
    return std::nullopt;
  };
  std::vector<Path> paths;
  while (auto first = next_step(source_vertex_)) {
    Path p;
    std::optional<Step> step = first;
    VertexId at = source_vertex_;
    std::size_t guard = g.num_edges() + 1;
    while (at != sink_vertex_) {
      if (!step || guard-- == 0) throw Error("internal", "flow decomposition lost the path");
      net[step->edge] += step->forward ? -1 : 1;
      p.steps.push_back(*step);
      at = head_of(g, *step);
      if (at != sink_vertex_) step = next_step(at);
    }
    paths.push_back(std::move(p));
  }
  return paths;
}

}  // namespace detail

CutResult min_vertex_cut(const Network& g, int pair_index) {
  detail::SplitNetwork net(g, pair_index, detail::SplitNetwork::kInfinite);
  CutResult result;
  result.value = net.augment(INT_MAX);
  result.separator = net.separator();
  result.direct_edges = net.direct_arc_count();
  return result;
}

int max_disjoint_paths(const Network& g, int pair_index, int limit) {
  detail::SplitNetwork net(g, pair_index, detail::SplitNetwork::kInfinite);
  return net.augment(limit);
}

std::optional<PathSystem> vertex_disjoint_paths(const Network& g, int pair_index, int k) {
  if (k < 1) throw Error("bad-argument", "k must be at least 1");
  detail::SplitNetwork net(g, pair_index, detail::SplitNetwork::kInfinite);
  if (net.augment(k) < k) return std::nullopt;
  return PathSystem(pair_index, net.decompose(g));
}

bool in_class(const Network& g) {
  for (int i = 0; i < g.num_pairs(); ++i) {
    const int demand = g.pair(i).demand;
    if (max_disjoint_paths(g, i, demand + 1) != demand) return false;
  }
  return true;
}

std::vector<PathSystem> demand_systems(const Network& g) {
  std::vector<PathSystem> out;
  for (int i = 0; i < g.num_pairs(); ++i) {
    auto sys = vertex_disjoint_paths(g, i, g.pair(i).demand);
    if (!sys) throw Error("not-in-class", "pair " + std::to_string(i) + " misses its demand");
    out.push_back(std::move(*sys));
  }
  return out;
}

}  // namespace hubs
