#include "hubs/minimality.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <set>

#include <boost/pending/disjoint_sets.hpp>

#include "hubs/cuts.hpp"
#include "split_network.hpp"

namespace hubs {

namespace {

const PathSystem& system_for(const std::vector<PathSystem>& systems, int pair_index) {
  for (const PathSystem& s : systems) {
    if (s.pair_index() == pair_index) return s;
  }
  throw Error("bad-system", "no system for pair " + std::to_string(pair_index));
}

struct Forest {
  explicit Forest(VertexId bound) : adj(bound) {}

  void link(const Edge& e) {
    adj[e.u].push_back({e.v, Step{e.id, true}});
    adj[e.v].push_back({e.u, Step{e.id, false}});
  }

  // Steps of the unique tree path a -> b (a and b in one tree).
  std::vector<Step> path(VertexId a, VertexId b) const {
    if (a == b) return {};
    std::vector<int> via(adj.size(), -1);
    std::vector<Step> step(adj.size());
    std::queue<VertexId> frontier;
    frontier.push(a);
    via[a] = a;
    while (!frontier.empty()) {
      VertexId x = frontier.front();
      frontier.pop();
      if (x == b) break;
      for (const auto& [y, s] : adj[x]) {
        if (via[y] != -1) continue;
        via[y] = x;
        step[y] = s;
        frontier.push(y);
      }
    }
    if (via[b] == -1) throw Error("internal", "tree path endpoints not connected");
    std::vector<Step> out;
    for (VertexId x = b; x != a; x = via[x]) out.push_back(step[x]);
    std::reverse(out.begin(), out.end());
    return out;
  }

  std::vector<std::vector<std::pair<VertexId, Step>>> adj;
};

}  // namespace

std::optional<ConsistentCycle> find_consistent_cycle(const Network& g,
                                                     const std::vector<PathSystem>& systems,
                                                     int tag) {
  if (tag < 0 || tag >= static_cast<int>(systems.size())) {
    throw Error("bad-argument", "system tag " + std::to_string(tag) + " out of range");
  }
  const auto& orientation = systems[tag].orientation();
  const VertexId bound = g.vertex_bound();

  // Undirected edges first: a cycle among them is consistent on its own.
  // Otherwise they form a forest whose trees get contracted, leaving only
  // the tagged arcs between trees.
  std::vector<int> rank(bound, 0), parent(bound);
  std::iota(parent.begin(), parent.end(), 0);
  boost::disjoint_sets<int*, int*> sets(rank.data(), parent.data());
  Forest forest(bound);
  std::vector<Step> arcs;
  for (const Edge& e : g.edges()) {
    if (g.is_terminal(e.u) || g.is_terminal(e.v)) continue;
    auto it = orientation.find(e.id);
    if (it != orientation.end()) {
      arcs.push_back(Step{e.id, it->second});
      continue;
    }
    if (sets.find_set(e.u) == sets.find_set(e.v)) {
      ConsistentCycle cycle{{Step{e.id, true}}, tag};
      for (const Step& s : forest.path(e.v, e.u)) cycle.steps.push_back(s);
      return cycle;
    }
    sets.link(sets.find_set(e.u), sets.find_set(e.v));
    forest.link(e);
  }

  auto close = [&](const std::vector<Step>& ring) {
    ConsistentCycle cycle{{}, tag};
    for (std::size_t k = 0; k < ring.size(); ++k) {
      cycle.steps.push_back(ring[k]);
      const Step& next = ring[(k + 1) % ring.size()];
      for (const Step& s : forest.path(head_of(g, ring[k]), tail_of(g, next))) {
        cycle.steps.push_back(s);
      }
    }
    return cycle;
  };

  std::vector<std::vector<int>> out(bound);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const int from = sets.find_set(tail_of(g, arcs[a]));
    const int to = sets.find_set(head_of(g, arcs[a]));
    if (from == to) return close({arcs[a]});
    out[from].push_back(static_cast<int>(a));
  }

  // Directed cycle search over the contracted trees.
  enum Color { white, grey, black };
  std::vector<Color> color(bound, white);
  std::vector<int> entered_at(bound, 0);
  std::vector<int> stack;
  std::vector<Step> ring;
  std::function<bool(int)> visit = [&](int c) {
    color[c] = grey;
    entered_at[c] = static_cast<int>(stack.size());
    for (int a : out[c]) {
      const int next = sets.find_set(head_of(g, arcs[a]));
      if (color[next] == grey) {
        for (std::size_t k = entered_at[next]; k < stack.size(); ++k) ring.push_back(arcs[stack[k]]);
        ring.push_back(arcs[a]);
        return true;
      }
      if (color[next] == white) {
        stack.push_back(a);
        if (visit(next)) return true;
        stack.pop_back();
      }
    }
    color[c] = black;
    return false;
  };
  for (VertexId v : g.vertices()) {
    const int c = sets.find_set(v);
    if (color[c] == white && visit(c)) return close(ring);
  }
  return std::nullopt;
}

void validate_cycle(const Network& g, const std::vector<PathSystem>& systems,
                    const ConsistentCycle& cycle) {
  auto fail = [](const std::string& why) { throw Error("bad-cycle", why); };
  if (cycle.steps.empty()) fail("empty cycle");
  if (cycle.system_tag < 0 || cycle.system_tag >= static_cast<int>(systems.size())) {
    fail("tag out of range");
  }
  const auto& orientation = systems[cycle.system_tag].orientation();
  std::set<EdgeId> edges;
  std::set<VertexId> vertices;
  for (std::size_t k = 0; k < cycle.steps.size(); ++k) {
    const Step& s = cycle.steps[k];
    if (!g.has_edge(s.edge)) fail("missing edge " + std::to_string(s.edge));
    if (!edges.insert(s.edge).second) fail("edge " + std::to_string(s.edge) + " repeats");
    const VertexId tail = tail_of(g, s);
    if (g.is_terminal(tail)) fail("terminal on cycle");
    if (!vertices.insert(tail).second) fail("vertex " + std::to_string(tail) + " repeats");
    if (head_of(g, s) != tail_of(g, cycle.steps[(k + 1) % cycle.steps.size()])) {
      fail("steps do not chain");
    }
    auto it = orientation.find(s.edge);
    if (it != orientation.end() && it->second != s.forward) {
      fail("edge " + std::to_string(s.edge) + " against its natural direction");
    }
  }
}

bool is_reroutable(const Network& g, const std::vector<PathSystem>& systems, int pair_index) {
  const PathSystem& system = system_for(systems, pair_index);
  validate_system(g, system);
  detail::SplitNetwork net(g, pair_index, 1);
  for (const Path& p : system.paths()) net.push_path(g, p);
  const std::vector<int> comp = net.residual_scc();
  const auto& arcs = net.arcs();
  for (std::size_t a = 0; a < arcs.size(); a += 2) {
    if (arcs[a].edge < 0 || arcs[a].flow <= 0) continue;
    if (comp[arcs[a + 1].to] == comp[arcs[a].to]) return true;
  }
  return false;
}

namespace {

void require_in_class(const Network& g) {
  if (!in_class(g)) throw Error("not-in-class", "graph misses a demand");
}

}  // namespace

bool is_minimal_serial(const Network& g) {
  require_in_class(g);
  for (EdgeId e : g.edge_ids()) {
    if (in_class(g.without_edge(e))) return false;
  }
  return true;
}

bool is_minimal(const Network& g) {
  require_in_class(g);
  const std::vector<EdgeId> ids = g.edge_ids();
  const long n = static_cast<long>(ids.size());
  bool minimal = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : minimal)
  for (long k = 0; k < n; ++k) {
    if (minimal && in_class(g.without_edge(ids[k]))) minimal = false;
  }
  return minimal;
}

Network minimalize(const Network& g, std::optional<std::uint64_t> seed) {
  require_in_class(g);
  // Cuts only shrink under deletion, so an edge that cannot go now cannot
  // go later either: one sweep reaches the same fixpoint as restarting.
  std::vector<EdgeId> order = g.edge_ids();
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  Network out = g;
  for (EdgeId e : order) {
    Network trial = out.without_edge(e);
    if (in_class(trial)) out = std::move(trial);
  }
  return out;
}

Theorem1Report theorem1_agreement(const Network& g, const std::vector<PathSystem>& systems) {
  if (g.num_pairs() != 2) {
    throw Error("out-of-contract", "the three predicates are only equivalent for two pairs");
  }
  if (systems.size() != 2) throw Error("bad-system", "expected one system per pair");
  for (const PathSystem& s : systems) validate_system(g, s);
  if (!covered_by(g, systems)) {
    throw Error("not-covered", "graph has an edge outside both path systems");
  }
  Theorem1Report report;
  report.minimal = is_minimal(g);
  report.non_reroutable = true;
  for (int i = 0; i < 2; ++i) {
    report.reroutable.push_back(is_reroutable(g, systems, i));
    if (report.reroutable.back()) report.non_reroutable = false;
  }
  report.no_consistent_cycle = true;
  for (int tag = 0; tag < 2; ++tag) {
    report.cycles.push_back(find_consistent_cycle(g, systems, tag));
    if (report.cycles.back()) report.no_consistent_cycle = false;
  }
  report.agree = report.minimal == report.non_reroutable &&
                 report.non_reroutable == report.no_consistent_cycle;
  return report;
}

std::optional<EdgeId> deletable_private_edge(const Network& g,
                                             const std::vector<PathSystem>& systems,
                                             int pair_index) {
  const PathSystem& own = system_for(systems, pair_index);
  for (const auto& [e, forward] : own.orientation()) {
    const bool shared = std::any_of(systems.begin(), systems.end(), [&](const PathSystem& s) {
      return &s != &own && s.uses(e);
    });
    if (!shared && in_class(g.without_edge(e))) return e;
  }
  return std::nullopt;
}

}  // namespace hubs
