#include "hubs/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <functional>
#include <queue>

#include "hubs/cuts.hpp"

namespace hubs {

namespace {

constexpr int kMaxInterior = 20;

std::vector<VertexId> interior_vertices(const Network& g) {
  std::vector<VertexId> out;
  for (VertexId v : g.vertices()) {
    if (!g.is_terminal(v)) out.push_back(v);
  }
  if (static_cast<int>(out.size()) > kMaxInterior) {
    throw Error("oracle-guard", std::to_string(out.size()) + " interior vertices exceed the limit of " +
                                    std::to_string(kMaxInterior));
  }
  return out;
}

bool can_leave(const Edge& e, VertexId from) { return !e.directed || e.u == from; }

}  // namespace

std::vector<PathSystem> enumerate_path_systems(const Network& g, int pair_index) {
  interior_vertices(g);
  const TerminalPair pair = g.pair(pair_index);
  const std::vector<EdgeId> starts = g.incident(pair.source);
  std::vector<PathSystem> out;
  std::vector<bool> used(g.vertex_bound(), false);
  std::vector<Path> chosen;

  // Paths are added in increasing order of their first edge, so every set
  // is produced exactly once.
  std::function<void(std::size_t)> choose;
  std::function<void(Path&, VertexId, std::size_t)> extend = [&](Path& path, VertexId x, std::size_t idx) {
    for (EdgeId f : g.incident(x)) {
      const Edge& e = g.edge(f);
      if (!can_leave(e, x)) continue;
      const VertexId y = e.other(x);
      path.steps.push_back(Step{f, e.u == x});
      if (y == pair.sink) {
        chosen.push_back(path);
        choose(idx + 1);
        chosen.pop_back();
      } else if (!g.is_terminal(y) && !used[y]) {
        used[y] = true;
        extend(path, y, idx);
        used[y] = false;
      }
      path.steps.pop_back();
    }
  };
  choose = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == pair.demand) {
      out.emplace_back(pair_index, chosen);
      return;
    }
    for (std::size_t idx = from; idx < starts.size(); ++idx) {
      const Edge& e = g.edge(starts[idx]);
      if (!can_leave(e, pair.source)) continue;
      const VertexId x = e.other(pair.source);
      Path path{{Step{e.id, e.u == pair.source}}};
      if (x == pair.sink) {
        chosen.push_back(path);
        choose(idx + 1);
        chosen.pop_back();
      } else if (!g.is_terminal(x) && !used[x]) {
        used[x] = true;
        extend(path, x, idx);
        used[x] = false;
      }
    }
  };
  choose(0);
  return out;
}

int brute_force_cut(const Network& g, int pair_index) {
  const std::vector<VertexId> interior = interior_vertices(g);
  const TerminalPair pair = g.pair(pair_index);
  int direct = 0;
  for (EdgeId e : g.incident(pair.source)) {
    if (g.edge(e).other(pair.source) == pair.sink && can_leave(g.edge(e), pair.source)) ++direct;
  }
  std::vector<bool> removed(g.vertex_bound(), false);
  auto connected = [&] {
    std::vector<bool> seen(g.vertex_bound(), false);
    std::queue<VertexId> frontier;
    frontier.push(pair.source);
    seen[pair.source] = true;
    while (!frontier.empty()) {
      const VertexId x = frontier.front();
      frontier.pop();
      for (EdgeId f : g.incident(x)) {
        const Edge& e = g.edge(f);
        if (!can_leave(e, x)) continue;
        const VertexId y = e.other(x);
        if (x == pair.source && y == pair.sink) continue;
        if (y == pair.sink) return true;
        if (seen[y] || removed[y] || g.is_terminal(y)) continue;
        seen[y] = true;
        frontier.push(y);
      }
    }
    return false;
  };
  const int m = static_cast<int>(interior.size());
  for (int size = 0; size <= m; ++size) {
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + size, true);
    do {
      for (int k = 0; k < m; ++k) removed[interior[k]] = pick[k];
      if (!connected()) return size + direct;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return m + direct;
}

namespace {

struct Partial {
  long feasible = 0;
  long minimal = 0;
  int best = INT_MAX;
  std::vector<EdgeId> best_edges;

  void merge(const Partial& o) {
    feasible += o.feasible;
    minimal += o.minimal;
    if (o.best < best || (o.best == best && o.best_edges < best_edges)) {
      best = o.best;
      best_edges = o.best_edges;
    }
  }
};

// Include/exclude search over the optional edges. `voluntary[k]` marks an
// included edge whose exclusion was feasible at decision k; only those can
// be deletable at a leaf, since exclusion sets only grow.
class SubsetSearch {
 public:
  explicit SubsetSearch(std::vector<Edge> optional) : optional_(std::move(optional)) {}

  std::size_t size() const { return optional_.size(); }

  void dfs(std::size_t k, Network& cur, std::vector<char>& voluntary, Partial& out) const {
    if (k == optional_.size()) {
      leaf(cur, voluntary, out);
      return;
    }
    const Edge& e = optional_[k];
    cur.remove_edge(e.id);
    const bool can = in_class(cur);
    if (can) dfs(k + 1, cur, voluntary, out);
    cur.add_edge(e);
    voluntary[k] = can;
    dfs(k + 1, cur, voluntary, out);
    voluntary[k] = 0;
  }

  struct Prefix {
    std::vector<char> excluded;
    std::vector<char> voluntary;
  };

  // Feasible decision vectors for the first `depth` optional edges.
  void prefixes(std::size_t k, std::size_t depth, Network& cur, std::vector<char>& excluded,
                std::vector<char>& voluntary, std::vector<Prefix>& out) const {
    if (k == depth) {
      out.push_back({excluded, voluntary});
      return;
    }
    const Edge& e = optional_[k];
    cur.remove_edge(e.id);
    const bool can = in_class(cur);
    if (can) {
      excluded[k] = 1;
      prefixes(k + 1, depth, cur, excluded, voluntary, out);
      excluded[k] = 0;
    }
    cur.add_edge(e);
    voluntary[k] = can;
    prefixes(k + 1, depth, cur, excluded, voluntary, out);
    voluntary[k] = 0;
  }

  const Edge& edge(std::size_t k) const { return optional_[k]; }

 private:
  void leaf(Network& cur, const std::vector<char>& voluntary, Partial& out) const {
    ++out.feasible;
    for (std::size_t k = 0; k < optional_.size(); ++k) {
      if (!voluntary[k]) continue;
      cur.remove_edge(optional_[k].id);
      const bool deletable = in_class(cur);
      cur.add_edge(optional_[k]);
      if (deletable) return;
    }
    ++out.minimal;
    const int hubs = hub_count(cur).value;
    if (hubs < out.best || (hubs == out.best && cur.edge_ids() < out.best_edges)) {
      out.best = hubs;
      out.best_edges = cur.edge_ids();
    }
  }

  std::vector<Edge> optional_;
};

struct Setup {
  SubsetSearch search;
  int mandatory = 0;
};

Setup prepare(const Network& g, const OracleOptions& options) {
  if (!in_class(g)) throw Error("not-in-class", "oracle input misses a demand");
  std::vector<Edge> optional;
  int mandatory = 0;
  for (const Edge& e : g.edges()) {
    if (in_class(g.without_edge(e.id))) {
      optional.push_back(e);
    } else {
      ++mandatory;
    }
  }
  if (static_cast<int>(optional.size()) > options.max_edges) {
    throw Error("oracle-guard", std::to_string(optional.size()) + " optional edges exceed the limit of " +
                                    std::to_string(options.max_edges));
  }
  // Edges at busy vertices first; this only changes the visiting order.
  auto weight = [&](const Edge& e) { return g.degree(e.u) + g.degree(e.v); };
  std::stable_sort(optional.begin(), optional.end(),
                   [&](const Edge& a, const Edge& b) { return weight(a) > weight(b); });
  return {SubsetSearch(std::move(optional)), mandatory};
}

OracleReport finish(const Network& g, const Setup& setup, const Partial& result,
                    std::chrono::steady_clock::time_point start) {
  OracleReport report;
  report.edges = result.best_edges;
  report.min_hubs = result.best;
  report.num_minimal_subgraphs = result.minimal;
  report.num_feasible_subgraphs = result.feasible;
  report.mandatory_edges = setup.mandatory;
  report.optional_edges = static_cast<int>(setup.search.size());
  report.min_hub_subgraph = g;
  for (EdgeId e : g.edge_ids()) {
    if (!std::binary_search(result.best_edges.begin(), result.best_edges.end(), e)) {
      report.min_hub_subgraph.remove_edge(e);
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

OracleReport min_hub_subgraph_serial(const Network& g, const OracleOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Setup setup = prepare(g, options);
  Network cur = g;
  std::vector<char> voluntary(setup.search.size(), 0);
  Partial result;
  setup.search.dfs(0, cur, voluntary, result);
  return finish(g, setup, result, start);
}

OracleReport min_hub_subgraph(const Network& g, const OracleOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Setup setup = prepare(g, options);
  const std::size_t n = setup.search.size();
  const std::size_t depth = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(0, options.split_depth)));
  std::vector<SubsetSearch::Prefix> prefixes;
  {
    Network cur = g;
    std::vector<char> excluded(depth, 0), voluntary(depth, 0);
    setup.search.prefixes(0, depth, cur, excluded, voluntary, prefixes);
  }
  std::vector<Partial> parts(prefixes.size());
  const long count = static_cast<long>(prefixes.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    Network cur = g;
    for (std::size_t k = 0; k < depth; ++k) {
      if (prefixes[i].excluded[k]) cur.remove_edge(setup.search.edge(k).id);
    }
    std::vector<char> voluntary(n, 0);
    std::copy(prefixes[i].voluntary.begin(), prefixes[i].voluntary.end(), voluntary.begin());
    setup.search.dfs(depth, cur, voluntary, parts[i]);
  }
  Partial result;
  for (const Partial& p : parts) result.merge(p);
  return finish(g, setup, result, start);
}

BigInt theoretical_bound(const std::vector<int>& demands) {
  if (demands.empty()) throw Error("bad-argument", "demand list is empty");
  const std::size_t n = demands.size();
  if (n == 1) return 0;
  if (n == 2) return BigInt(2) * demands[0] * demands[1];
  std::vector<int> sorted = demands;
  std::sort(sorted.rbegin(), sorted.rend());
  if (std::all_of(sorted.begin() + 2, sorted.end(), [](int c) { return c == 1; })) {
    return BigInt(2) * (BigInt(sorted[0]) * sorted[1] + static_cast<long>(n - 2));
  }
  if (sorted == std::vector<int>{2, 2, 2}) return 12;
  return finiteness_bound(demands);
}

BoundCheck check_bound(const Network& g, const OracleOptions& options) {
  const OracleReport report = min_hub_subgraph(g, options);
  std::vector<int> demands;
  for (const TerminalPair& p : g.pairs()) demands.push_back(p.demand);
  BoundCheck out;
  out.min_hubs = report.min_hubs;
  out.bound = theoretical_bound(demands);
  out.ok = BigInt(report.min_hubs) <= out.bound;
  return out;
}

}  // namespace hubs
