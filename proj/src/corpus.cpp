#include "hubs/corpus.hpp"

#include <algorithm>
#include <random>

namespace hubs {

namespace {

template <typename T>
const T& pick(const std::vector<T>& items, std::mt19937_64& rng) {
  return items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng)];
}

int uniform(int lo, int hi, std::mt19937_64& rng) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

CorpusInstance random_instance(const std::vector<int>& demands, std::uint64_t seed,
                               const CorpusOptions& options) {
  if (demands.empty()) throw Error("bad-argument", "no demands given");
  std::mt19937_64 rng(seed);
  const int widest = *std::max_element(demands.begin(), demands.end());
  const int m = uniform(std::max(options.min_interior, widest), std::max(options.max_interior, widest), rng);

  Network g;
  std::vector<std::pair<VertexId, VertexId>> terminals;
  for (std::size_t i = 0; i < demands.size(); ++i) {
    const VertexId s = g.add_vertex();
    const VertexId r = g.add_vertex();
    terminals.push_back({s, r});
  }
  std::vector<VertexId> interior;
  for (int k = 0; k < m; ++k) interior.push_back(g.add_vertex());
  for (std::size_t i = 0; i < demands.size(); ++i) {
    g.add_pair(terminals[i].first, terminals[i].second, demands[i]);
  }

  CorpusInstance out;
  out.seed = seed;
  std::bernoulli_distribution follow(options.follow_probability);
  std::vector<bool> touched(g.vertex_bound(), false);  // on an earlier system
  for (std::size_t i = 0; i < demands.size(); ++i) {
    const auto [s, r] = terminals[i];
    std::vector<bool> taken(g.vertex_bound(), false);
    int left = m;
    std::vector<Path> paths;
    // Free vertices, restricted to earlier systems' vertices when the coin
    // says follow and there are any.
    auto free_vertex = [&] {
      std::vector<VertexId> all, old;
      for (VertexId v : interior) {
        if (taken[v]) continue;
        all.push_back(v);
        if (touched[v]) old.push_back(v);
      }
      return pick(!old.empty() && follow(rng) ? old : all, rng);
    };
    for (int k = 0; k < demands[i]; ++k) {
      const int later = demands[i] - 1 - k;
      const int cap = std::max(1, std::min(left - later, m / demands[i] + 2));
      const int len = uniform(1, cap, rng);
      VertexId x = free_vertex();
      taken[x] = true;
      --left;
      Path p{{Step{g.add_edge(s, x, true), true}}};
      for (int t = 1; t < len; ++t) {
        std::vector<EdgeId> existing;
        if (follow(rng)) {
          for (EdgeId e : g.incident(x)) {
            const Edge& edge = g.edge(e);
            const VertexId y = edge.other(x);
            if (!edge.directed && !taken[y]) existing.push_back(e);
          }
        }
        if (!existing.empty()) {
          const EdgeId e = pick(existing, rng);
          const Edge& edge = g.edge(e);
          p.steps.push_back(Step{e, edge.u == x});
          x = edge.other(x);
        } else {
          const VertexId y = free_vertex();
          p.steps.push_back(Step{g.add_edge(x, y, false), true});
          x = y;
        }
        taken[x] = true;
        --left;
      }
      p.steps.push_back(Step{g.add_edge(x, r, true), true});
      paths.push_back(std::move(p));
    }
    for (VertexId v : interior) touched[v] = touched[v] || taken[v];
    out.planted.systems.emplace_back(static_cast<int>(i), std::move(paths));
  }
  out.covered = g;

  const int chords = m >= 2 ? uniform(0, options.max_chords, rng) : 0;
  for (int k = 0; k < chords; ++k) {
    const VertexId a = pick(interior, rng);
    VertexId b = pick(interior, rng);
    while (b == a) b = pick(interior, rng);
    g.add_edge(a, b, false);
  }
  out.planted.network = std::move(g);
  return out;
}

std::vector<CorpusInstance> random_corpus(const std::vector<int>& demands, int count, std::uint64_t seed,
                                          const CorpusOptions& options) {
  std::mt19937_64 master(seed);
  std::vector<std::uint64_t> seeds(count);
  for (auto& s : seeds) s = master();
  std::vector<CorpusInstance> out(count);
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < count; ++k) out[k] = random_instance(demands, seeds[k], options);
  return out;
}

}  // namespace hubs
