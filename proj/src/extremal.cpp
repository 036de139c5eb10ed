#include "hubs/extremal.hpp"

#include <map>

namespace hubs {

namespace {

struct Builder {
  Network g;

  EdgeId link(VertexId a, VertexId b) { return g.add_edge(a, b, g.is_terminal(a) || g.is_terminal(b)); }

  // Links a vertex chain and returns its edges.
  std::vector<EdgeId> chain(const std::vector<VertexId>& vs) {
    std::vector<EdgeId> out;
    for (std::size_t k = 0; k + 1 < vs.size(); ++k) out.push_back(link(vs[k], vs[k + 1]));
    return out;
  }
};

Path forward_path(const std::vector<EdgeId>& edges) {
  Path p;
  for (EdgeId e : edges) p.steps.push_back(Step{e, true});
  return p;
}

struct Grid {
  int c1 = 0, c2 = 0;
  std::vector<VertexId> cells;  // lambda(i,j) at 2*(i*c2+j), mu right after

  VertexId lambda(int i, int j) const { return cells[2 * (i * c2 + j)]; }
  VertexId mu(int i, int j) const { return cells[2 * (i * c2 + j) + 1]; }
};

Grid alloc_grid(Builder& b, int c1, int c2) {
  if (c1 < 1 || c2 < 1) throw Error("bad-argument", "grid demands must be positive");
  Grid grid{c1, c2, {}};
  for (int k = 0; k < 2 * c1 * c2; ++k) grid.cells.push_back(b.g.add_vertex());
  return grid;
}

// Lays phi_i (with optional lead vertices before lambda(i,1)) and psi_j.
// Returns the two path systems.
std::vector<PathSystem> lay_grid(Builder& b, const Grid& grid, VertexId s1, VertexId r1, VertexId s2,
                                 VertexId r2, const std::vector<std::vector<VertexId>>& lead) {
  std::vector<std::vector<EdgeId>> shared(grid.c1, std::vector<EdgeId>(grid.c2, -1));
  std::vector<Path> phi, psi;
  for (int i = 0; i < grid.c1; ++i) {
    std::vector<VertexId> vs{s1};
    if (i < static_cast<int>(lead.size())) vs.insert(vs.end(), lead[i].begin(), lead[i].end());
    for (int j = 0; j < grid.c2; ++j) {
      vs.push_back(grid.lambda(i, j));
      vs.push_back(grid.mu(i, j));
    }
    vs.push_back(r1);
    std::vector<EdgeId> es = b.chain(vs);
    for (std::size_t k = 0; k < es.size(); ++k) {
      for (int j = 0; j < grid.c2; ++j) {
        if (vs[k] == grid.lambda(i, j)) shared[i][j] = es[k];
      }
    }
    phi.push_back(forward_path(es));
  }
  for (int j = 0; j < grid.c2; ++j) {
    std::vector<EdgeId> es{b.link(s2, grid.lambda(0, j))};
    for (int i = 0; i < grid.c1; ++i) {
      es.push_back(shared[i][j]);
      es.push_back(i + 1 < grid.c1 ? b.link(grid.mu(i, j), grid.lambda(i + 1, j)) : b.link(grid.mu(i, j), r2));
    }
    psi.push_back(forward_path(es));
  }
  return {PathSystem(0, std::move(phi)), PathSystem(1, std::move(psi))};
}

// Edge joining a and b (first in id order).
EdgeId edge_between(const Network& g, VertexId a, VertexId b) {
  for (EdgeId e : g.incident(a)) {
    if (g.edge(e).other(a) == b) return e;
  }
  throw Error("internal", "no edge between " + std::to_string(a) + " and " + std::to_string(b));
}

}  // namespace

Document grid_graph(int c1, int c2) { return ones_graph(c1, c2, 0); }

Document ones_graph(int c1, int c2, int n) {
  if (n < 0) throw Error("bad-argument", "number of unit pairs must be non-negative");
  Builder b;
  const VertexId s1 = b.g.add_vertex(), r1 = b.g.add_vertex();
  const VertexId s2 = b.g.add_vertex(), r2 = b.g.add_vertex();
  const Grid grid = alloc_grid(b, c1, c2);
  struct Unit {
    VertexId s, r, gamma, delta;
  };
  std::vector<Unit> units;
  for (int k = 0; k < n; ++k) {
    Unit u;
    u.s = b.g.add_vertex();
    u.r = b.g.add_vertex();
    u.gamma = b.g.add_vertex();
    u.delta = b.g.add_vertex();
    units.push_back(u);
  }
  b.g.add_pair(s1, r1, c1);
  b.g.add_pair(s2, r2, c2);
  for (const Unit& u : units) b.g.add_pair(u.s, u.r, 1);

  std::vector<VertexId> lead;
  for (const Unit& u : units) {
    lead.push_back(u.gamma);
    lead.push_back(u.delta);
  }
  Document doc;
  doc.systems = lay_grid(b, grid, s1, r1, s2, r2, {lead});
  for (std::size_t k = 0; k < units.size(); ++k) {
    const Unit& u = units[k];
    std::vector<EdgeId> es{b.link(u.s, u.gamma), edge_between(b.g, u.gamma, u.delta), b.link(u.delta, u.r)};
    doc.systems.emplace_back(static_cast<int>(k) + 2, std::vector<Path>{forward_path(es)});
  }
  doc.network = std::move(b.g);
  return doc;
}

Document witness_222() {
  Builder b;
  const VertexId s1 = b.g.add_vertex(), r1 = b.g.add_vertex();
  const VertexId s2 = b.g.add_vertex(), r2 = b.g.add_vertex();
  const VertexId s3 = b.g.add_vertex(), r3 = b.g.add_vertex();
  const Grid grid = alloc_grid(b, 2, 2);
  std::vector<std::vector<VertexId>> lead(2);
  for (auto& l : lead) {
    l.push_back(b.g.add_vertex());
    l.push_back(b.g.add_vertex());
  }
  b.g.add_pair(s1, r1, 2);
  b.g.add_pair(s2, r2, 2);
  b.g.add_pair(s3, r3, 2);
  Document doc;
  doc.systems = lay_grid(b, grid, s1, r1, s2, r2, lead);
  std::vector<Path> xi;
  for (const auto& l : lead) {
    xi.push_back(forward_path({b.link(s3, l[0]), edge_between(b.g, l[0], l[1]), b.link(l[1], r3)}));
  }
  doc.systems.emplace_back(2, std::move(xi));
  doc.network = std::move(b.g);
  return doc;
}

Document reroutable_witness() {
  Builder b;
  const VertexId s1 = b.g.add_vertex(), r1 = b.g.add_vertex();
  const VertexId s2 = b.g.add_vertex(), r2 = b.g.add_vertex();
  const VertexId s3 = b.g.add_vertex(), r3 = b.g.add_vertex();
  const VertexId a = b.g.add_vertex(), bb = b.g.add_vertex();
  const VertexId c = b.g.add_vertex(), d = b.g.add_vertex();
  b.g.add_pair(s1, r1, 2);
  b.g.add_pair(s2, r2, 2);
  b.g.add_pair(s3, r3, 2);
  const EdgeId e1 = b.link(s3, a), e2 = b.link(s3, bb), e3 = b.link(a, c), e4 = b.link(bb, c);
  const EdgeId e5 = b.link(a, d), e6 = b.link(bb, d), e7 = b.link(c, r3), e8 = b.link(d, r3);
  const EdgeId s1a = b.link(s1, a), cr1 = b.link(c, r1), s1d = b.link(s1, d), br1 = b.link(bb, r1);
  const EdgeId s2b = b.link(s2, bb), cr2 = b.link(c, r2), s2d = b.link(s2, d), ar2 = b.link(a, r2);
  Document doc;
  doc.systems.emplace_back(0, std::vector<Path>{forward_path({s1a, e3, cr1}),
                                                Path{{{s1d, true}, {e6, false}, {br1, true}}}});
  doc.systems.emplace_back(1, std::vector<Path>{forward_path({s2b, e4, cr2}),
                                                Path{{{s2d, true}, {e5, false}, {ar2, true}}}});
  doc.systems.emplace_back(2, std::vector<Path>{forward_path({e1, e3, e7}), forward_path({e2, e6, e8})});
  doc.network = std::move(b.g);
  return doc;
}

Document example_graph() {
  Builder b;
  const VertexId s1 = b.g.add_vertex(), r1 = b.g.add_vertex();
  const VertexId s2 = b.g.add_vertex(), r2 = b.g.add_vertex();
  std::vector<VertexId> v;  // a b c d p q r s
  for (int k = 0; k < 8; ++k) v.push_back(b.g.add_vertex());
  const VertexId a = v[0], bv = v[1], c = v[2], d = v[3], p = v[4], q = v[5], r = v[6], s = v[7];
  b.g.add_pair(s1, r1, 2);
  b.g.add_pair(s2, r2, 2);
  const std::vector<std::pair<VertexId, VertexId>> ends{
      {s1, a}, {s2, a}, {a, bv}, {s1, p}, {s2, c}, {bv, p}, {bv, c}, {p, q},
      {c, d},  {q, r},  {d, r},  {q, r2}, {d, r1}, {r, s},  {s, r2}, {s, r1}};
  std::vector<EdgeId> e{-1};  // 1-based
  for (const auto& [x, y] : ends) e.push_back(b.link(x, y));
  Document doc;
  doc.systems.emplace_back(0, std::vector<Path>{forward_path({e[1], e[3], e[7], e[9], e[13]}),
                                                forward_path({e[4], e[8], e[10], e[14], e[16]})});
  doc.systems.emplace_back(1, std::vector<Path>{forward_path({e[2], e[3], e[6], e[8], e[12]}),
                                                forward_path({e[5], e[9], e[11], e[14], e[15]})});
  doc.network = std::move(b.g);
  return doc;
}

namespace {

BigInt bound(const std::vector<int>& c, std::map<std::vector<int>, BigInt>& memo) {
  const std::size_t k = c.size();
  if (k == 1) return 0;
  if (k == 2) return BigInt(2) * c[0] * c[1];
  auto it = memo.find(c);
  if (it != memo.end()) return it->second;
  const BigInt n1 = bound(std::vector<int>(c.begin(), c.end() - 1), memo);
  BigInt n2 = 0;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    std::vector<int> rest;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i) rest.push_back(c[j]);
    }
    n2 += bound(rest, memo);
  }
  const BigInt value = n1 + n2 + BigInt(k - 1) * n1 * (c.back() + n2);
  memo.emplace(c, value);
  return value;
}

}  // namespace

BigInt finiteness_bound(const std::vector<int>& demands) {
  if (demands.empty()) throw Error("bad-argument", "demand list is empty");
  for (int c : demands) {
    if (c <= 0) throw Error("bad-argument", "demands must be positive");
  }
  std::map<std::vector<int>, BigInt> memo;
  return bound(demands, memo);
}

}  // namespace hubs
