#pragma once

#include <vector>

#include "hubs/network.hpp"

namespace hubs::testing {

inline Path forward(std::vector<EdgeId> edges) {
  Path p;
  for (EdgeId e : edges) p.steps.push_back(Step{e, true});
  return p;
}

// Two-pair graph with one crossing: phi S1 -> x -> R1, psi S2 -> x -> R2.
struct Crossing {
  Network g;
  std::vector<PathSystem> systems;
  VertexId x = -1;
};

inline Crossing crossing() {
  Crossing c;
  for (int k = 0; k < 5; ++k) c.g.add_vertex();
  c.x = 4;
  c.g.add_pair(0, 1, 1);
  c.g.add_pair(2, 3, 1);
  const EdgeId a = c.g.add_edge(0, 4, true), b = c.g.add_edge(4, 1, true);
  const EdgeId d = c.g.add_edge(2, 4, true), e = c.g.add_edge(4, 3, true);
  c.systems = {PathSystem(0, {forward({a, b})}), PathSystem(1, {forward({d, e})})};
  return c;
}

// Public edge a - b traversed a -> b by phi and b -> a by psi.
inline Crossing opposed() {
  Crossing c;
  for (int k = 0; k < 6; ++k) c.g.add_vertex();
  c.g.add_pair(0, 1, 1);
  c.g.add_pair(2, 3, 1);
  const VertexId a = 4, b = 5;
  const EdgeId s1a = c.g.add_edge(0, a, true), ab = c.g.add_edge(a, b, false), br1 = c.g.add_edge(b, 1, true);
  const EdgeId s2b = c.g.add_edge(2, b, true), ar2 = c.g.add_edge(a, 3, true);
  c.systems = {PathSystem(0, {forward({s1a, ab, br1})}),
               PathSystem(1, {Path{{{s2b, true}, {ab, false}, {ar2, true}}}})};
  return c;
}

}  // namespace hubs::testing
