#include "hubs/representation.hpp"

#include <algorithm>

#include "hubs/cuts.hpp"
#include "hubs/minimality.hpp"

namespace hubs {

namespace {

std::string str(int x) { return std::to_string(x); }

// Mutable working copy of a stage: path systems are kept as raw step lists
// while edges are being replaced underneath them.
struct Work {
  Network g;
  std::vector<std::vector<Path>> paths;
  std::map<EdgeId, std::vector<EdgeId>> eprov;
  std::map<VertexId, VertexId> vprov;
};

Work open(const Representation& in) {
  Work w{in.graph, {}, in.edge_provenance, in.vertex_provenance};
  for (const PathSystem& s : in.systems) w.paths.push_back(s.paths());
  return w;
}

Representation close(Work&& w) {
  Representation out;
  out.graph = std::move(w.g);
  for (std::size_t i = 0; i < w.paths.size(); ++i) {
    out.systems.emplace_back(static_cast<int>(i), std::move(w.paths[i]));
    validate_system(out.graph, out.systems.back());
  }
  out.edge_provenance = std::move(w.eprov);
  out.vertex_provenance = std::move(w.vprov);
  out.naturally_oriented = naturally_oriented(out.graph, out.systems);
  return out;
}

struct Passage {
  int system = -1;
  int path = -1;
  std::size_t step = 0;  // index of the step entering the vertex
};

// Where system `s` passes through interior vertex v, if it does.
std::optional<Passage> passage(const Work& w, int s, VertexId v) {
  for (std::size_t p = 0; p < w.paths[s].size(); ++p) {
    const auto& steps = w.paths[s][p].steps;
    for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
      if (head_of(w.g, steps[k]) == v) return Passage{s, static_cast<int>(p), k};
    }
  }
  return std::nullopt;
}

std::vector<Step>& steps_of(Work& w, const Passage& at) { return w.paths[at.system][at.path].steps; }

EdgeId add_oriented(Work& w, VertexId tail, VertexId head, std::vector<EdgeId> prov) {
  const bool directed = w.g.is_terminal(tail) || w.g.is_terminal(head);
  const EdgeId id = w.g.add_edge(tail, head, directed);
  w.eprov[id] = std::move(prov);
  return id;
}

void forget_edge(Work& w, EdgeId e) { w.eprov.erase(e); }

std::vector<EdgeId> concat(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
  std::vector<EdgeId> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

bool naturally_oriented(const Network& g, const std::vector<PathSystem>& systems) {
  if (systems.size() != 2) return false;
  for (EdgeId e : g.edge_ids()) {
    auto a = systems[0].orientation().find(e);
    auto b = systems[1].orientation().find(e);
    if (a != systems[0].orientation().end() && b != systems[1].orientation().end() &&
        a->second != b->second) {
      return false;
    }
  }
  return true;
}

Representation initial_stage(const Network& g, const std::vector<PathSystem>& systems) {
  if (g.num_pairs() != 2 || systems.size() != 2) {
    throw Error("out-of-contract", "representations are defined for two pairs");
  }
  for (int i = 0; i < 2; ++i) {
    if (systems[i].pair_index() != i) throw Error("bad-system", "systems must be listed by pair");
    validate_system(g, systems[i]);
  }
  if (!covered_by(g, systems)) throw Error("not-covered", "an edge lies on no system path");
  Representation rep;
  rep.graph = g;
  rep.systems = systems;
  for (EdgeId e : g.edge_ids()) rep.edge_provenance[e] = {e};
  for (VertexId v : g.vertices()) rep.vertex_provenance[v] = v;
  rep.naturally_oriented = naturally_oriented(g, systems);
  return rep;
}

Representation remove_relays(const Representation& in) {
  Work w = open(in);
  for (VertexId v : in.graph.vertices()) {
    if (w.g.is_terminal(v)) continue;
    if (w.g.degree(v) == 0) {
      w.g.remove_vertex(v);
      w.vprov.erase(v);
      continue;
    }
    if (w.g.degree(v) != 2) continue;
    const EdgeId e1 = w.g.incident(v)[0];
    const EdgeId e2 = w.g.incident(v)[1];
    if (w.g.edge(e1).other(v) == w.g.edge(e2).other(v)) {
      throw Error("degenerate-relay", "vertex " + str(v) + " has both edges to one neighbour");
    }
    std::vector<Passage> through;
    for (int s = 0; s < static_cast<int>(w.paths.size()); ++s) {
      if (auto at = passage(w, s, v)) through.push_back(*at);
    }
    if (through.empty()) throw Error("not-covered", "relay " + str(v) + " lies on no path");
    const auto& first = steps_of(w, through.front());
    const Step in_step = first[through.front().step];
    const Step out_step = first[through.front().step + 1];
    const VertexId tail = tail_of(w.g, in_step);
    const VertexId head = head_of(w.g, out_step);
    std::vector<bool> forward;
    for (const Passage& at : through) forward.push_back(tail_of(w.g, steps_of(w, at)[at.step]) == tail);
    auto prov = concat(w.eprov[in_step.edge], w.eprov[out_step.edge]);
    forget_edge(w, e1);
    forget_edge(w, e2);
    w.g.remove_vertex(v);
    w.vprov.erase(v);
    const EdgeId merged = add_oriented(w, tail, head, std::move(prov));
    for (std::size_t k = 0; k < through.size(); ++k) {
      auto& steps = steps_of(w, through[k]);
      const auto at = steps.begin() + static_cast<long>(through[k].step);
      *at = Step{merged, static_cast<bool>(forward[k])};
      steps.erase(at + 1);
    }
  }
  return close(std::move(w));
}

Representation stretch_crossings(const Representation& in) {
  Work w = open(in);
  for (VertexId v : in.graph.vertices()) {
    if (w.g.is_terminal(v) || w.g.degree(v) != 4) continue;
    auto phi = passage(w, 0, v);
    auto psi = passage(w, 1, v);
    auto bad = [&] { return Error("unexpected-degree-4", "vertex " + str(v) + " is not a crossing"); };
    if (!phi || !psi) throw bad();
    const Step a_in = steps_of(w, *phi)[phi->step], a_out = steps_of(w, *phi)[phi->step + 1];
    const Step b_in = steps_of(w, *psi)[psi->step], b_out = steps_of(w, *psi)[psi->step + 1];
    std::vector<EdgeId> four{a_in.edge, a_out.edge, b_in.edge, b_out.edge};
    std::sort(four.begin(), four.end());
    if (std::adjacent_find(four.begin(), four.end()) != four.end()) throw bad();

    // v1 takes both predecessors and v2 both successors, so the new public
    // edge v1 -> v2 is traversed the same way by phi and psi.
    const VertexId u1 = tail_of(w.g, a_in), u2 = head_of(w.g, a_out);
    const VertexId u3 = tail_of(w.g, b_in), u4 = head_of(w.g, b_out);
    std::vector<std::vector<EdgeId>> prov;
    for (const Step& s : {a_in, b_in, a_out, b_out}) prov.push_back(w.eprov[s.edge]);
    for (EdgeId e : four) forget_edge(w, e);
    w.g.remove_vertex(v);
    const VertexId origin = w.vprov[v];
    w.vprov.erase(v);
    const VertexId v1 = w.g.add_vertex();
    const VertexId v2 = w.g.add_vertex();
    w.vprov[v1] = w.vprov[v2] = origin;
    const EdgeId bridge = add_oriented(w, v1, v2, {});
    const EdgeId e1 = add_oriented(w, u1, v1, prov[0]);
    const EdgeId e3 = add_oriented(w, u3, v1, prov[1]);
    const EdgeId e2 = add_oriented(w, v2, u2, prov[2]);
    const EdgeId e4 = add_oriented(w, v2, u4, prov[3]);

    auto splice = [&](const Passage& at, EdgeId first, EdgeId last) {
      auto& steps = steps_of(w, at);
      const auto it = steps.begin() + static_cast<long>(at.step);
      *it = Step{first, true};
      *(it + 1) = Step{last, true};
      steps.insert(it + 1, Step{bridge, true});
    };
    splice(*phi, e1, e2);
    splice(*psi, e3, e4);
  }
  return close(std::move(w));
}

Representation match_directions(const Representation& in) {
  Work w = open(in);
  std::vector<EdgeId> shared;
  for (EdgeId e : in.graph.edge_ids()) {
    if (in.systems[0].uses(e) && in.systems[1].uses(e)) shared.push_back(e);
  }
  for (EdgeId e : shared) {
    // Locate e on phi (u -> v) and on psi.
    std::optional<Passage> on_phi, on_psi;
    for (int s = 0; s < 2; ++s) {
      for (std::size_t p = 0; p < w.paths[s].size(); ++p) {
        const auto& steps = w.paths[s][p].steps;
        for (std::size_t k = 0; k < steps.size(); ++k) {
          if (steps[k].edge == e) (s == 0 ? on_phi : on_psi) = Passage{s, static_cast<int>(p), k};
        }
      }
    }
    const Step phi_step = steps_of(w, *on_phi)[on_phi->step];
    auto& psi_steps = steps_of(w, *on_psi);
    const std::size_t k = on_psi->step;
    if (psi_steps[k].forward == phi_step.forward) continue;
    if (k == 0 || k + 1 >= psi_steps.size()) {
      throw Error("internal", "public edge " + str(e) + " touches a terminal");
    }
    const VertexId u = tail_of(w.g, phi_step), v = head_of(w.g, phi_step);
    const Step before = psi_steps[k - 1];  // w3 -> v
    const Step after = psi_steps[k + 1];   // u -> w4
    for (const Step& s : {before, after}) {
      for (const auto& p : w.paths[0]) {
        for (const Step& t : p.steps) {
          if (t.edge == s.edge) throw Error("internal", "edge " + str(s.edge) + " is not private to psi");
        }
      }
    }
    const VertexId w3 = tail_of(w.g, before), w4 = head_of(w.g, after);
    auto prov_before = w.eprov[before.edge], prov_after = w.eprov[after.edge];
    forget_edge(w, before.edge);
    forget_edge(w, after.edge);
    w.g.remove_edge(before.edge);
    w.g.remove_edge(after.edge);
    const EdgeId into_u = add_oriented(w, w3, u, std::move(prov_before));
    const EdgeId from_v = add_oriented(w, v, w4, std::move(prov_after));
    psi_steps[k - 1] = Step{into_u, true};
    psi_steps[k] = phi_step;
    psi_steps[k + 1] = Step{from_v, true};
  }
  return close(std::move(w));
}

Representation to_representation(const Network& g, const std::vector<PathSystem>& systems) {
  return match_directions(stretch_crossings(remove_relays(initial_stage(g, systems))));
}

std::vector<std::string> representation_violations(const Representation& rep) {
  std::vector<std::string> out;
  const Network& g = rep.graph;
  for (VertexId v : g.vertices()) {
    if (!g.is_terminal(v) && g.degree(v) != 3) {
      out.push_back("vertex " + str(v) + " has degree " + str(g.degree(v)));
    }
  }
  if (!naturally_oriented(g, rep.systems)) out.push_back("not naturally oriented");
  if (!in_class(g)) {
    out.push_back("not in class");
  } else if (!is_minimal(g)) {
    out.push_back("not minimal");
  }
  return out;
}

}  // namespace hubs
