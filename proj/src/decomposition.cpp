#include <algorithm>
#include <set>

#include "hubs/representation.hpp"

namespace hubs {

namespace {

std::string str(int x) { return std::to_string(x); }

// Natural direction of an edge under whichever system uses it.
struct Orienter {
  const Network& g;
  const std::vector<PathSystem>& systems;

  VertexId tail(EdgeId e) const {
    for (const PathSystem& s : systems) {
      auto it = s.orientation().find(e);
      if (it != s.orientation().end()) return it->second ? g.edge(e).u : g.edge(e).v;
    }
    throw Error("decomposition-violation", "edge " + str(e) + " lies on no path");
  }
  VertexId head(EdgeId e) const { return g.edge(e).other(tail(e)); }
};

}  // namespace

std::string to_string(PathKind kind) {
  switch (kind) {
    case PathKind::S1S2: return "S1S2";
    case PathKind::S1R1: return "S1R1";
    case PathKind::R2S2: return "R2S2";
    case PathKind::R2R1: return "R2R1";
  }
  return "?";
}

Decomposition decompose_private(const Representation& rep) {
  const Network& g = rep.graph;
  auto fail = [](const std::string& why) -> Error { return Error("decomposition-violation", why); };
  if (g.num_pairs() != 2 || rep.systems.size() != 2) throw fail("expected two pairs");
  const VertexId s1 = g.pair(0).source, r1 = g.pair(0).sink;
  const VertexId s2 = g.pair(1).source, r2 = g.pair(1).sink;
  const auto tags = classify_edges(g, rep.systems);
  const Orienter orient{g, rep.systems};
  auto is_private = [&](EdgeId e) { return tags.at(e).kind == EdgeClass::private_edge; };

  Decomposition dec;
  std::set<EdgeId> used;
  auto walk = [&](VertexId anchor, EdgeId first) {
    AlternatingPath path;
    path.vertices.push_back(anchor);
    VertexId at = anchor;
    EdgeId e = first;
    while (true) {
      if (!is_private(e)) throw fail("edge " + str(e) + " at a terminal is public");
      if (!used.insert(e).second) throw fail("edge " + str(e) + " reached twice");
      path.steps.push_back(e);
      at = g.edge(e).other(at);
      path.vertices.push_back(at);
      if (g.is_terminal(at)) break;
      std::vector<EdgeId> priv;
      for (EdgeId x : g.incident(at)) {
        if (is_private(x)) priv.push_back(x);
      }
      if (priv.size() != 2) throw fail("vertex " + str(at) + " has " + str(static_cast<int>(priv.size())) + " private edges");
      e = priv[0] == e ? priv[1] : priv[0];
    }
    const VertexId end = path.vertices.back();
    if (anchor == s1 && end == s2) {
      path.kind = PathKind::S1S2;
    } else if (anchor == s1 && end == r1) {
      path.kind = PathKind::S1R1;
    } else if (anchor == r2 && end == s2) {
      path.kind = PathKind::R2S2;
    } else if (anchor == r2 && end == r1) {
      path.kind = PathKind::R2R1;
    } else {
      throw fail("alternating path from " + str(anchor) + " ends at " + str(end));
    }
    for (std::size_t i = 1; i + 1 < path.vertices.size(); ++i) {
      const VertexId x = path.vertices[i];
      const bool tail_before = orient.tail(path.steps[i - 1]) == x;
      const bool tail_after = orient.tail(path.steps[i]) == x;
      if (tail_before != tail_after) throw fail("vertex " + str(x) + " breaks the head/tail rule");
      (tail_after ? path.upper : path.lower).push_back(x);
      dec.slots[x] = VertexSlot{static_cast<int>(dec.paths.size()), static_cast<int>(i), tail_after};
    }
    if (path.kind == PathKind::S1S2) {
      if (path.lower.empty()) throw fail("S1S2 path without lower vertices");
      path.choke = path.lower.back();
    } else if (path.kind == PathKind::R2R1) {
      if (path.upper.empty()) throw fail("R2R1 path without upper vertices");
      path.choke = path.upper.back();
    }
    dec.paths.push_back(std::move(path));
  };
  for (EdgeId e : g.incident(s1)) walk(s1, e);
  for (EdgeId e : g.incident(r2)) walk(r2, e);
  for (const auto& [e, tag] : tags) {
    if (tag.kind == EdgeClass::private_edge && !used.count(e)) {
      throw fail("private edge " + str(e) + " lies on no alternating path");
    }
  }
  dec.delta = static_cast<int>(std::count_if(dec.paths.begin(), dec.paths.end(), [](const AlternatingPath& p) {
    return p.kind == PathKind::S1S2;
  }));
  return dec;
}

std::vector<std::string> decomposition_violations(const Representation& rep,
                                                  const Decomposition& dec) {
  std::vector<std::string> out;
  const Network& g = rep.graph;
  const int c1 = g.pair(0).demand, c2 = g.pair(1).demand;
  const auto tags = classify_edges(g, rep.systems);
  const Orienter orient{g, rep.systems};

  // Parent path of every system edge.
  std::map<EdgeId, int> parent[2];
  for (int s = 0; s < 2; ++s) {
    const auto& paths = rep.systems[s].paths();
    for (std::size_t p = 0; p < paths.size(); ++p) {
      for (const Step& st : paths[p].steps) parent[s][st.edge] = static_cast<int>(p);
    }
  }

  std::map<EdgeId, int> seen;
  int kinds[4] = {0, 0, 0, 0};
  for (std::size_t i = 0; i < dec.paths.size(); ++i) {
    const AlternatingPath& path = dec.paths[i];
    const std::string name = "path " + str(static_cast<int>(i)) + " (" + to_string(path.kind) + ")";
    ++kinds[static_cast<int>(path.kind)];
    if (path.vertices.size() != path.steps.size() + 1) {
      out.push_back(name + ": vertex list does not match steps");
      continue;
    }
    std::set<int> parents[2];
    for (std::size_t k = 0; k < path.steps.size(); ++k) {
      const EdgeId e = path.steps[k];
      ++seen[e];
      const Edge& edge = g.edge(e);
      if (!((edge.u == path.vertices[k] && edge.v == path.vertices[k + 1]) ||
            (edge.v == path.vertices[k] && edge.u == path.vertices[k + 1]))) {
        out.push_back(name + ": edge " + str(e) + " does not join its listed vertices");
      }
      const EdgeTag tag = tags.at(e);
      if (tag.kind != EdgeClass::private_edge) {
        out.push_back(name + ": edge " + str(e) + " is not private");
        continue;
      }
      if (k > 0 && tags.at(path.steps[k - 1]).owner == tag.owner) {
        out.push_back(name + ": edges " + str(path.steps[k - 1]) + " and " + str(e) +
                      " have the same owner");
      }
      if (!parents[tag.owner].insert(parent[tag.owner].at(e)).second) {
        out.push_back(name + ": two edges on one parent path");
      }
    }
    std::size_t ups = 0, lows = 0;
    for (std::size_t k = 1; k + 1 < path.vertices.size(); ++k) {
      const VertexId x = path.vertices[k];
      const bool t1 = orient.tail(path.steps[k - 1]) == x, t2 = orient.tail(path.steps[k]) == x;
      if (t1 != t2) out.push_back(name + ": vertex " + str(x) + " breaks the head/tail rule");
      if (t2) {
        if (ups >= path.upper.size() || path.upper[ups] != x) out.push_back(name + ": upper deck mismatch");
        ++ups;
      } else {
        if (lows >= path.lower.size() || path.lower[lows] != x) out.push_back(name + ": lower deck mismatch");
        ++lows;
      }
    }
    if (ups != path.upper.size() || lows != path.lower.size()) out.push_back(name + ": deck lists too long");
    const std::size_t u = path.upper.size(), l = path.lower.size();
    const bool decks = path.kind == PathKind::S1S2   ? l == u + 1
                       : path.kind == PathKind::R2R1 ? u == l + 1
                                                     : u == l;
    if (!decks) out.push_back(name + ": deck sizes " + str(static_cast<int>(u)) + "/" + str(static_cast<int>(l)));
  }
  for (const auto& [e, tag] : tags) {
    if (tag.kind != EdgeClass::private_edge) continue;
    const int n = seen.count(e) ? seen.at(e) : 0;
    if (n != 1) out.push_back("private edge " + str(e) + " lies on " + str(n) + " paths");
  }
  if (static_cast<int>(dec.paths.size()) != c1 + c2) {
    out.push_back("found " + str(static_cast<int>(dec.paths.size())) + " paths, expected " + str(c1 + c2));
  }
  const int delta = kinds[0];
  if (delta != dec.delta) out.push_back("recorded delta differs from S1S2 count");
  if (kinds[3] != delta) out.push_back("R2R1 count " + str(kinds[3]) + " differs from delta " + str(delta));
  if (kinds[1] != c1 - delta) out.push_back("S1R1 count " + str(kinds[1]) + " is not C1 - delta");
  if (kinds[2] != c2 - delta) out.push_back("R2S2 count " + str(kinds[2]) + " is not C2 - delta");
  if (delta > std::min(c1, c2)) out.push_back("delta exceeds min(C1, C2)");
  return out;
}

}  // namespace hubs
