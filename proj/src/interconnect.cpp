#include "hubs/interconnect.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "json.hpp"

namespace hubs {

namespace {

using IPath = InterconnectingPath;

std::string str(long x) { return std::to_string(x); }

Error stuck(const std::string& why) { return Error("algorithm-stuck", why); }

// P[t(P), x]
IPath prefix(const IPath& p, VertexId x) {
  auto it = std::find(p.vertices.begin(), p.vertices.end(), x);
  if (it == p.vertices.end()) throw stuck("vertex " + str(x) + " not on the path being cut");
  const auto k = it - p.vertices.begin();
  return IPath{{p.vertices.begin(), it + 1}, {p.edges.begin(), p.edges.begin() + k}};
}

// P[y, h(P)]
IPath suffix(const IPath& p, VertexId y) {
  auto it = std::find(p.vertices.begin(), p.vertices.end(), y);
  if (it == p.vertices.end()) throw stuck("vertex " + str(y) + " not on the path being cut");
  const auto k = it - p.vertices.begin();
  return IPath{{it, p.vertices.end()}, {p.edges.begin() + k, p.edges.end()}};
}

// a o e o b, where e runs from the head of a to the tail of b.
IPath concat(IPath a, EdgeId e, const IPath& b) {
  a.edges.push_back(e);
  a.vertices.insert(a.vertices.end(), b.vertices.begin(), b.vertices.end());
  a.edges.insert(a.edges.end(), b.edges.begin(), b.edges.end());
  return a;
}

// Natural orientation and per-vertex incidence of a representation.
struct Layout {
  std::vector<VertexId> tail, head;  // by edge id
  std::vector<EdgeClass> kind;       // by edge id
  std::vector<int> owner;            // by edge id
  std::vector<EdgeId> pub_out, pub_in, phi_out, phi_in, psi_out, psi_in;  // by vertex id

  explicit Layout(const Representation& rep) {
    const Network& g = rep.graph;
    const auto tags = classify_edges(g, rep.systems);
    tail.assign(g.edge_bound(), -1);
    head.assign(g.edge_bound(), -1);
    kind.assign(g.edge_bound(), EdgeClass::unused);
    owner.assign(g.edge_bound(), -1);
    for (auto* v : {&pub_out, &pub_in, &phi_out, &phi_in, &psi_out, &psi_in}) v->assign(g.vertex_bound(), -1);
    for (const Edge& e : g.edges()) {
      const EdgeTag tag = tags.at(e.id);
      kind[e.id] = tag.kind;
      owner[e.id] = tag.owner;
      const PathSystem& s = rep.systems[tag.owner == 1 ? 1 : 0];
      auto it = s.orientation().find(e.id);
      if (it == s.orientation().end()) continue;
      tail[e.id] = it->second ? e.u : e.v;
      head[e.id] = e.other(tail[e.id]);
      if (tag.kind == EdgeClass::public_edge) {
        pub_out[tail[e.id]] = e.id;
        pub_in[head[e.id]] = e.id;
      } else if (tag.owner == 0) {
        phi_out[tail[e.id]] = e.id;
        phi_in[head[e.id]] = e.id;
      } else {
        psi_out[tail[e.id]] = e.id;
        psi_in[head[e.id]] = e.id;
      }
    }
  }
};

bool anchored_at_s1(PathKind k) { return k == PathKind::S1S2 || k == PathKind::S1R1; }

class Search {
 public:
  Search(const Representation& rep, const Decomposition& dec, const InterconnectOptions& options)
      : rep_(rep), dec_(dec), layout_(rep), options_(options) {
    run_.occupied.assign(rep.graph.vertex_bound(), false);
    for (const AlternatingPath& p : dec.paths) run_.chokes.push_back(p.choke);
    run_.delta = dec.delta;
    budget_ = 10L * static_cast<long>(rep.graph.num_edges()) * dec.delta;
    if (options.seed) rng_.seed(*options.seed);
  }

  InterconnectRun run() {
    if (dec_.delta == 0) return run_;
    for (int n = 1;; ++n) {
      run_.iterations = n;
      IterationRecord rec;
      rec.iteration = n;
      const VertexId v = forward(n, rec);
      backward(n, v, rec);
      // STEP 6. The path is stored before the termination test so that the
      // final iteration's path is kept.
      I_.push_back(P_);
      note(n, "STEP 6", "store", P_.vertices);
      run_.records.push_back(rec);
      if (n == dec_.delta) break;
    }
    run_.paths = I_;
    return run_;
  }

 private:
  void tick() {
    if (++run_.steps > budget_) throw stuck("step budget of " + str(budget_) + " exhausted");
  }

  void note(int n, const char* step, const char* action, std::vector<VertexId> vs, EdgeId e = -1,
            int path = -1, int d = -1) {
    if (!options_.record_trace) return;
    run_.trace.push_back(InterconnectEvent{n, step, action, std::move(vs), e, path, d});
  }

  // Labels a vertex reached by an ordinary extension; it must be fresh.
  void occupy_fresh(VertexId x) {
    if (run_.occupied[x]) throw stuck("extension reached occupied vertex " + str(x));
    run_.occupied[x] = true;
  }

  const VertexSlot& slot(VertexId x) const {
    auto it = dec_.slots.find(x);
    if (it == dec_.slots.end()) throw stuck("vertex " + str(x) + " is on no alternating path");
    return it->second;
  }

  VertexId pick_start() {
    std::vector<VertexId> free;
    for (const auto& [x, s] : dec_.slots) {
      if (!s.upper && !run_.occupied[x]) free.push_back(x);
    }
    if (free.empty()) throw stuck("no unoccupied lower vertex");
    if (!options_.seed) return free.front();
    return free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng_)];
  }

  std::optional<VertexId> rightmost_free(const std::vector<VertexId>& deck) const {
    for (auto it = deck.rbegin(); it != deck.rend(); ++it) {
      if (!run_.occupied[*it]) return *it;
    }
    return std::nullopt;
  }

  int holder_of(EdgeId e) const {
    for (std::size_t k = 0; k < I_.size(); ++k) {
      const auto& es = I_[k].edges;
      if (std::find(es.begin(), es.end(), e) != es.end()) return static_cast<int>(k);
    }
    throw stuck("no interconnecting path holds edge " + str(e));
  }

  // Removes P_1..P_d from I and returns copies indexed 1..d.
  std::vector<IPath> take_holders(const AlternatingPath& alt, int p, int d) {
    std::vector<int> idx;
    for (int i = 1; i <= d; ++i) idx.push_back(holder_of(alt.steps[p + 2 * i]));
    std::vector<IPath> old(d + 1);
    for (int i = 1; i <= d; ++i) old[i] = I_[idx[i - 1]];
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
      throw stuck("one interconnecting path holds two switched edges");
    }
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) I_.erase(I_.begin() + *it);
    return old;
  }

  // I stays a family of vertex-disjoint, naturally directed paths.
  void check_family() const {
    std::set<VertexId> seen;
    auto check = [&](const IPath& q) {
      if (q.vertices.size() != q.edges.size() + 1) throw stuck("malformed path after switch");
      for (std::size_t k = 0; k < q.edges.size(); ++k) {
        const EdgeId e = q.edges[k];
        if (layout_.tail[e] != q.vertices[k] || layout_.head[e] != q.vertices[k + 1]) {
          throw stuck("edge " + str(e) + " used against its direction after switch");
        }
      }
      for (VertexId x : q.vertices) {
        if (!seen.insert(x).second) throw stuck("paths share vertex " + str(x) + " after switch");
      }
    };
    for (const IPath& q : I_) check(q);
    check(P_);
  }

  // STEP 2 to STEP 4; returns v.
  VertexId forward(int n, IterationRecord& rec) {
    tick();
    const VertexId v = pick_start();
    occupy_fresh(v);
    const EdgeId f0 = layout_.pub_out[v];
    if (f0 < 0) throw stuck("lower vertex " + str(v) + " has no public out-edge");
    VertexId u = layout_.head[f0];
    occupy_fresh(u);
    P_ = IPath{{v, u}, {f0}};
    note(n, "STEP 2", "start", {v, u}, f0);

    while (true) {
      tick();
      const int li = slot(u).path;
      const AlternatingPath& alt = dec_.paths[li];
      VertexId h = -1;
      if (alt.kind == PathKind::R2R1 && u == run_.chokes[li]) {
        const auto x0 = rightmost_free(alt.upper);
        if (!x0) {
          note(n, "STEP 3(A)", "choke-stop", {u}, -1, li);
          rec.forward_stop = li;
          break;
        }
        const int p = slot(*x0).position, q = slot(u).position;
        if (p >= q || (q - p) % 2 != 0) throw stuck("free upper vertex right of the choke");
        const int d = (q - p) / 2 - 1;
        auto X = [&](int i) { return alt.vertices[p + 2 * i]; };
        auto Y = [&](int i) { return alt.vertices[p + 2 * i + 1]; };
        if (d == 0) {
          run_.chokes[li] = *x0;
          run_.occupied[Y(0)] = true;
          const EdgeId e = alt.steps[p + 1];  // (u, y0)
          P_.edges.push_back(e);
          P_.vertices.push_back(Y(0));
          h = Y(0);
          note(n, "STEP 3(A)", "switch", {*x0, Y(0), u}, e, li, 0);
        } else {
          std::vector<IPath> old = take_holders(alt, p, d);
          run_.chokes[li] = *x0;
          run_.occupied[Y(0)] = true;
          const EdgeId e = alt.steps[p + 1];  // (x1, y0)
          const IPath hat = P_;
          P_ = concat(prefix(old[1], X(1)), e, IPath{{Y(0)}, {}});
          std::vector<IPath> fresh(d + 1);
          for (int i = 1; i < d; ++i) {
            fresh[i] = concat(prefix(old[i + 1], X(i + 1)), alt.steps[p + 2 * i + 1], suffix(old[i], Y(i)));
          }
          fresh[d] = concat(prefix(hat, u), alt.steps[p + 2 * d + 1], suffix(old[d], Y(d)));
          for (int i = 1; i <= d; ++i) I_.push_back(fresh[i]);
          check_family();
          h = Y(0);
          note(n, "STEP 3(A)", "switch", {*x0, Y(0), u}, e, li, d);
        }
      } else {
        const EdgeId e = anchored_at_s1(alt.kind) ? layout_.psi_out[u] : layout_.phi_out[u];
        if (e < 0) throw stuck("upper vertex " + str(u) + " lacks its private out-edge");
        h = layout_.head[e];
        occupy_fresh(h);
        P_.edges.push_back(e);
        P_.vertices.push_back(h);
        note(n, "STEP 3(A)", "extend", {u, h}, e, li);
      }
      // STEP 3(B)
      tick();
      const EdgeId f = layout_.pub_out[h];
      if (f < 0) throw stuck("vertex " + str(h) + " has no public out-edge");
      u = layout_.head[f];
      occupy_fresh(u);
      P_.edges.push_back(f);
      P_.vertices.push_back(u);
      note(n, "STEP 3(B)", "extend", {h, u}, f);
    }

    // STEP 4
    tick();
    I_.push_back(P_);
    auto it = std::find_if(I_.begin(), I_.end(), [&](const IPath& q) { return q.vertices.front() == v; });
    if (it == I_.end()) throw stuck("no interconnecting path starts at " + str(v));
    P_ = *it;
    I_.erase(it);
    note(n, "STEP 4", "resume", {v});
    return v;
  }

  // STEP 5 up to the STEP 6 exit.
  void backward(int n, VertexId v, IterationRecord& rec) {
    VertexId w = v;
    auto prepend = [&](EdgeId e, VertexId x) {
      P_.edges.insert(P_.edges.begin(), e);
      P_.vertices.insert(P_.vertices.begin(), x);
    };
    while (true) {
      tick();
      const int li = slot(w).path;
      const AlternatingPath& alt = dec_.paths[li];
      VertexId t = -1;
      if (alt.kind == PathKind::S1S2 && w == run_.chokes[li]) {
        const auto y0 = rightmost_free(alt.lower);
        if (!y0) {
          note(n, "STEP 5(A)", "choke-stop", {w}, -1, li);
          rec.backward_stop = li;
          return;
        }
        const int p = slot(*y0).position, q = slot(w).position;
        if (p >= q || (q - p) % 2 != 0) throw stuck("free lower vertex right of the choke");
        const int d = (q - p) / 2 - 1;
        auto Y = [&](int i) { return alt.vertices[p + 2 * i]; };
        auto X = [&](int i) { return alt.vertices[p + 2 * i + 1]; };
        if (d == 0) {
          run_.chokes[li] = *y0;
          run_.occupied[X(0)] = true;
          const EdgeId e = alt.steps[p + 1];  // (x0, w)
          prepend(e, X(0));
          t = X(0);
          note(n, "STEP 5(A)", "switch", {*y0, X(0), w}, e, li, 0);
        } else {
          std::vector<IPath> old = take_holders(alt, p, d);
          run_.chokes[li] = *y0;
          run_.occupied[X(0)] = true;
          const EdgeId e = alt.steps[p + 1];  // (x0, y1)
          const IPath hat = P_;
          P_ = concat(IPath{{X(0)}, {}}, e, suffix(old[1], Y(1)));
          std::vector<IPath> fresh(d + 1);
          for (int i = 1; i < d; ++i) {
            fresh[i] = concat(prefix(old[i], X(i)), alt.steps[p + 2 * i + 1], suffix(old[i + 1], Y(i + 1)));
          }
          fresh[d] = concat(prefix(old[d], X(d)), alt.steps[p + 2 * d + 1], suffix(hat, w));
          for (int i = 1; i <= d; ++i) I_.push_back(fresh[i]);
          check_family();
          t = X(0);
          note(n, "STEP 5(A)", "switch", {*y0, X(0), w}, e, li, d);
        }
      } else {
        const EdgeId e = anchored_at_s1(alt.kind) ? layout_.psi_in[w] : layout_.phi_in[w];
        if (e < 0) throw stuck("lower vertex " + str(w) + " lacks its private in-edge");
        t = layout_.tail[e];
        occupy_fresh(t);
        prepend(e, t);
        note(n, "STEP 5(A)", "extend", {t, w}, e, li);
      }
      // STEP 5(B)
      tick();
      const EdgeId f = layout_.pub_in[t];
      if (f < 0) throw stuck("vertex " + str(t) + " has no public in-edge");
      w = layout_.tail[f];
      occupy_fresh(w);
      prepend(f, w);
      note(n, "STEP 5(B)", "extend", {w, t}, f);
    }
  }

  const Representation& rep_;
  const Decomposition& dec_;
  Layout layout_;
  InterconnectOptions options_;
  InterconnectRun run_;
  std::vector<IPath> I_;
  IPath P_;
  long budget_ = 0;
  std::mt19937_64 rng_;
};

}  // namespace

InterconnectRun run_interconnect(const Representation& rep, const Decomposition& dec,
                                 const InterconnectOptions& options) {
  return Search(rep, dec, options).run();
}

VerifyReport verify_run(const Representation& rep, const Decomposition& dec,
                        const InterconnectRun& run) {
  VerifyReport r;
  const Network& g = rep.graph;
  const Layout layout(rep);
  const long c1 = g.pair(0).demand, c2 = g.pair(1).demand, delta = dec.delta;

  std::map<EdgeId, int> alt_of;
  for (std::size_t i = 0; i < dec.paths.size(); ++i) {
    for (EdgeId e : dec.paths[i].steps) alt_of[e] = static_cast<int>(i);
  }
  auto slot_of = [&](VertexId x) -> const VertexSlot* {
    auto it = dec.slots.find(x);
    return it == dec.slots.end() ? nullptr : &it->second;
  };

  // Lemma-4 shape: private edges of one path on distinct alternating paths.
  for (std::size_t k = 0; k < run.paths.size(); ++k) {
    std::set<int> alts;
    for (EdgeId e : run.paths[k].edges) {
      if (layout.kind[e] != EdgeClass::private_edge) continue;
      if (!alts.insert(alt_of.at(e)).second) {
        r.distinct_alternating = false;
        r.failures.push_back("path " + str(k) + " meets alternating path " + str(alt_of.at(e)) + " twice");
      }
    }
  }

  // Count, cover and shape.
  auto fail_cover = [&](const std::string& why) {
    r.cover = false;
    r.failures.push_back(why);
  };
  if (static_cast<long>(run.paths.size()) != delta) {
    fail_cover("found " + str(run.paths.size()) + " interconnecting paths, delta is " + str(delta));
  }
  if (delta > std::min(c1, c2)) fail_cover("delta exceeds min(C1, C2)");
  std::map<VertexId, int> hits;
  std::set<int> starts, ends;
  for (std::size_t k = 0; k < run.paths.size(); ++k) {
    const IPath& q = run.paths[k];
    const std::string name = "path " + str(k);
    if (q.vertices.size() != q.edges.size() + 1 || q.edges.empty()) {
      fail_cover(name + " is malformed");
      continue;
    }
    for (VertexId x : q.vertices) ++hits[x];
    for (std::size_t i = 0; i < q.edges.size(); ++i) {
      const EdgeId e = q.edges[i];
      if (!g.has_edge(e) || layout.tail[e] != q.vertices[i] || layout.head[e] != q.vertices[i + 1]) {
        fail_cover(name + " does not follow edge " + str(e) + " in its natural direction");
      }
      const bool want_public = i % 2 == 0;
      if ((layout.kind[e] == EdgeClass::public_edge) != want_public) {
        fail_cover(name + " does not alternate public and private at edge " + str(e));
      }
    }
    if (q.edges.size() % 2 == 0) fail_cover(name + " does not end with a public edge");
    const VertexSlot* first = slot_of(q.vertices.front());
    const VertexSlot* last = slot_of(q.vertices.back());
    if (!first || first->upper || dec.paths[first->path].kind != PathKind::S1S2) {
      fail_cover(name + " does not start at a lower vertex of an S1S2 path");
    } else if (!starts.insert(first->path).second) {
      fail_cover(name + " starts on an S1S2 path already used");
    }
    if (!last || !last->upper || dec.paths[last->path].kind != PathKind::R2R1) {
      fail_cover(name + " does not end at an upper vertex of an R2R1 path");
    } else if (!ends.insert(last->path).second) {
      fail_cover(name + " ends on an R2R1 path already used");
    }
  }
  for (VertexId x : g.vertices()) {
    if (g.is_terminal(x)) continue;
    const int n = hits.count(x) ? hits.at(x) : 0;
    if (n != 1) fail_cover("hub " + str(x) + " lies on " + str(n) + " interconnecting paths");
  }

  // Hub bound.
  const long hubs = hub_count(g).value;
  const long mid = 2 * delta * (c1 + c2 - delta);
  if (!(hubs <= mid && mid <= 2 * c1 * c2)) {
    r.hub_bound = false;
    r.failures.push_back("hub chain " + str(hubs) + " <= " + str(mid) + " <= " + str(2 * c1 * c2) + " fails");
  }

  // Per-iteration and aggregate deck bounds.
  auto fail_iter = [&](const std::string& why) {
    r.iteration_bound = false;
    r.failures.push_back(why);
  };
  std::set<int> stops;
  for (const IterationRecord& rec : run.records) {
    if (rec.forward_stop < 0) {
      fail_iter("iteration " + str(rec.iteration) + " has no forward stop");
      continue;
    }
    const long h = static_cast<long>(dec.paths[rec.forward_stop].vertices.size()) - 2;
    if (h > 2L * rec.iteration - 1) {
      fail_iter("iteration " + str(rec.iteration) + ": stop path has " + str(h) + " hubs");
    }
    if (!stops.insert(rec.forward_stop).second) {
      fail_iter("iteration " + str(rec.iteration) + " stops on a path used before");
    }
  }
  long s1s2 = 0, r2r1 = 0, mixed = 0;
  for (const AlternatingPath& p : dec.paths) {
    const long h = static_cast<long>(p.vertices.size()) - 2;
    (p.kind == PathKind::S1S2 ? s1s2 : p.kind == PathKind::R2R1 ? r2r1 : mixed) += h;
  }
  if (s1s2 > delta * delta) fail_iter("S1S2 paths carry " + str(s1s2) + " hubs");
  if (r2r1 > delta * delta) fail_iter("R2R1 paths carry " + str(r2r1) + " hubs");
  if (mixed > 2 * delta * (c1 + c2 - 2 * delta)) fail_iter("S1R1/R2S2 paths carry " + str(mixed) + " hubs");
  return r;
}

std::string trace_json_lines(const InterconnectRun& run) {
  std::string out;
  for (const InterconnectEvent& ev : run.trace) {
    nlohmann::ordered_json j;
    j["iteration"] = ev.iteration;
    j["step"] = ev.step;
    j["action"] = ev.action;
    j["vertices"] = ev.vertices;
    if (ev.edge >= 0) j["edge"] = ev.edge;
    if (ev.path >= 0) j["path"] = ev.path;
    if (ev.d >= 0) j["d"] = ev.d;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace hubs
