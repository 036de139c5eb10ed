#include "hubs/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "hubs/corpus.hpp"
#include "hubs/cuts.hpp"
#include "hubs/extremal.hpp"
#include "hubs/interconnect.hpp"
#include "hubs/minimality.hpp"
#include "hubs/oracle.hpp"
#include "hubs/representation.hpp"

namespace hubs {

namespace {

constexpr double kGridLimit = 5.0;
constexpr double kPipelineLimit = 60.0;
constexpr double kOracleLimit = 600.0;
constexpr std::size_t kShownFailures = 3;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void fail(const std::string& what) { check(false, what); }
  void merge(const std::vector<std::string>& failures, int checks) {
    checks_ += checks;
    failures_.insert(failures_.end(), failures.begin(), failures.end());
  }
  bool ok() const { return failures_.empty(); }
  std::string summary(const std::string& counted) const {
    std::ostringstream os;
    os << counted << ", " << failures_.size() << " failures";
    for (std::size_t k = 0; k < std::min(failures_.size(), kShownFailures); ++k) os << "; " << failures_[k];
    return os.str();
  }

 private:
  int checks_ = 0;
  std::vector<std::string> failures_;
};

CriterionResult finish(int id, std::string name, const Tally& tally, const std::string& counted,
                       Clock::time_point start, double limit) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.seconds = since(start);
  r.limit_seconds = limit;
  r.detail = tally.summary(counted);
  r.pass = tally.ok() && (limit == 0 || r.seconds < limit);
  if (tally.ok() && !r.pass) r.detail += "; time limit exceeded";
  return r;
}

std::string tag(std::uint64_t seed, const std::string& what) {
  return "seed " + std::to_string(seed) + ": " + what;
}

// Everything the two-pair criteria need from one corpus instance.
struct Outcome {
  std::vector<std::string> pipeline;        // representation, interconnect, verification
  std::vector<std::string> equivalence;     // predicate agreement and deletable private edges
  std::vector<std::string> decomposition;
  std::vector<std::string> hub_relation;
  int reroutable_cases = 0;
  bool representation_not_minimal = false;
};

// A vertex on a tagged path that the cycle enters and leaves through
// untagged edges only. Rerouting along such a cycle would send two paths
// through that vertex.
bool passes_tagged_vertex_untagged(const Network& g, const std::vector<PathSystem>& systems,
                                   const ConsistentCycle& cycle) {
  const PathSystem& tagged = systems[cycle.system_tag];
  std::vector<bool> on_tagged(g.vertex_bound(), false);
  for (const Path& p : tagged.paths()) {
    for (VertexId v : path_vertices(g, p)) on_tagged[v] = true;
  }
  const std::size_t n = cycle.steps.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Step& in = cycle.steps[k];
    const Step& out = cycle.steps[(k + 1) % n];
    const VertexId v = head_of(g, in);
    if (on_tagged[v] && !tagged.uses(in.edge) && !tagged.uses(out.edge)) return true;
  }
  return false;
}

void check_equivalence(const Network& g, const std::vector<PathSystem>& systems, const std::string& label,
                       std::uint64_t seed, Outcome& out) {
  const Theorem1Report report = theorem1_agreement(g, systems);
  if (!report.agree) {
    bool degenerate = report.minimal && report.non_reroutable;
    for (const auto& cycle : report.cycles) {
      if (cycle) degenerate = degenerate && passes_tagged_vertex_untagged(g, systems, *cycle);
    }
    out.equivalence.push_back(tag(seed, label + " predicates disagree (minimal " +
                                            std::to_string(report.minimal) + ", non-reroutable " +
                                            std::to_string(report.non_reroutable) + ", acyclic " +
                                            std::to_string(report.no_consistent_cycle) + ")" +
                                            (degenerate ? " [cycle crosses a tagged path off its edges]" : "")));
  }
  for (const auto& cycle : report.cycles) {
    if (!cycle) continue;
    try {
      validate_cycle(g, systems, *cycle);
    } catch (const Error& e) {
      out.equivalence.push_back(tag(seed, label + " invalid cycle: " + e.what()));
    }
  }
  for (std::size_t i = 0; i < report.reroutable.size(); ++i) {
    if (!report.reroutable[i]) continue;
    ++out.reroutable_cases;
    const auto e = deletable_private_edge(g, systems, static_cast<int>(i));
    if (!e || !in_class(g.without_edge(*e))) {
      out.equivalence.push_back(tag(seed, label + " pair " + std::to_string(i) +
                                              " reroutable without a deletable private edge"));
    }
  }
}

Outcome run_pipeline(const CorpusInstance& instance) {
  Outcome out;
  const std::uint64_t seed = instance.seed;
  std::vector<std::string>* stage = &out.equivalence;
  try {
    check_equivalence(instance.covered, instance.planted.systems, "planted", seed, out);

    const Network g = minimalize(instance.planted.network, seed);
    const std::vector<PathSystem> systems = demand_systems(g);
    check_equivalence(g, systems, "minimalized", seed, out);

    stage = &out.hub_relation;
    const Representation g0 = initial_stage(g, systems);
    const Representation g1 = remove_relays(g0);
    const Representation g2 = stretch_crossings(g1);
    const Representation rep = match_directions(g2);
    const int h0 = hub_count(g0.graph).value, h1 = hub_count(g1.graph).value;
    const int h2 = hub_count(g2.graph).value, h3 = hub_count(rep.graph).value;
    if (!(h0 == h1 && h1 <= h2 && h2 == h3)) {
      out.hub_relation.push_back(tag(seed, "hubs " + std::to_string(h0) + "," + std::to_string(h1) + "," +
                                               std::to_string(h2) + "," + std::to_string(h3)));
    }

    stage = &out.pipeline;
    out.representation_not_minimal = !is_minimal(rep.graph);
    for (const std::string& v : representation_violations(rep)) out.pipeline.push_back(tag(seed, v));

    stage = &out.decomposition;
    const Decomposition dec = decompose_private(rep);
    for (const std::string& v : decomposition_violations(rep, dec)) out.decomposition.push_back(tag(seed, v));

    stage = &out.pipeline;
    InterconnectOptions options;
    options.seed = seed;
    options.record_trace = false;
    const InterconnectRun run = run_interconnect(rep, dec, options);
    const VerifyReport report = verify_run(rep, dec, run);
    for (const std::string& f : report.failures) out.pipeline.push_back(tag(seed, f));
    if (!report.ok() && report.failures.empty()) out.pipeline.push_back(tag(seed, "verification failed"));

    const int c1 = g.pair(0).demand, c2 = g.pair(1).demand, delta = dec.delta;
    if (!(h3 <= 2 * delta * (c1 + c2 - delta) && 2 * delta * (c1 + c2 - delta) <= 2 * c1 * c2)) {
      out.pipeline.push_back(tag(seed, "hub bound broken: " + std::to_string(h3) + " hubs, delta " +
                                           std::to_string(delta)));
    }
  } catch (const Error& e) {
    stage->push_back(tag(seed, e.code() + ": " + e.what()));
    if (stage != &out.pipeline) out.pipeline.push_back(tag(seed, "pipeline aborted"));
  }
  return out;
}

struct PairCorpus {
  std::vector<Outcome> outcomes;
  double seconds = 0;
};

PairCorpus run_pair_corpus(const AcceptanceOptions& options) {
  const auto start = Clock::now();
  std::vector<CorpusInstance> instances;
  const int cells = 9;
  for (int cell = 0; cell < cells; ++cell) {
    const int c1 = cell / 3 + 1, c2 = cell % 3 + 1;
    const int count = options.corpus_size / cells + (cell < options.corpus_size % cells ? 1 : 0);
    auto part = random_corpus({c1, c2}, count, options.seed + static_cast<std::uint64_t>(cell));
    std::move(part.begin(), part.end(), std::back_inserter(instances));
  }
  PairCorpus out;
  out.outcomes.resize(instances.size());
  const long n = static_cast<long>(instances.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < n; ++k) out.outcomes[k] = run_pipeline(instances[k]);
  out.seconds = since(start);
  return out;
}

CriterionResult corpus_criterion(int id, std::string name, const PairCorpus& corpus,
                                 std::vector<std::string> Outcome::*field, double limit) {
  Tally tally;
  int failing = 0, non_minimal = 0;
  for (const Outcome& o : corpus.outcomes) {
    tally.merge(o.*field, 1);
    if ((o.*field).empty()) continue;
    ++failing;
    non_minimal += o.representation_not_minimal;
  }
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.seconds = corpus.seconds;
  r.limit_seconds = limit;
  r.detail = tally.summary(std::to_string(corpus.outcomes.size()) + " instances");
  if (failing > 0) {
    r.detail += "; " + std::to_string(failing) + " failing instances, " + std::to_string(non_minimal) +
                " with a non-minimal representation";
  }
  r.pass = tally.ok() && (limit == 0 || r.seconds < limit);
  if (tally.ok() && !r.pass) r.detail += "; time limit exceeded";
  return r;
}

CriterionResult grid_tightness() {
  const auto start = Clock::now();
  Tally tally;
  for (int c1 = 1; c1 <= 5; ++c1) {
    for (int c2 = 1; c2 <= 5; ++c2) {
      const Network g = grid_graph(c1, c2).network;
      const std::string at = "grid(" + std::to_string(c1) + "," + std::to_string(c2) + ")";
      tally.check(in_class(g), at + " not in class");
      tally.check(is_minimal(g), at + " not minimal");
      const int h = hub_count(g).value;
      tally.check(h == 2 * c1 * c2, at + " has " + std::to_string(h) + " hubs");
    }
  }
  return finish(1, "grid graphs are minimal with 2*C1*C2 hubs", tally, "25 grids", start, kGridLimit);
}

CriterionResult unit_pairs() {
  const auto start = Clock::now();
  Tally tally;
  for (int c1 = 1; c1 <= 4; ++c1) {
    for (int c2 = 1; c2 <= 4; ++c2) {
      for (int n = 0; n <= 3; ++n) {
        const Document doc = ones_graph(c1, c2, n);
        const std::string at =
            "ones(" + std::to_string(c1) + "," + std::to_string(c2) + "," + std::to_string(n) + ")";
        tally.check(in_class(doc.network), at + " not in class");
        tally.check(is_minimal(doc.network), at + " not minimal");
        const int h = hub_count(doc.network).value;
        tally.check(h == 2 * (c1 * c2 + n), at + " has " + std::to_string(h) + " hubs");
        if (n == 0) {
          const Document grid = grid_graph(c1, c2);
          tally.check(serialize_network(doc.network, doc.systems) == serialize_network(grid.network, grid.systems),
                      at + " differs from the grid");
        }
      }
    }
  }
  return finish(5, "unit-pair graphs are minimal with 2*(C1*C2+n) hubs", tally, "64 graphs", start, 0);
}

CriterionResult triple_bound(const AcceptanceOptions& options) {
  const auto start = Clock::now();
  Tally tally;
  const Document w = witness_222();
  tally.check(in_class(w.network), "witness not in class");
  tally.check(is_minimal(w.network), "witness not minimal");
  tally.check(hub_count(w.network).value == 12,
              "witness has " + std::to_string(hub_count(w.network).value) + " hubs");

  CorpusOptions small;
  small.max_interior = 8;
  small.max_chords = 2;
  const int count = options.triple_oracle_count;
  const auto instances = random_corpus({2, 2, 2}, count, options.seed ^ 0x222, small);
  std::vector<std::string> failures(count);
  std::vector<char> checked(count, 0);
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < count; ++k) {
    try {
      OracleOptions oracle;
      oracle.split_depth = 0;
      const BoundCheck b = check_bound(instances[k].planted.network, oracle);
      checked[k] = 1;
      if (!b.ok || b.min_hubs > 12) failures[k] = tag(instances[k].seed, std::to_string(b.min_hubs) + " hubs");
    } catch (const Error& e) {
      failures[k] = tag(instances[k].seed, e.code() + ": " + e.what());
    }
  }
  int done = 0;
  for (int k = 0; k < count; ++k) {
    done += checked[k];
    if (!failures[k].empty()) tally.fail(failures[k]);
  }
  tally.check(done >= 50, "only " + std::to_string(done) + " graphs checked");
  return finish(6, "(2,2,2): witness has 12 hubs, oracle never exceeds 12", tally,
                std::to_string(done) + " random graphs", start, kOracleLimit);
}

// Exhaustive minimality: every single-edge deletion drops some pair's
// brute-force cut below its demand.
bool exhaustive_minimal(const Network& g) {
  for (EdgeId e : g.edge_ids()) {
    const Network h = g.without_edge(e);
    bool breaks = false;
    for (int i = 0; i < g.num_pairs() && !breaks; ++i) breaks = brute_force_cut(h, i) < g.pair(i).demand;
    if (!breaks) return false;
  }
  return true;
}

std::string pair_oracle_instance(const CorpusInstance& instance) {
  const Network& g = instance.planted.network;
  const OracleReport report = min_hub_subgraph(g, OracleOptions{24, 0});
  if (report.min_hubs > 8) return tag(instance.seed, std::to_string(report.min_hubs) + " hubs");
  for (const Network* h : {&g, &report.min_hub_subgraph}) {
    const std::string which = h == &g ? "input" : "optimum";
    if (is_minimal(*h) != exhaustive_minimal(*h)) return tag(instance.seed, which + " minimality disagrees");
    const std::vector<PathSystem> systems = demand_systems(*h);
    for (int i = 0; i < 2; ++i) {
      const bool fast = is_reroutable(*h, systems, i);
      const bool slow = enumerate_path_systems(*h, i).size() > 1;
      if (fast != slow) return tag(instance.seed, which + " reroutability disagrees for pair " + std::to_string(i));
    }
  }
  if (!is_minimal(report.min_hub_subgraph)) return tag(instance.seed, "optimum not minimal");
  return {};
}

CriterionResult pair_oracle(const AcceptanceOptions& options) {
  const auto start = Clock::now();
  CorpusOptions small;
  small.max_interior = 8;
  small.max_chords = 2;
  const int count = options.pair_oracle_count;
  const auto instances = random_corpus({2, 2}, count, options.seed ^ 0x22, small);
  std::vector<std::string> failures(count);
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < count; ++k) {
    try {
      failures[k] = pair_oracle_instance(instances[k]);
    } catch (const Error& e) {
      failures[k] = tag(instances[k].seed, e.code() + ": " + e.what());
    }
  }
  Tally tally;
  for (int k = 0; k < count; ++k) tally.check(failures[k].empty(), failures[k]);
  tally.check(count >= 200, "only " + std::to_string(count) + " graphs");
  return finish(7, "(2,2): oracle within 8 hubs, fast predicates match enumeration", tally,
                std::to_string(count) + " random graphs", start, kOracleLimit);
}

CriterionResult single_pair(const AcceptanceOptions& options) {
  const auto start = Clock::now();
  Tally tally;
  const int count = options.single_pair_count;
  std::vector<std::string> failures(count);
  std::vector<CorpusInstance> instances;
  for (int k = 0; k < count; ++k) {
    const int demand = k % 4 + 1;
    instances.push_back(random_instance({demand}, options.seed * 1000003 + static_cast<std::uint64_t>(k)));
  }
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < count; ++k) {
    try {
      const Network m = minimalize(instances[k].planted.network, instances[k].seed);
      const int h = hub_count(m).value;
      if (h != 0 || !in_class(m)) failures[k] = tag(instances[k].seed, std::to_string(h) + " hubs");
    } catch (const Error& e) {
      failures[k] = tag(instances[k].seed, e.code() + ": " + e.what());
    }
  }
  for (const std::string& f : failures) tally.check(f.empty(), f);
  return finish(8, "one pair: minimalized graphs have no hubs", tally, std::to_string(count) + " random graphs",
                start, 0);
}

CriterionResult bound_calculator() {
  const auto start = Clock::now();
  Tally tally;
  for (int c = 1; c <= 10; ++c) {
    tally.check(finiteness_bound({c}) == 0, "bound([" + std::to_string(c) + "]) != 0");
    for (int d = 1; d <= 10; ++d) {
      tally.check(finiteness_bound({c, d}) == BigInt(2 * c * d),
                  "bound([" + std::to_string(c) + "," + std::to_string(d) + "]) != " + std::to_string(2 * c * d));
    }
  }
  const BigInt triple = finiteness_bound({2, 2, 2});
  tally.check(triple >= 12, "bound([2,2,2]) = " + triple.str());
  return finish(9, "finiteness bound calculator", tally, "bound([2,2,2]) = " + triple.str(), start, 0);
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  out.push_back(grid_tightness());
  const PairCorpus corpus = run_pair_corpus(options);
  out.push_back(corpus_criterion(2, "two pairs: interconnection verified, hubs <= 2*D*(C1+C2-D) <= 2*C1*C2",
                                 corpus, &Outcome::pipeline, kPipelineLimit));
  CriterionResult eq = corpus_criterion(3, "minimal, non-reroutable and cycle-free agree", corpus,
                                        &Outcome::equivalence, 0);
  int reroutable = 0;
  for (const Outcome& o : corpus.outcomes) reroutable += o.reroutable_cases;
  eq.detail += "; " + std::to_string(reroutable) + " reroutable systems";
  out.push_back(eq);
  out.push_back(corpus_criterion(4, "private edges split into alternating paths", corpus,
                                 &Outcome::decomposition, 0));
  out.push_back(unit_pairs());
  out.push_back(triple_bound(options));
  out.push_back(pair_oracle(options));
  out.push_back(single_pair(options));
  out.push_back(bound_calculator());
  out.push_back(corpus_criterion(10, "hub counts through the representation stages", corpus,
                                 &Outcome::hub_relation, 0));
  return out;
}

std::string format_results(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  for (const CriterionResult& r : results) {
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": " << r.detail << "\n";
  }
  return os.str();
}

}  // namespace hubs
