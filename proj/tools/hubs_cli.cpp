#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hubs/acceptance.hpp"
#include "hubs/corpus.hpp"
#include "hubs/cuts.hpp"
#include "hubs/extremal.hpp"
#include "hubs/interconnect.hpp"
#include "hubs/io.hpp"
#include "hubs/minimality.hpp"
#include "hubs/oracle.hpp"
#include "hubs/representation.hpp"

namespace {

constexpr std::uint64_t kDefaultSeed = 7;

// Raised for unreadable or malformed input; maps to exit status 2.
struct InputError {
  std::string message;
};

struct Flags {
  std::string input;
  std::string output;
  std::string trace;
  std::string family = "grid";
  std::uint64_t seed = kDefaultSeed;
  bool seed_given = false;
  int max_edges = 24;
  int c1 = 2, c2 = 2, n = 0;
  std::vector<int> demands{2, 2};
  bool dot = false;
};

hubs::Document load(const Flags& f) {
  if (f.input.empty()) throw InputError{"--input is required"};
  try {
    return hubs::read_network_file(f.input);
  } catch (const hubs::Error& e) {
    throw InputError{e.what()};
  }
}

void emit(const Flags& f, const std::string& text) {
  if (f.output.empty()) {
    std::cout << text;
    return;
  }
  try {
    hubs::write_text_file(f.output, text);
  } catch (const hubs::Error& e) {
    throw InputError{e.what()};
  }
}

// Where reports go: stdout unless the artifact itself is printed there.
std::ostream& report(const Flags& f) { return f.output.empty() ? std::cerr : std::cout; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_generate(const Flags& f) {
  hubs::Document doc;
  if (f.family == "grid") {
    doc = hubs::grid_graph(f.c1, f.c2);
  } else if (f.family == "ones") {
    doc = hubs::ones_graph(f.c1, f.c2, f.n);
  } else if (f.family == "witness222" || f.family == "witness-222") {
    doc = hubs::witness_222();
  } else if (f.family == "reroutable") {
    doc = hubs::reroutable_witness();
  } else if (f.family == "example") {
    doc = hubs::example_graph();
  } else if (f.family == "random") {
    doc = hubs::random_instance(f.demands, f.seed).planted;
  } else {
    throw InputError{"unknown family " + f.family};
  }
  emit(f, hubs::serialize_network(doc.network, doc.systems));
  report(f) << "hubs: " << hubs::hub_count(doc.network).value << "\n";
  return 0;
}

std::vector<hubs::PathSystem> systems_for(const hubs::Network& g, const std::vector<hubs::PathSystem>& given) {
  if (!given.empty() && hubs::covered_by(g, given)) return given;
  return hubs::demand_systems(g);
}

int cmd_check(const Flags& f) {
  const hubs::Document doc = load(f);
  const hubs::Network& g = doc.network;
  std::ostream& out = std::cout;
  bool ok = true;
  for (int i = 0; i < g.num_pairs(); ++i) {
    const hubs::CutResult cut = hubs::min_vertex_cut(g, i);
    out << "pair " << i << ": demand " << g.pair(i).demand << ", min cut " << cut.value << "\n";
    ok = ok && cut.value == g.pair(i).demand;
  }
  out << "in class: " << yes_no(ok) << "\nhubs: " << hubs::hub_count(g).value << "\n";
  if (!ok) return 1;
  const std::vector<hubs::PathSystem> systems = systems_for(g, doc.systems);
  const bool minimal = hubs::is_minimal(g);
  if (g.num_pairs() == 2 && hubs::covered_by(g, systems)) {
    const hubs::Theorem1Report r = hubs::theorem1_agreement(g, systems);
    out << "minimal: " << yes_no(r.minimal) << "\nnon-reroutable: " << yes_no(r.non_reroutable)
        << "\nno consistent cycle: " << yes_no(r.no_consistent_cycle) << "\nagree: " << yes_no(r.agree) << "\n";
    return r.agree ? 0 : 1;
  }
  bool reroutable = false;
  for (int i = 0; i < g.num_pairs(); ++i) {
    const bool r = hubs::is_reroutable(g, systems, i);
    reroutable = reroutable || r;
    out << "pair " << i << " reroutable: " << yes_no(r) << "\n";
  }
  out << "minimal: " << yes_no(minimal) << "\n";
  if (minimal && reroutable) {
    out << "note: minimal yet reroutable; the equivalence holds only for two pairs (n=" << g.num_pairs()
        << ")\n";
  }
  return 0;
}

int cmd_minimalize(const Flags& f) {
  const hubs::Document doc = load(f);
  const hubs::Network m =
      hubs::minimalize(doc.network, f.seed_given ? std::optional<std::uint64_t>(f.seed) : std::nullopt);
  emit(f, hubs::serialize_network(m));
  report(f) << "edges: " << doc.network.num_edges() << " -> " << m.num_edges()
            << "\nhubs: " << hubs::hub_count(doc.network).value << " -> " << hubs::hub_count(m).value << "\n";
  return 0;
}

struct Prepared {
  hubs::Network graph;
  std::vector<hubs::PathSystem> systems;
};

Prepared minimal_two_pair(const Flags& f) {
  const hubs::Document doc = load(f);
  if (doc.network.num_pairs() != 2) throw hubs::Error("out-of-contract", "expected exactly two pairs");
  if (hubs::is_minimal(doc.network)) return {doc.network, systems_for(doc.network, doc.systems)};
  report(f) << "input is not minimal; minimalizing first\n";
  hubs::Network m = hubs::minimalize(doc.network);
  std::vector<hubs::PathSystem> systems = hubs::demand_systems(m);
  return {std::move(m), std::move(systems)};
}

int cmd_represent(const Flags& f) {
  const Prepared p = minimal_two_pair(f);
  const hubs::Representation g0 = hubs::initial_stage(p.graph, p.systems);
  const hubs::Representation g1 = hubs::remove_relays(g0);
  const hubs::Representation g2 = hubs::stretch_crossings(g1);
  const hubs::Representation rep = hubs::match_directions(g2);
  emit(f, f.dot ? hubs::export_dot(rep.graph, rep.systems) : hubs::serialize_network(rep.graph, rep.systems));
  std::ostream& out = report(f);
  out << "hubs by stage: " << hubs::hub_count(g0.graph).value << " " << hubs::hub_count(g1.graph).value << " "
      << hubs::hub_count(g2.graph).value << " " << hubs::hub_count(rep.graph).value << "\n";
  const std::vector<std::string> violations = hubs::representation_violations(rep);
  for (const std::string& v : violations) out << "violation: " << v << "\n";
  if (!violations.empty()) return 1;
  const hubs::Decomposition dec = hubs::decompose_private(rep);
  out << "delta: " << dec.delta << "\n";
  for (std::size_t k = 0; k < dec.paths.size(); ++k) {
    out << "path " << k << " " << hubs::to_string(dec.paths[k].kind) << ":";
    for (hubs::EdgeId e : dec.paths[k].steps) out << " " << e;
    out << "\n";
  }
  const std::vector<std::string> bad = hubs::decomposition_violations(rep, dec);
  for (const std::string& v : bad) out << "violation: " << v << "\n";
  return bad.empty() ? 0 : 1;
}

int cmd_interconnect(const Flags& f) {
  const Prepared p = minimal_two_pair(f);
  const hubs::Representation rep = hubs::to_representation(p.graph, p.systems);
  const hubs::Decomposition dec = hubs::decompose_private(rep);
  hubs::InterconnectOptions options;
  if (f.seed_given) options.seed = f.seed;
  options.record_trace = !f.trace.empty();
  const hubs::InterconnectRun run = hubs::run_interconnect(rep, dec, options);
  if (!f.trace.empty()) {
    try {
      hubs::write_text_file(f.trace, hubs::trace_json_lines(run));
    } catch (const hubs::Error& e) {
      throw InputError{e.what()};
    }
  }
  const hubs::VerifyReport v = hubs::verify_run(rep, dec, run);
  std::ostream& out = std::cout;
  out << "delta: " << run.delta << "\niterations: " << run.iterations << "\nhubs: "
      << hubs::hub_count(rep.graph).value << "\n";
  for (std::size_t k = 0; k < run.paths.size(); ++k) {
    out << "interconnecting path " << k << ":";
    for (hubs::VertexId x : run.paths[k].vertices) out << " " << x;
    out << "\n";
  }
  for (const std::string& s : v.failures) out << "failure: " << s << "\n";
  out << "verified: " << yes_no(v.ok()) << "\n";
  return v.ok() ? 0 : 1;
}

int cmd_oracle(const Flags& f) {
  const hubs::Document doc = load(f);
  hubs::OracleOptions options;
  options.max_edges = f.max_edges;
  const hubs::OracleReport r = hubs::min_hub_subgraph(doc.network, options);
  emit(f, hubs::serialize_network(r.min_hub_subgraph));
  std::vector<int> demands;
  for (const hubs::TerminalPair& p : doc.network.pairs()) demands.push_back(p.demand);
  const hubs::BigInt bound = hubs::theoretical_bound(demands);
  report(f) << "min hubs: " << r.min_hubs << "\nbound: " << bound << "\nminimal subgraphs: "
            << r.num_minimal_subgraphs << "\nfeasible subgraphs: " << r.num_feasible_subgraphs
            << "\nmandatory edges: " << r.mandatory_edges << "\noptional edges: " << r.optional_edges << "\n";
  return hubs::BigInt(r.min_hubs) <= bound ? 0 : 1;
}

int cmd_verify_all(const Flags& f) {
  hubs::AcceptanceOptions options;
  options.seed = f.seed;
  const std::vector<hubs::CriterionResult> results = hubs::run_acceptance(options);
  std::cout << hubs::format_results(results);
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.pass;
    std::cerr << "criterion " << r.id << ": " << r.seconds << " s\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hub counts of multi-pair vertex-cut networks"};
  app.require_subcommand(1);
  Flags f;
  std::string demands;

  auto add_io = [&](CLI::App* sub, bool output) {
    sub->add_option("--input", f.input, "network JSON file");
    if (output) sub->add_option("--output", f.output, "artifact file (stdout when omitted)");
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", f.seed, "random seed (default 7)");
  };

  CLI::App* generate = app.add_subcommand("generate", "write a fixture network");
  add_io(generate, true);
  add_seed(generate);
  generate->add_option("--family", f.family, "grid, ones, witness222, reroutable, example or random");
  generate->add_option("--c1", f.c1);
  generate->add_option("--c2", f.c2);
  generate->add_option("--n", f.n, "unit pairs for the ones family");
  generate->add_option("--demands", demands, "comma-separated demands for the random family");

  CLI::App* check = app.add_subcommand("check", "class membership and minimality predicates");
  add_io(check, false);

  CLI::App* minimalize = app.add_subcommand("minimalize", "delete edges while staying in class");
  add_io(minimalize, true);
  add_seed(minimalize);

  CLI::App* represent = app.add_subcommand("represent", "canonical representation and decomposition");
  add_io(represent, true);
  represent->add_flag("--dot", f.dot, "write Graphviz instead of JSON");

  CLI::App* interconnect = app.add_subcommand("interconnect", "run and verify the interconnection search");
  add_io(interconnect, false);
  add_seed(interconnect);
  interconnect->add_option("--trace", f.trace, "JSON-lines trace file");

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive minimum hub subgraph");
  add_io(oracle, true);
  oracle->add_option("--max-edges", f.max_edges, "largest optional edge count searched");

  CLI::App* verify_all = app.add_subcommand("verify-all", "run every acceptance criterion");
  add_seed(verify_all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  for (CLI::App* sub : app.get_subcommands()) {
    if (sub->get_option_no_throw("--seed") != nullptr) f.seed_given = sub->count("--seed") > 0;
  }

  try {
    if (!demands.empty()) {
      f.demands.clear();
      std::stringstream ss(demands);
      std::string item;
      while (std::getline(ss, item, ',')) f.demands.push_back(std::stoi(item));
    }
    if (*generate) return cmd_generate(f);
    if (*check) return cmd_check(f);
    if (*minimalize) return cmd_minimalize(f);
    if (*represent) return cmd_represent(f);
    if (*interconnect) return cmd_interconnect(f);
    if (*oracle) return cmd_oracle(f);
    if (*verify_all) return cmd_verify_all(f);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return 2;
  } catch (const std::invalid_argument&) {
    std::cerr << "error: --demands must be comma-separated integers\n";
    return 2;
  } catch (const hubs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
