#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hubs/network.hpp"
#include "hubs/representation.hpp"

namespace hubs {

// One STEP transition of the path search.
struct InterconnectEvent {
  int iteration = 0;
  std::string step;     // "STEP 2", "STEP 3(A)", ... "STEP 6"
  std::string action;   // extend, switch, choke-stop, start, store, ...
  std::vector<VertexId> vertices;
  EdgeId edge = -1;
  int path = -1;        // alternating path involved, if any
  int d = -1;           // switching depth for choke branches
};

struct IterationRecord {
  int iteration = 0;
  int forward_stop = -1;   // R2R1 path whose choke ended the forward pass
  int backward_stop = -1;  // S1S2 path whose choke ended the backward pass
};

/// Interconnecting path: alternately public and private edges in their
/// natural direction, from a lower vertex to an upper vertex.
struct InterconnectingPath {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;  // edges[k] joins vertices[k] and vertices[k + 1]
};

struct InterconnectRun {
  std::vector<bool> occupied;   // indexed by vertex id
  std::vector<VertexId> chokes; // indexed by alternating path
  std::vector<InterconnectingPath> paths;
  int iterations = 0;
  int delta = 0;
  long steps = 0;
  std::vector<IterationRecord> records;
  std::vector<InterconnectEvent> trace;
};

struct InterconnectOptions {
  // Permutes the lower vertex picked at the start of each iteration.
  std::optional<std::uint64_t> seed;
  bool record_trace = true;
};

// Runs the forward/backward extension search until Delta paths are found.
// Throws "algorithm-stuck" when the step budget 10*|E|*Delta runs out or an
// internal invariant of the search breaks.
InterconnectRun run_interconnect(const Representation& rep, const Decomposition& dec,
                                 const InterconnectOptions& options = {});

struct VerifyReport {
  bool distinct_alternating = true;  // private edges of a path on distinct alternating paths
  bool cover = true;                 // |I| = Delta <= min(C1,C2), hubs covered once, path shape
  bool hub_bound = true;             // H <= 2 Delta (C1 + C2 - Delta) <= 2 C1 C2
  bool iteration_bound = true;       // hubs(L_t) <= 2t - 1 and the aggregate deck bounds
  std::vector<std::string> failures;

  bool ok() const { return distinct_alternating && cover && hub_bound && iteration_bound; }
};

VerifyReport verify_run(const Representation& rep, const Decomposition& dec,
                        const InterconnectRun& run);

// Trace as JSON lines, one event per line.
std::string trace_json_lines(const InterconnectRun& run);

}  // namespace hubs
