#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hubs {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;        // counts and the first failures; seed-deterministic
  double seconds = 0;
  double limit_seconds = 0;  // 0 means no time limit
};

struct AcceptanceOptions {
  std::uint64_t seed = 7;
  int corpus_size = 504;        // two-pair pipeline corpus, split over C1, C2 <= 3
  int triple_oracle_count = 50;
  int pair_oracle_count = 200;
  int single_pair_count = 100;
};

// Runs criteria 1..10 in order. Corpus loops run under OpenMP; per-instance
// results are gathered by index, so the outcome does not depend on threads.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

// One line per criterion: "[PASS] 3 name: detail". Timings are left out so
// the table is byte-identical across runs.
std::string format_results(const std::vector<CriterionResult>& results);

}  // namespace hubs
