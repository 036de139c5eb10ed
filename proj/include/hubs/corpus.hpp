#pragma once

#include <cstdint>
#include <vector>

#include "hubs/io.hpp"

namespace hubs {

struct CorpusOptions {
  int min_interior = 2;
  int max_interior = 12;
  // Chance that a later system follows an existing edge out of its current
  // vertex instead of jumping to a fresh one. Followed edges become shared.
  double follow_probability = 0.6;
  int max_chords = 3;  // extra interior edges, uniform in [0, max_chords]
};

/// A random in-class graph built from planted vertex-disjoint systems plus
/// random chords. Every source and sink has degree equal to its demand.
struct CorpusInstance {
  std::uint64_t seed = 0;
  Document planted;  // full graph and the planted systems
  Network covered;   // planted system edges only: covered by planted.systems
};

CorpusInstance random_instance(const std::vector<int>& demands, std::uint64_t seed,
                               const CorpusOptions& options = {});

// `count` instances whose seeds are drawn from one generator seeded by `seed`.
std::vector<CorpusInstance> random_corpus(const std::vector<int>& demands, int count, std::uint64_t seed,
                                          const CorpusOptions& options = {});

}  // namespace hubs
