#include <cstdio>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "hubs/acceptance.hpp"

// Prints one pass/fail line per acceptance criterion. The exit status is 0
// only when the failing criteria are exactly the ones named by --expect-fail,
// so a known failure stays visible and any other change in outcome fails.
int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  hubs::AcceptanceOptions options;
  std::set<int> expected;
  app.add_option("--seed", options.seed);
  app.add_option("--expect-fail", expected, "criteria expected to fail");
  CLI11_PARSE(app, argc, argv);

  const auto results = hubs::run_acceptance(options);
  std::cout << hubs::format_results(results);
  std::set<int> failed;
  for (const auto& r : results) {
    if (!r.pass) failed.insert(r.id);
    std::printf("  criterion %d: %.2f s (limit %s)\n", r.id, r.seconds,
                r.limit_seconds > 0 ? (std::to_string(static_cast<int>(r.limit_seconds)) + " s").c_str() : "none");
  }
  for (int id : expected) {
    if (!failed.count(id)) std::printf("criterion %d was expected to fail but passed\n", id);
  }
  for (int id : failed) {
    if (!expected.count(id)) std::printf("criterion %d failed unexpectedly\n", id);
  }
  return failed == expected ? 0 : 1;
}
