#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "judicious/graph.hpp"

namespace jp {

struct SweepConfig {
  enum class Mode { all_graphs, random };
  Mode mode = Mode::all_graphs;
  int n = 0;
  int k = 3;
  int jobs = 1;
  double p = 0.5;       // random mode
  int count = 0;        // random mode
  std::uint64_t seed = 0;
};

/// Outcome of running the construction for k on one graph.
struct GraphCheck {
  bool pass = false;
  bool tight = false;  // every checked bound holds with equality
  std::string branch;
  std::string failure;  // empty when pass
};

/// k = 2: judicious 2-partition; k = 3: judicious 3-partition plus the
/// per-part weighted check; k >= 4: small-m k-partition when m < 2k^2,
/// otherwise the balanced k-cut bound.
GraphCheck check_graph(const Graph& g, int k);

struct SweepSummary {
  std::int64_t graphs = 0;
  std::int64_t passed = 0;
  std::int64_t tight = 0;
  std::map<std::string, std::int64_t> branches;
  std::vector<std::string> failures;  // one line per failing graph, by graph index

  bool all_pass() const { return passed == graphs; }
  nlohmann::json to_json(const SweepConfig& config) const;
};

/// Seed of the i-th graph of a random sweep.
std::uint64_t sweep_graph_seed(std::uint64_t seed, std::uint64_t i);

/// Runs the sweep on `jobs` worker threads. The summary does not depend on
/// the number of workers.
SweepSummary run_sweep(const SweepConfig& config);

}  // namespace jp
