#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "judicious/exact.hpp"
#include "judicious/graph.hpp"
#include "judicious/partition.hpp"

namespace jp {

/// Largest number of assignments the brute-force routines will visit (k^n).
inline constexpr std::int64_t kBruteForceLimit = 100'000'000;

/// Maximum k-cut by exhaustive enumeration (vertex 0 fixed in part 0).
/// Throws ErrorCode::too_large when k^n exceeds kBruteForceLimit.
std::int64_t brute_force_fk(const Graph& g, int k);

struct JudiciousOptimum {
  bool feasible = false;
  std::int64_t min_max = 0;  // min over partitions meeting the floor of max e(V_i)
  Partition witness;
};

/// Among all k-partitions with crossing >= cut_floor, one minimizing the
/// largest internal count (ties: first in enumeration order).
JudiciousOptimum brute_force_judicious(const Graph& g, int k, const RootValue& cut_floor);

/// Labeled graph on n vertices whose edges are the set bits of `mask`, with
/// bit t standing for the t-th pair (i, j), i < j, in lexicographic order.
Graph labeled_graph(int n, std::uint64_t mask);

/// Calls visit for each of the 2^C(n,2) labeled graphs on n <= 7 vertices.
void enumerate_labeled_graphs(int n, const std::function<void(const Graph&)>& visit);

/// G(n, p) from a seeded 64-bit Mersenne Twister: pair (i, j), i < j in
/// lexicographic order, is an edge when the next draw is below p * 2^64.
Graph random_gnp(int n, double p, std::uint64_t seed);

enum class FamilyKind { complete, complete_plus_isolated, random_gnp, all_labeled, edge_list };

struct GraphFamily {
  FamilyKind kind = FamilyKind::complete;
  int n = 0;                // complete, random_gnp, all_labeled
  int r = 0;                // complete_plus_isolated: K_{3r+1}
  int isolated = 0;         // complete_plus_isolated: number of extra K_1
  double p = 0.5;           // random_gnp
  std::uint64_t seed = 0;   // random_gnp
  std::uint64_t index = 0;  // all_labeled: edge mask
  std::string text;         // edge_list: file contents
};

Graph generate(const GraphFamily& family);

}  // namespace jp
