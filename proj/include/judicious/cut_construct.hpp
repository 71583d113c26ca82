#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "judicious/contraction.hpp"
#include "judicious/exact.hpp"
#include "judicious/graph.hpp"
#include "judicious/partition.hpp"

namespace jp {

struct CutResult {
  Partition partition;
  std::int64_t achieved = 0;
  RootValue guarantee;
  /// Which construction produced the cut, outermost step first
  /// (e.g. "layer-residual>even-complete").
  std::string branch;
  /// Part sizes over the contracted classes are balanced.
  bool class_balanced = false;
  /// balanced_cut_bound(m, k) > m; guarantee is then m, reached by
  /// separating every class.
  bool formula_exceeds_m = false;
};

/// Exact expected crossing weight of h when every free vertex (assign < 0) is
/// placed by a uniformly random completion that puts exactly quota[p] free
/// vertices into part p. Throws if the quotas do not sum to the number of
/// free vertices.
Rational conditional_expectation(const WeightedCompleteGraph& h, std::span<const int> assign,
                                 std::span<const int> quota);

/// Called after each derandomization step with the expectation before and
/// after the step.
struct ExpectationTrace {
  std::vector<Rational> values;  // values[0] is the unconditional expectation
};

/// Balanced k-assignment of the vertices of h by the method of conditional
/// expectations: vertices are fixed in index order, each to the part that
/// maximizes the conditional expectation (ties: lower part). Per-part
/// quotas are ceil(n/k) for the first n mod k parts, floor(n/k) otherwise.
/// Zero-weight pairs are allowed.
std::vector<int> derandomized_balanced_assignment(const WeightedCompleteGraph& h, int k,
                                                  ExpectationTrace* trace = nullptr);

/// Contract g, derandomize a balanced k-partition of the contraction and lift
/// it. achieved >= balanced_cut_bound(m, k).
CutResult balanced_kcut(const Graph& g, int k, ExpectationTrace* trace = nullptr);

/// Balanced 2-assignment of a complete weighted graph h with crossing weight
/// >= w/2 + h(w)/4 + 1/4 (w = total weight) built by peeling unit layers.
/// Throws if h is a unit-weight complete graph of odd order or has no pairs.
std::vector<int> stability_split(const WeightedCompleteGraph& h, std::string* branch = nullptr);

/// 2-partition of g with crossing >= m/2 + h(m)/4 + 1/4. Throws
/// jp::Error(invalid_argument) when g without isolated vertices is a
/// complete graph of odd order (edgeless graphs included).
CutResult f2_stability_cut(const Graph& g);

}  // namespace jp
