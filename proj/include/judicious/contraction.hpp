#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "judicious/graph.hpp"
#include "judicious/partition.hpp"

namespace jp {

/// Symmetric non-negative integer weights on all pairs of n vertices. After
/// contraction every weight is >= 1 (is_complete()); residuals produced by
/// peel_layer may contain zero-weight pairs.
class WeightedCompleteGraph {
 public:
  WeightedCompleteGraph() = default;
  explicit WeightedCompleteGraph(int n);

  static WeightedCompleteGraph unit(int n);
  static WeightedCompleteGraph from_graph(const Graph& g);

  int n() const { return n_; }
  std::int64_t weight(int i, int j) const { return w_[index(i, j)]; }
  void set_weight(int i, int j, std::int64_t w);
  std::int64_t vertex_weight(int i) const { return vertex_weight_[i]; }
  std::int64_t total() const { return total_; }

  /// All pairs have weight >= 1.
  bool is_complete() const;
  /// Complete with every weight exactly 1.
  bool is_unit() const;

  /// Total weight of pairs split by a part assignment.
  std::int64_t crossing_weight(std::span<const int> assign) const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_ = 0;
  std::vector<std::int64_t> w_;
  std::vector<std::int64_t> vertex_weight_;
  std::int64_t total_ = 0;
};

/// Maps each original vertex to its contracted class.
struct ContractionMap {
  std::vector<int> class_of;
  int num_classes = 0;

  std::vector<std::vector<int>> members() const;
};

struct Contraction {
  WeightedCompleteGraph graph;
  ContractionMap map;
};

/// Repeatedly merges the first non-adjacent pair of classes (index order)
/// until every pair of classes is joined by at least one edge. Crossing
/// weight of any class partition equals the crossing count of its lift.
Contraction contract(const Graph& g);
/// Same, for a weighted graph whose zero-weight pairs count as non-adjacent.
Contraction contract(const WeightedCompleteGraph& g);
/// Merges the non-adjacent pair (u, v) first, then proceeds as contract().
Contraction contract_merging_first(const Graph& g, int u, int v);

/// Partition of the original vertices induced by a class assignment.
std::vector<int> lift_assignment(std::span<const int> class_assign, const ContractionMap& map);
Partition lift(const Graph& g, const Partition& class_partition, const ContractionMap& map);

struct PeeledLayer {
  int layer_size = 0;                  // n1: the unit K_{n1} that was removed
  std::vector<int> residual_vertices;  // indices into the peeled graph
  WeightedCompleteGraph residual;      // weights decremented by one
  bool residual_complete = false;      // false if some residual pair has weight 0
};

/// Splits H into a unit-weight K_{n1} and the residual on
/// {v : w_H(v) >= n1} with every weight decremented. Throws if H is unit.
PeeledLayer peel_layer(const WeightedCompleteGraph& h);

}  // namespace jp
