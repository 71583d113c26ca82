#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace jp {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Neighbour lists are kept
/// sorted; a dense adjacency matrix backs O(1) adjacency queries.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws jp::Error on self-loops, duplicate edges or out-of-range ends.
  Graph(int n, std::span<const Edge> edges);

  static Graph complete(int n);

  int n() const { return n_; }
  std::int64_t m() const { return m_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const { return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0; }
  std::vector<Edge> edges() const;

  bool is_complete() const { return 2 * m_ == std::int64_t(n_) * (n_ - 1); }
  bool has_isolated_vertex() const;

 private:
  void add_edge_unchecked(int u, int v);

  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint8_t> matrix_;
};

/// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// The graph with isolated vertices removed, plus the original index of each
/// kept vertex.
struct StrippedGraph {
  Graph graph;
  std::vector<int> original;  // stripped index -> original index
  std::vector<int> isolated;  // original indices of removed vertices
};
StrippedGraph strip_isolated(const Graph& g);

/// True when the graph, isolated vertices ignored, is a complete graph of odd
/// order. An edgeless graph counts as K_1 plus isolated vertices.
bool is_odd_complete_modulo_isolated(const Graph& g);

}  // namespace jp
