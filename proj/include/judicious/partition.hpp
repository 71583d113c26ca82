#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "judicious/graph.hpp"

namespace jp {

/// Internal edge counts of a partition sorted non-increasingly. Smaller keys
/// mean "lexicographically smaller" partitions.
struct LexKey {
  std::vector<std::int64_t> sorted;

  friend bool operator==(const LexKey&, const LexKey&) = default;
};

/// Strict lexicographic comparison. Throws on keys of different length.
bool lex_less(const LexKey& a, const LexKey& b);

/// A k-partition of a graph's vertices with cached per-part internal edge
/// counts. Parts may be empty; constructions say when they allow it.
class Partition {
 public:
  Partition() = default;
  /// Throws if assign.size() != g.n() or some part index is outside [0, k).
  Partition(const Graph& g, int k, std::vector<int> assign);

  int k() const { return k_; }
  int num_vertices() const { return static_cast<int>(assign_.size()); }
  int part_of(int v) const { return assign_[v]; }
  std::span<const int> assignment() const { return assign_; }

  std::int64_t internal(int part) const { return internal_[part]; }
  std::span<const std::int64_t> internal_counts() const { return internal_; }
  std::int64_t max_internal() const;
  std::int64_t crossing() const { return crossing_; }
  std::int64_t edges() const { return edges_; }

  std::vector<int> part_sizes() const;
  std::vector<std::vector<int>> parts() const;
  LexKey lex_key() const;

  /// Moves v to part `to`, updating the cached counts in O(deg v).
  void move_vertex(const Graph& g, int v, int to);

  /// Renumbers parts so internal counts are non-increasing (ties keep the
  /// lower original index first).
  void sort_parts_by_internal();

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.k_ == b.k_ && a.assign_ == b.assign_;
  }

 private:
  int k_ = 0;
  std::vector<int> assign_;
  std::vector<std::int64_t> internal_;
  std::int64_t crossing_ = 0;
  std::int64_t edges_ = 0;
};

/// Builds a partition from explicit parts (each vertex listed exactly once).
Partition partition_from_parts(const Graph& g, const std::vector<std::vector<int>>& parts);

/// Recounts crossing edges from scratch. Throws if p does not cover g.
std::int64_t crossing_edges(const Graph& g, const Partition& p);

bool is_balanced(const Partition& p);
bool is_balanced_sizes(std::span<const int> sizes);

/// |N(x) \ V_i| >= (k-1) |N(x) ∩ V_i| for every x in part i.
bool satisfies_property_q(const Graph& g, const Partition& p, int part);

/// Number of neighbours of v inside `part`.
int neighbors_in_part(const Graph& g, const Partition& p, int v, int part);

/// Moves vertices into empty parts while some other part has at least two
/// vertices. Isolated vertices go first, then vertices of smallest internal
/// degree. Such moves never increase an internal count nor decrease the
/// crossing count. Returns false if some part is still empty (n < k).
bool fill_empty_parts(const Graph& g, Partition& p);

}  // namespace jp
