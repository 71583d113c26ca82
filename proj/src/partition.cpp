#include "judicious/partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "judicious/error.hpp"

namespace jp {

bool lex_less(const LexKey& a, const LexKey& b) {
  require(a.sorted.size() == b.sorted.size(), "lex_less: keys have different part counts");
  return std::lexicographical_compare(a.sorted.begin(), a.sorted.end(), b.sorted.begin(),
                                      b.sorted.end());
}

Partition::Partition(const Graph& g, int k, std::vector<int> assign)
    : k_(k), assign_(std::move(assign)), internal_(static_cast<std::size_t>(k), 0) {
  require(k >= 1, "partition needs at least one part");
  require(static_cast<int>(assign_.size()) == g.n(),
          "assignment covers " + std::to_string(assign_.size()) + " vertices, graph has " +
              std::to_string(g.n()));
  for (int part : assign_) require(part >= 0 && part < k, "part index out of range");
  for (auto [u, v] : g.edges()) {
    if (assign_[u] == assign_[v])
      ++internal_[assign_[u]];
    else
      ++crossing_;
  }
  edges_ = g.m();
}

std::int64_t Partition::max_internal() const {
  return internal_.empty() ? 0 : *std::max_element(internal_.begin(), internal_.end());
}

std::vector<int> Partition::part_sizes() const {
  std::vector<int> sizes(static_cast<std::size_t>(k_), 0);
  for (int part : assign_) ++sizes[part];
  return sizes;
}

std::vector<std::vector<int>> Partition::parts() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(k_));
  for (int v = 0; v < num_vertices(); ++v) out[assign_[v]].push_back(v);
  return out;
}

LexKey Partition::lex_key() const {
  LexKey key{internal_};
  std::sort(key.sorted.begin(), key.sorted.end(), std::greater<>());
  return key;
}

void Partition::move_vertex(const Graph& g, int v, int to) {
  require(to >= 0 && to < k_, "move_vertex: part index out of range");
  int from = assign_[v];
  if (from == to) return;
  std::int64_t in_from = 0, in_to = 0;
  for (int w : g.neighbors(v)) {
    if (assign_[w] == from) ++in_from;
    if (assign_[w] == to) ++in_to;
  }
  internal_[from] -= in_from;
  internal_[to] += in_to;
  crossing_ += in_from - in_to;
  assign_[v] = to;
}

void Partition::sort_parts_by_internal() {
  std::vector<int> order(static_cast<std::size_t>(k_));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return internal_[a] > internal_[b]; });
  std::vector<int> relabel(static_cast<std::size_t>(k_));
  std::vector<std::int64_t> internal(static_cast<std::size_t>(k_));
  for (int i = 0; i < k_; ++i) {
    relabel[order[i]] = i;
    internal[i] = internal_[order[i]];
  }
  for (int& part : assign_) part = relabel[part];
  internal_ = std::move(internal);
}

Partition partition_from_parts(const Graph& g, const std::vector<std::vector<int>>& parts) {
  std::vector<int> assign(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int v : parts[i]) {
      require(v >= 0 && v < g.n(), "part lists vertex " + std::to_string(v) + " out of range");
      require(assign[v] < 0, "vertex " + std::to_string(v) + " listed twice");
      assign[v] = static_cast<int>(i);
    }
  for (int v = 0; v < g.n(); ++v)
    require(assign[v] >= 0, "vertex " + std::to_string(v) + " not assigned to any part");
  return Partition(g, static_cast<int>(parts.size()), std::move(assign));
}

std::int64_t crossing_edges(const Graph& g, const Partition& p) {
  require(p.num_vertices() == g.n(), "partition does not cover the graph");
  std::int64_t crossing = 0;
  for (auto [u, v] : g.edges())
    if (p.part_of(u) != p.part_of(v)) ++crossing;
  return crossing;
}

bool is_balanced_sizes(std::span<const int> sizes) {
  if (sizes.empty()) return true;
  auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
  return *hi - *lo <= 1;
}

bool is_balanced(const Partition& p) {
  auto sizes = p.part_sizes();
  return is_balanced_sizes(sizes);
}

int neighbors_in_part(const Graph& g, const Partition& p, int v, int part) {
  int count = 0;
  for (int w : g.neighbors(v))
    if (p.part_of(w) == part) ++count;
  return count;
}

bool satisfies_property_q(const Graph& g, const Partition& p, int part) {
  require(part >= 0 && part < p.k(), "property Q: part index out of range");
  for (int v = 0; v < g.n(); ++v) {
    if (p.part_of(v) != part) continue;
    std::int64_t inside = neighbors_in_part(g, p, v, part);
    std::int64_t outside = g.degree(v) - inside;
    if (outside < std::int64_t(p.k() - 1) * inside) return false;
  }
  return true;
}

bool fill_empty_parts(const Graph& g, Partition& p) {
  while (true) {
    auto sizes = p.part_sizes();
    auto empty = std::find(sizes.begin(), sizes.end(), 0);
    if (empty == sizes.end()) return true;
    int target = static_cast<int>(empty - sizes.begin());
    // Cheapest donor: isolated vertices first, then least internal degree.
    int best = -1;
    std::pair<int, int> best_rank{0, 0};
    for (int v = 0; v < g.n(); ++v) {
      if (sizes[p.part_of(v)] < 2) continue;
      std::pair<int, int> rank{g.degree(v) == 0 ? 0 : 1,
                               neighbors_in_part(g, p, v, p.part_of(v))};
      if (best < 0 || rank < best_rank) {
        best = v;
        best_rank = rank;
      }
    }
    if (best < 0) return false;
    p.move_vertex(g, best, target);
  }
}

}  // namespace jp
