#include "judicious/contraction.hpp"

#include <numeric>

#include "judicious/error.hpp"

namespace jp {

WeightedCompleteGraph::WeightedCompleteGraph(int n)
    : n_(n),
      w_(static_cast<std::size_t>(n) * n, 0),
      vertex_weight_(static_cast<std::size_t>(n), 0) {
  require(n >= 0, "weighted graph size must be non-negative");
}

WeightedCompleteGraph WeightedCompleteGraph::unit(int n) {
  WeightedCompleteGraph h(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) h.set_weight(i, j, 1);
  return h;
}

WeightedCompleteGraph WeightedCompleteGraph::from_graph(const Graph& g) {
  WeightedCompleteGraph h(g.n());
  for (auto [u, v] : g.edges()) h.set_weight(u, v, 1);
  return h;
}

void WeightedCompleteGraph::set_weight(int i, int j, std::int64_t w) {
  require(i != j, "weighted graph has no loops");
  require(w >= 0, "weights must be non-negative");
  std::int64_t old = w_[index(i, j)];
  w_[index(i, j)] = w;
  w_[index(j, i)] = w;
  vertex_weight_[i] += w - old;
  vertex_weight_[j] += w - old;
  total_ += w - old;
}

bool WeightedCompleteGraph::is_complete() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (weight(i, j) < 1) return false;
  return true;
}

bool WeightedCompleteGraph::is_unit() const {
  return 2 * total_ == std::int64_t(n_) * (n_ - 1) && is_complete();
}

std::int64_t WeightedCompleteGraph::crossing_weight(std::span<const int> assign) const {
  require(static_cast<int>(assign.size()) == n_, "assignment size mismatch");
  std::int64_t total = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (assign[i] != assign[j]) total += weight(i, j);
  return total;
}

std::vector<std::vector<int>> ContractionMap::members() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(num_classes));
  for (std::size_t v = 0; v < class_of.size(); ++v) out[class_of[v]].push_back(static_cast<int>(v));
  return out;
}

namespace {

Contraction contract_impl(const WeightedCompleteGraph& g, int first_u, int first_v) {
  const int n = g.n();
  // Working weights between live classes; class c is represented by its
  // smallest original vertex, merges always fold the later class into the
  // earlier one.
  std::vector<std::int64_t> w(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) w[static_cast<std::size_t>(i) * n + j] = g.weight(i, j);
  std::vector<int> rep(static_cast<std::size_t>(n));
  std::iota(rep.begin(), rep.end(), 0);
  std::vector<bool> alive(static_cast<std::size_t>(n), true);

  auto at = [&](int i, int j) -> std::int64_t& { return w[static_cast<std::size_t>(i) * n + j]; };
  auto merge = [&](int i, int j) {
    for (int t = 0; t < n; ++t) {
      if (!alive[t] || t == i || t == j) continue;
      at(i, t) += at(j, t);
      at(t, i) = at(i, t);
    }
    alive[j] = false;
    for (int v = 0; v < n; ++v)
      if (rep[v] == j) rep[v] = i;
  };
  if (first_u >= 0) {
    require(first_u < first_v && first_v < n, "contract: bad forced pair");
    require(at(first_u, first_v) == 0, "contract: forced pair is adjacent");
    merge(first_u, first_v);
  }
  bool merged = true;
  while (merged) {
    merged = false;
    for (int i = 0; i < n && !merged; ++i) {
      if (!alive[i]) continue;
      for (int j = i + 1; j < n; ++j) {
        if (!alive[j] || at(i, j) != 0) continue;
        merge(i, j);
        merged = true;
        break;
      }
    }
  }

  std::vector<int> dense(static_cast<std::size_t>(n), -1);
  int classes = 0;
  for (int i = 0; i < n; ++i)
    if (alive[i]) dense[i] = classes++;

  Contraction out{WeightedCompleteGraph(classes), ContractionMap{}};
  out.map.num_classes = classes;
  out.map.class_of.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out.map.class_of[v] = dense[rep[v]];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (alive[i] && alive[j]) out.graph.set_weight(dense[i], dense[j], at(i, j));
  return out;
}

}  // namespace

Contraction contract(const WeightedCompleteGraph& g) { return contract_impl(g, -1, -1); }

Contraction contract(const Graph& g) { return contract(WeightedCompleteGraph::from_graph(g)); }

Contraction contract_merging_first(const Graph& g, int u, int v) {
  if (u > v) std::swap(u, v);
  return contract_impl(WeightedCompleteGraph::from_graph(g), u, v);
}

std::vector<int> lift_assignment(std::span<const int> class_assign, const ContractionMap& map) {
  require(static_cast<int>(class_assign.size()) == map.num_classes,
          "lift: class partition does not cover every class");
  std::vector<int> assign(map.class_of.size());
  for (std::size_t v = 0; v < assign.size(); ++v) assign[v] = class_assign[map.class_of[v]];
  return assign;
}

Partition lift(const Graph& g, const Partition& class_partition, const ContractionMap& map) {
  return Partition(g, class_partition.k(), lift_assignment(class_partition.assignment(), map));
}

PeeledLayer peel_layer(const WeightedCompleteGraph& h) {
  require(h.is_complete(), "peel_layer needs a complete weighted graph");
  require(!h.is_unit(), "peel_layer: graph is a unit-weight complete graph");
  PeeledLayer out;
  out.layer_size = h.n();
  for (int v = 0; v < h.n(); ++v)
    if (h.vertex_weight(v) >= h.n()) out.residual_vertices.push_back(v);
  const auto& keep = out.residual_vertices;
  out.residual = WeightedCompleteGraph(static_cast<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b)
      out.residual.set_weight(static_cast<int>(a), static_cast<int>(b),
                              h.weight(keep[a], keep[b]) - 1);
  out.residual_complete = out.residual.is_complete();
  return out;
}

}  // namespace jp
