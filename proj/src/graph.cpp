#include "judicious/graph.hpp"

#include <algorithm>
#include <string>

#include "judicious/error.hpp"

namespace jp {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
  require(n >= 0, "vertex count must be non-negative");
  matrix_.assign(static_cast<std::size_t>(n) * n, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    require(u >= 0 && u < n && v >= 0 && v < n,
            "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    require(u != v, "self-loop at vertex " + std::to_string(u));
    require(!adjacent(u, v), "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    add_edge_unchecked(u, v);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge_unchecked(u, v);
  return g;
}

void Graph::add_edge_unchecked(int u, int v) {
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  matrix_[static_cast<std::size_t>(u) * n_ + v] = 1;
  matrix_[static_cast<std::size_t>(v) * n_ + u] = 1;
  ++m_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(adj_.begin(), adj_.end(), [](const auto& nb) { return nb.empty(); });
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> pos(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    require(vertices[i] >= 0 && vertices[i] < g.n(), "induced_subgraph: vertex out of range");
    require(pos[vertices[i]] < 0, "induced_subgraph: repeated vertex");
    pos[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (int w : g.neighbors(vertices[i]))
      if (pos[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), pos[w]);
  return Graph(static_cast<int>(vertices.size()), edges);
}

StrippedGraph strip_isolated(const Graph& g) {
  StrippedGraph out;
  for (int v = 0; v < g.n(); ++v) (g.degree(v) > 0 ? out.original : out.isolated).push_back(v);
  out.graph = induced_subgraph(g, out.original);
  return out;
}

bool is_odd_complete_modulo_isolated(const Graph& g) {
  if (g.m() == 0) return true;
  int core = 0;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > 0) ++core;
  return core % 2 == 1 && 2 * g.m() == std::int64_t(core) * (core - 1);
}

}  // namespace jp
