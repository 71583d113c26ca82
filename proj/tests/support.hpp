#pragma once

// Reference computations used as ground truth by the tests. Nothing here calls
// into the library except to read a graph's edge list.

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "judicious/graph.hpp"
#include "judicious/partition.hpp"

namespace ref {

using i64 = std::int64_t;
using i128 = __int128;

struct G {
  int n = 0;
  std::vector<std::pair<int, int>> e;
  i64 m() const { return static_cast<i64>(e.size()); }
};

inline G of(const jp::Graph& g) {
  G r;
  r.n = g.n();
  for (auto [u, v] : g.edges()) r.e.emplace_back(u, v);
  return r;
}

inline G complete(int n) {
  G r;
  r.n = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) r.e.emplace_back(u, v);
  return r;
}

inline jp::Graph to_graph(const G& g) {
  std::vector<jp::Edge> edges(g.e.begin(), g.e.end());
  return jp::Graph(g.n, edges);
}

inline std::vector<i64> internal(const G& g, const std::vector<int>& a, int k) {
  std::vector<i64> out(k, 0);
  for (auto [u, v] : g.e)
    if (a[u] == a[v]) ++out[a[u]];
  return out;
}

inline i64 cut(const G& g, const std::vector<int>& a) {
  i64 c = 0;
  for (auto [u, v] : g.e) c += a[u] != a[v];
  return c;
}

inline std::vector<int> assignment(const jp::Partition& p) {
  return {p.assignment().begin(), p.assignment().end()};
}

// Visits every map {0..n-1} -> {0..k-1}.
template <class Fn>
void for_each_assignment(int n, int k, Fn&& fn) {
  std::vector<int> a(n, 0);
  while (true) {
    fn(a);
    int i = 0;
    while (i < n && ++a[i] == k) a[i++] = 0;
    if (i == n) return;
  }
}

inline i64 max_cut(const G& g, int k) {
  i64 best = 0;
  for_each_assignment(g.n, k, [&](const std::vector<int>& a) { best = std::max(best, cut(g, a)); });
  return best;
}

// p/q <= h(m), with h(m) = (sqrt(8m+1) - 1)/2 and q > 0.
inline bool le_h(i64 p, i64 q, i64 m) {
  i128 lhs = i128(2) * p + q;
  if (lhs <= 0) return true;
  return lhs * lhs <= i128(q) * q * (8 * i128(m) + 1);
}

inline bool ge_h(i64 p, i64 q, i64 m) {
  i128 lhs = i128(2) * p + q;
  if (lhs < 0) return false;
  return lhs * lhs >= i128(q) * q * (8 * i128(m) + 1);
}

inline bool eq_h(i64 p, i64 q, i64 m) { return le_h(p, q, m) && ge_h(p, q, m); }

inline long double h(i64 m) { return std::sqrt(2.0L * m + 0.25L) - 0.5L; }

// e <= m/9 + h/9
inline bool t13_part_ok(i64 e, i64 m) { return le_h(9 * e - m, 1, m); }
// c >= 2m/3 + h/3
inline bool t13_cut_ok(i64 c, i64 m) { return ge_h(3 * c - 2 * m, 1, m); }
// e <= m/4 + h/8
inline bool t14_part_ok(i64 e, i64 m) { return le_h(8 * e - 2 * m, 1, m); }
// c >= m/2 + h/4 + 1/4
inline bool t14_cut_ok(i64 c, i64 m) { return ge_h(4 * c - 2 * m - 1, 1, m); }
// c >= m/2 + h/4
inline bool edwards_ok(i64 c, i64 m) { return ge_h(4 * c - 2 * m, 1, m); }
// e <= m/k^2 + (k-1)h/(2k^2)
inline bool t15_part_ok(i64 e, i64 m, i64 k) { return le_h(2 * k * k * e - 2 * m, k - 1, m); }
// c >= (k-1)m/k + (k-1)h/(2k) - (k-2)^2/(8k)
inline bool t15_cut_ok(i64 c, i64 m, i64 k) {
  return ge_h(8 * k * c - 8 * (k - 1) * m + (k - 2) * (k - 2), 4 * (k - 1), m);
}
// c >= (k-1)m/k + (k-1)h/(2k) + (k-1)/(2k) - floor(k/2)ceil(k/2)/(2k)
inline bool balanced_cut_ok(i64 c, i64 m, i64 k) {
  return ge_h(2 * k * c - 2 * (k - 1) * m - (k - 1) + (k / 2) * ((k + 1) / 2), k - 1, m);
}

// 12 e_i + 3 sum_{j != i} e_j <= 2m for every i
inline bool c17_ok(const std::vector<i64>& e, i64 m) {
  i64 total = 0;
  for (i64 x : e) total += x;
  for (i64 x : e)
    if (12 * x + 3 * (total - x) > 2 * m) return false;
  return true;
}

inline i64 balanced_complete_cut(int n, int k) {
  i64 c = i64(n) * (n - 1) / 2;
  for (int i = 0; i < k; ++i) {
    i64 s = n / k + (i < n % k ? 1 : 0);
    c -= s * (s - 1) / 2;
  }
  return c;
}

inline bool is_complete_on(const G& g, int n) { return g.m() == i64(n) * (n - 1) / 2; }

// Vertices with at least one edge, relabelled densely.
inline G strip(const G& g) {
  std::vector<int> id(g.n, -1);
  for (auto [u, v] : g.e) id[u] = id[v] = 0;
  G r;
  for (int v = 0; v < g.n; ++v)
    if (id[v] == 0) id[v] = r.n++;
  for (auto [u, v] : g.e) r.e.emplace_back(id[u], id[v]);
  return r;
}

// An edgeless graph counts as K1.
inline bool odd_clique_modulo_isolated(const G& g) {
  if (g.e.empty()) return true;
  G s = strip(g);
  return s.n % 2 == 1 && is_complete_on(s, s.n);
}

// All labeled graphs on n vertices, one bit per pair (u < v).
template <class Fn>
void for_each_graph(int n, Fn&& fn) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t(1) << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    G g;
    g.n = n;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) g.e.push_back(pairs[i]);
    fn(g);
  }
}

inline G gnp(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  G g;
  g.n = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.e.emplace_back(u, v);
  return g;
}

}  // namespace ref
