#include "judicious/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "judicious/error.hpp"
#include "judicious/io.hpp"

namespace jp {

namespace {

void check_size(const Graph& g, int k) {
  require(k >= 1, "brute force needs k >= 1");
  std::int64_t total = 1;
  for (int i = 0; i < g.n(); ++i) {
    total *= k;
    if (total > kBruteForceLimit)
      fail(ErrorCode::too_large, "brute force: k^n exceeds " + std::to_string(kBruteForceLimit));
  }
}

// Visits every assignment with vertex 0 in part 0 as an odometer over
// vertices 1..n-1, keeping per-part internal counts current.
template <class Visit>
void for_each_assignment(const Graph& g, int k, Visit&& visit) {
  const int n = g.n();
  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> internal(static_cast<std::size_t>(k), 0);
  internal[0] = g.m();
  auto shift = [&](int v, int to) {
    int from = assign[v];
    for (int w : g.neighbors(v)) {
      if (assign[w] == from) --internal[from];
      if (assign[w] == to) ++internal[to];
    }
    assign[v] = to;
  };
  while (true) {
    visit(assign, internal);
    int v = n - 1;
    while (v >= 1 && assign[v] == k - 1) {
      shift(v, 0);
      --v;
    }
    if (v < 1) return;
    shift(v, assign[v] + 1);
  }
}

}  // namespace

std::int64_t brute_force_fk(const Graph& g, int k) {
  check_size(g, k);
  if (g.n() == 0) return 0;
  std::int64_t best_inside = g.m();
  for_each_assignment(g, k, [&](const std::vector<int>&, const std::vector<std::int64_t>& in) {
    std::int64_t inside = 0;
    for (auto e : in) inside += e;
    best_inside = std::min(best_inside, inside);
  });
  return g.m() - best_inside;
}

JudiciousOptimum brute_force_judicious(const Graph& g, int k, const RootValue& cut_floor) {
  check_size(g, k);
  JudiciousOptimum out;
  // Smallest integer crossing count meeting the floor.
  std::int64_t need = static_cast<std::int64_t>(std::floor(cut_floor.to_double())) - 2;
  while (cut_floor > need) ++need;
  if (g.n() == 0) {
    out.feasible = need <= 0;
    out.witness = Partition(g, k, {});
    return out;
  }
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<int> best_assign;
  for_each_assignment(g, k, [&](const std::vector<int>& a, const std::vector<std::int64_t>& in) {
    std::int64_t inside = 0, worst = 0;
    for (auto e : in) {
      inside += e;
      worst = std::max(worst, e);
    }
    if (g.m() - inside < need || worst >= best) return;
    best = worst;
    best_assign = a;
  });
  if (best_assign.empty()) return out;
  out.feasible = true;
  out.min_max = best;
  out.witness = Partition(g, k, std::move(best_assign));
  return out;
}

Graph labeled_graph(int n, std::uint64_t mask) {
  require(n >= 0 && n <= 11, "labeled_graph: n out of range");
  std::vector<Edge> edges;
  int t = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++t)
      if (mask >> t & 1) edges.emplace_back(i, j);
  require(t == 64 || (mask >> t) == 0, "labeled_graph: mask has bits beyond C(n,2)");
  return Graph(n, edges);
}

void enumerate_labeled_graphs(int n, const std::function<void(const Graph&)>& visit) {
  require(n >= 0 && n <= 7, "enumerate_labeled_graphs: n must be at most 7");
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) visit(labeled_graph(n, mask));
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  require(n >= 0, "random_gnp: n must be non-negative");
  require(p >= 0.0 && p <= 1.0, "random_gnp: p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  const double scaled = std::ldexp(p, 64);
  const bool always = scaled >= 18446744073709551616.0;
  const std::uint64_t threshold = always ? 0 : static_cast<std::uint64_t>(scaled);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::uint64_t draw = rng();
      if (always || draw < threshold) edges.emplace_back(i, j);
    }
  return Graph(n, edges);
}

Graph generate(const GraphFamily& f) {
  switch (f.kind) {
    case FamilyKind::complete:
      require(f.n >= 0, "complete: n must be non-negative");
      return Graph::complete(f.n);
    case FamilyKind::complete_plus_isolated: {
      require(f.r >= 0 && f.isolated >= 0, "complete-plus-isolated: bad parameters");
      const int core = 3 * f.r + 1;
      std::vector<Edge> edges;
      for (int i = 0; i < core; ++i)
        for (int j = i + 1; j < core; ++j) edges.emplace_back(i, j);
      return Graph(core + f.isolated, edges);
    }
    case FamilyKind::random_gnp:
      return random_gnp(f.n, f.p, f.seed);
    case FamilyKind::all_labeled:
      return labeled_graph(f.n, f.index);
    case FamilyKind::edge_list:
      return parse_edge_list(f.text).graph;
  }
  fail(ErrorCode::invalid_argument, "unknown graph family");
}

}  // namespace jp
