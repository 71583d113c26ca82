#include <doctest.h>

#include <random>

#include "judicious/contraction.hpp"
#include "judicious/error.hpp"
#include "judicious/graph.hpp"
#include "judicious/oracle.hpp"
#include "judicious/partition.hpp"
#include "support.hpp"

using namespace jp;

namespace {

Graph cycle4() {
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  return Graph(4, e);
}

WeightedCompleteGraph k2(std::int64_t w) {
  WeightedCompleteGraph h(2);
  h.set_weight(0, 1, w);
  return h;
}

void check_contraction(const Graph& g, const Contraction& c) {
  const auto& h = c.graph;
  CHECK(h.n() == c.map.num_classes);
  CHECK(h.is_complete());
  CHECK(h.total() == g.m());
  // every class is independent in g
  for (const auto& cls : c.map.members())
    for (std::size_t a = 0; a < cls.size(); ++a)
      for (std::size_t b = a + 1; b < cls.size(); ++b) CHECK_FALSE(g.adjacent(cls[a], cls[b]));
  // class weights count the edges between classes
  std::vector<std::int64_t> w(static_cast<std::size_t>(h.n()) * h.n(), 0);
  for (auto [u, v] : g.edges()) {
    int a = c.map.class_of[u], b = c.map.class_of[v];
    ++w[static_cast<std::size_t>(a) * h.n() + b];
    ++w[static_cast<std::size_t>(b) * h.n() + a];
  }
  for (int a = 0; a < h.n(); ++a)
    for (int b = 0; b < h.n(); ++b)
      if (a != b) CHECK(h.weight(a, b) == w[static_cast<std::size_t>(a) * h.n() + b]);
}

}  // namespace

TEST_CASE("contracting a complete graph changes nothing") {
  for (int n = 1; n <= 7; ++n) {
    auto c = contract(Graph::complete(n));
    CHECK(c.map.num_classes == n);
    CHECK(c.graph.is_unit());
  }
}

TEST_CASE("contracting a single edge") {
  std::vector<Edge> e{{0, 1}};
  auto c = contract(Graph(2, e));
  CHECK(c.graph.n() == 2);
  CHECK(c.graph.weight(0, 1) == 1);
}

TEST_CASE("contracting the 4-cycle") {
  Graph g = cycle4();
  auto c = contract(g);
  REQUIRE(c.graph.n() == 2);
  CHECK(c.graph.weight(0, 1) == 4);
  CHECK(c.map.class_of[0] == c.map.class_of[2]);
  CHECK(c.map.class_of[1] == c.map.class_of[3]);
  Partition hp(Graph::complete(2), 2, {0, 1});
  CHECK(lift(g, hp, c.map).crossing() == 4);
}

TEST_CASE("lifting through the identity contraction") {
  Graph k4 = Graph::complete(4);
  auto c = contract(k4);
  Partition p(k4, 3, {0, 0, 1, 2});
  CHECK(lift(k4, p, c.map) == p);
}

TEST_CASE("star contracts to two classes") {
  std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}};
  Graph star(4, e);
  auto c = contract(star);
  REQUIRE(c.graph.n() == 2);
  CHECK(c.graph.weight(0, 1) == 3);
  Partition hp(Graph::complete(2), 2, {0, 1});
  auto lifted = lift(star, hp, c.map);
  CHECK(lifted.crossing() == 3);
  CHECK(lifted.part_of(0) != lifted.part_of(1));
}

TEST_CASE("contraction is exact for every graph on at most 7 vertices") {
  for (int n = 1; n <= 7; ++n)
    enumerate_labeled_graphs(n, [&](const Graph& g) {
      auto c = contract(g);
      check_contraction(g, c);
      for (int a = 0; a < c.graph.n(); ++a)
        for (int b = a + 1; b < c.graph.n(); ++b) REQUIRE(c.graph.weight(a, b) >= 1);
    });
}

TEST_CASE("merging a chosen pair first") {
  // P4: 0-1-2-3. Greedy merges {0,2} first; forcing {0,3} gives another result.
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}};
  Graph p4(4, e);
  auto c = contract_merging_first(p4, 0, 3);
  check_contraction(p4, c);
  CHECK(c.map.class_of[0] == c.map.class_of[3]);
  CHECK_THROWS_AS(contract_merging_first(p4, 0, 1), Error);
}

TEST_CASE("contract then lift preserves crossing counts") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 1000; ++t) {
    int n = 1 + static_cast<int>(rng() % 30);
    double p = (1 + rng() % 9) / 10.0;
    auto r = ref::gnp(n, p, rng);
    Graph g = ref::to_graph(r);
    auto c = contract(g);
    int k = 2 + static_cast<int>(rng() % 4);
    std::vector<int> cls(c.graph.n());
    for (int& x : cls) x = static_cast<int>(rng() % k);
    auto lifted = lift_assignment(cls, c.map);
    REQUIRE(c.graph.crossing_weight(cls) == ref::cut(r, lifted));
  }
}

TEST_CASE("peeling a layer") {
  auto a = peel_layer(k2(4));
  CHECK(a.layer_size == 2);
  REQUIRE(a.residual.n() == 2);
  CHECK(a.residual.weight(0, 1) == 3);
  auto b = peel_layer(k2(2));
  REQUIRE(b.residual.n() == 2);
  CHECK(b.residual.weight(0, 1) == 1);
  CHECK_THROWS_AS(peel_layer(WeightedCompleteGraph::unit(5)), Error);
}

TEST_CASE("peeling conserves total weight") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    auto r = ref::gnp(2 + static_cast<int>(rng() % 14), 0.35, rng);
    Graph g = ref::to_graph(r);
    if (g.m() == 0) continue;
    auto c = contract(g);
    if (c.graph.is_unit()) continue;
    auto layer = peel_layer(c.graph);
    const std::int64_t n1 = layer.layer_size;
    CHECK(n1 * (n1 - 1) / 2 + layer.residual.total() == c.graph.total());
  }
}
