#include <doctest.h>

#include <map>
#include <random>

#include "judicious/bounds.hpp"
#include "judicious/contraction.hpp"
#include "judicious/cut_construct.hpp"
#include "judicious/error.hpp"
#include "judicious/oracle.hpp"
#include "support.hpp"

using namespace jp;

namespace {

// Average crossing weight over all completions that respect the quotas.
Rational brute_expectation(const WeightedCompleteGraph& h, std::vector<int> assign,
                           std::vector<int> quota) {
  std::int64_t total = 0, count = 0;
  std::vector<int> free;
  for (int v = 0; v < h.n(); ++v)
    if (assign[v] < 0) free.push_back(v);
  const int k = static_cast<int>(quota.size());
  ref::for_each_assignment(static_cast<int>(free.size()), k, [&](const std::vector<int>& a) {
    std::vector<int> used(k, 0);
    for (int x : a) ++used[x];
    if (used != quota) return;
    auto full = assign;
    for (std::size_t i = 0; i < free.size(); ++i) full[free[i]] = a[i];
    for (int i = 0; i < h.n(); ++i)
      for (int j = i + 1; j < h.n(); ++j)
        if (full[i] != full[j]) total += h.weight(i, j);
    ++count;
  });
  return Rational(total, count);
}

WeightedCompleteGraph random_weighted(int n, std::mt19937_64& rng) {
  WeightedCompleteGraph h(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) h.set_weight(i, j, static_cast<std::int64_t>(rng() % 4));
  return h;
}

}  // namespace

TEST_CASE("expectation over balanced halves of K4") {
  auto k4 = WeightedCompleteGraph::unit(4);
  std::vector<int> none(4, -1), q{2, 2};
  // all three balanced halvings cut 4 edges
  CHECK(conditional_expectation(k4, none, q) == Rational(4));
  CHECK(brute_expectation(k4, none, q) == Rational(4));
}

TEST_CASE("expectation of a fixed assignment is its crossing") {
  auto k4 = WeightedCompleteGraph::unit(4);
  std::vector<int> a{0, 1, 1, 0}, q{0, 0};
  CHECK(conditional_expectation(k4, a, q) == Rational(4));
}

TEST_CASE("expectation with two open slots averages both completions") {
  // path 0-1-2 with 0 fixed in part 0; 1 and 2 fill one slot each
  WeightedCompleteGraph h(3);
  h.set_weight(0, 1, 1);
  h.set_weight(1, 2, 1);
  std::vector<int> a{0, -1, -1}, q{1, 1};
  // {0,1},{2} cuts 1 and {0,2},{1} cuts 2
  CHECK(conditional_expectation(h, a, q) == Rational(3, 2));
  CHECK(brute_expectation(h, a, q) == Rational(3, 2));
  CHECK_THROWS_AS(conditional_expectation(h, a, std::vector<int>{2, 1}), Error);
}

TEST_CASE("expectation matches enumeration on random instances") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + static_cast<int>(rng() % 6);
    int k = 2 + static_cast<int>(rng() % 2);
    auto h = random_weighted(n, rng);
    std::vector<int> assign(n, -1);
    std::vector<int> quota(k, 0);
    for (int v = 0; v < n; ++v) {
      int r = static_cast<int>(rng() % (k + 1));
      if (r < k && rng() % 2) assign[v] = r;
      else ++quota[rng() % k];
    }
    CHECK(conditional_expectation(h, assign, quota) == brute_expectation(h, assign, quota));
  }
}

TEST_CASE("derandomization never lowers the conditional expectation") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + static_cast<int>(rng() % 12);
    int k = 2 + static_cast<int>(rng() % 5);
    auto h = random_weighted(n, rng);
    ExpectationTrace trace;
    auto a = derandomized_balanced_assignment(h, k, &trace);
    REQUIRE(trace.values.size() == static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 1; i < trace.values.size(); ++i) CHECK(trace.values[i] >= trace.values[i - 1]);
    CHECK(Rational(h.crossing_weight(a)) == trace.values.back());
    std::vector<int> sizes(k, 0);
    for (int x : a) ++sizes[x];
    CHECK(is_balanced_sizes(sizes));
  }
}

TEST_CASE("balanced cut on small complete graphs") {
  auto a = balanced_kcut(Graph::complete(4), 3);
  CHECK(a.achieved == 5);
  auto sa = a.partition.part_sizes();
  std::sort(sa.rbegin(), sa.rend());
  CHECK(sa == std::vector<int>{2, 1, 1});
  auto b = balanced_kcut(Graph::complete(7), 3);
  CHECK(b.achieved == 16);
  auto sb = b.partition.part_sizes();
  std::sort(sb.rbegin(), sb.rend());
  CHECK(sb == std::vector<int>{3, 2, 2});
  auto c = balanced_kcut(Graph(5), 3);
  CHECK(c.achieved == 0);
  CHECK(c.guarantee <= 0);
}

TEST_CASE("balanced cut meets its bound on every graph with at most 6 vertices") {
  for (int n = 1; n <= 6; ++n)
    ref::for_each_graph(n, [&](const ref::G& r) {
      Graph g = ref::to_graph(r);
      for (int k = 2; k <= 4; ++k) {
        auto res = balanced_kcut(g, k);
        REQUIRE(res.achieved == ref::cut(r, ref::assignment(res.partition)));
        REQUIRE(ref::balanced_cut_ok(res.achieved, r.m(), k));
        REQUIRE(res.class_balanced);
      }
    });
}

TEST_CASE("bound formula can exceed m for odd k >= 5") {
  // path on three vertices: h(2) ~ 1.56, formula for k = 5 ~ 2.02 > m = 2
  ref::G r{4, {{0, 1}, {1, 3}}};
  CHECK_FALSE(ref::balanced_cut_ok(2, 2, 5));
  CHECK(ref::max_cut(r, 5) == 2);
  auto res = balanced_kcut(ref::to_graph(r), 5);
  CHECK(res.achieved == 2);
  CHECK(res.formula_exceeds_m);
  CHECK(res.guarantee == 2);
  CHECK(res.branch == "classes-separated");
  // even k and k = 3 never hit this
  for (std::int64_t m = 0; m <= 200; ++m)
    for (int k : {2, 3, 4, 6, 8}) CHECK(ref::balanced_cut_ok(m, m, k));
}

TEST_CASE("balanced cut with k = 5..7 on every graph with at most 6 vertices") {
  for (int n = 1; n <= 6; ++n)
    ref::for_each_graph(n, [&](const ref::G& r) {
      Graph g = ref::to_graph(r);
      for (int k = 5; k <= 7; ++k) {
        auto res = balanced_kcut(g, k);
        REQUIRE(res.achieved == ref::cut(r, ref::assignment(res.partition)));
        if (ref::balanced_cut_ok(r.m(), r.m(), k)) {
          REQUIRE(ref::balanced_cut_ok(res.achieved, r.m(), k));
        } else {
          REQUIRE(res.achieved == r.m());
        }
      }
    });
}

TEST_CASE("balanced cut never beats the optimum") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    auto r = ref::gnp(1 + static_cast<int>(rng() % 9), 0.5, rng);
    Graph g = ref::to_graph(r);
    for (int k = 2; k <= 3; ++k) CHECK(ref::max_cut(r, k) >= balanced_kcut(g, k).achieved);
  }
}

TEST_CASE("stability cut examples") {
  auto a = f2_stability_cut(Graph::complete(4));
  CHECK(a.achieved == 4);
  CHECK(a.guarantee == 4);
  std::vector<Edge> p3{{0, 1}, {1, 2}};
  CHECK(f2_stability_cut(Graph(3, p3)).achieved == 2);
  std::vector<Edge> c4{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  CHECK(f2_stability_cut(Graph(4, c4)).achieved == 4);
  CHECK_THROWS_AS(f2_stability_cut(Graph::complete(5)), Error);
  CHECK_THROWS_AS(f2_stability_cut(Graph(3)), Error);
}

TEST_CASE("stability split handles every weighted shape it accepts") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 500; ++t) {
    int n = 2 + static_cast<int>(rng() % 7);
    WeightedCompleteGraph h(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) h.set_weight(i, j, 1 + static_cast<std::int64_t>(rng() % 3));
    if (h.is_unit() && n % 2 == 1) {
      CHECK_THROWS_AS(stability_split(h), Error);
      continue;
    }
    auto a = stability_split(h);
    std::int64_t c = h.crossing_weight(a);
    CHECK(ref::t14_cut_ok(c, h.total()));
    int ones = 0;
    for (int x : a) ones += x;
    CHECK(std::abs(2 * ones - n) <= 1);
  }
}
