#include <doctest.h>

#include <cmath>
#include <random>

#include "judicious/bounds.hpp"
#include "judicious/error.hpp"
#include "judicious/judicious.hpp"
#include "judicious/oracle.hpp"
#include "support.hpp"

using namespace jp;

namespace {

Graph union_with_isolated(const Graph& g, int extra) {
  auto e = g.edges();
  return Graph(g.n() + extra, e);
}

void check_t13(const Graph& g, const JudiciousResult& r) {
  auto rg = ref::of(g);
  auto a = ref::assignment(r.partition);
  auto in = ref::internal(rg, a, 3);
  for (auto e : in) CHECK(ref::t13_part_ok(e, rg.m()));
  CHECK(ref::t13_cut_ok(ref::cut(rg, a), rg.m()));
  CHECK(r.certificate.all_pass());
}

// Reference for the psi function used by the certificate.
double psi_ref(double x, double m, double beta1, double d, double c) {
  return x / 2 - 2 * m / 9 - (beta1 - d) / 2 - std::sqrt(2 * m + 0.25) / 3 +
         std::sqrt(2 * (8 * m / 9 - beta1 + d - x) + 0.25) / 4 + 1.0 / 24 + c;
}

}  // namespace

TEST_CASE("theorem names round-trip") {
  for (auto t : {Theorem::t13, Theorem::t14, Theorem::t15, Theorem::c17})
    CHECK(parse_theorem(theorem_name(t)) == t);
  CHECK_THROWS_AS(parse_theorem("t99"), Error);
}

TEST_CASE("g values") {
  const double m = 18;
  const double beta1 = h(18) / 9 + 0.6;
  const double a = 4 * m / 9 + 4 * beta1 - 1;
  CHECK(g_certificate(a, m, beta1, 1, 0.25) >= 0);
  CHECK(g_certificate(a, m, beta1, 1, 0.25) == doctest::Approx(psi_ref(a, m, beta1, 1, 0.25)));
  for (int mi = 18; mi <= 200; mi += 7)
    for (int j = 1; j <= 20; ++j) {
      double b1 = h(mi) / 9 + j / 20.0;
      double b = 8.0 * mi / 9 - b1 + 1;
      CHECK(g_certificate(b, mi, b1, 1, 0) >= -1e-9);
    }
  // radicand exactly zero
  const double edge = 8 * m / 9 - beta1 + 1 + 0.125;
  CHECK(std::isfinite(g_certificate(edge, m, beta1, 1, 0)));
  CHECK_THROWS_AS(g_certificate(edge + 1, m, beta1, 1, 0), Error);
}

TEST_CASE("psi check at sample points") {
  CHECK(psi_lemma_check(18, h(18) / 9 + 1e-3, 1, 0));
  auto r = psi_clauses(100, h(100) / 9 + 0.5, 2, 0);
  CHECK(r.a_plus_one_applies);
  CHECK(r.holds());
  CHECK_THROWS_AS(psi_lemma_check(17, 1, 1, 0), Error);
}

TEST_CASE("two-part examples") {
  auto a = judicious_2partition(Graph::complete(5));
  CHECK(a.certificate.branch == Branch::odd_complete);
  CHECK(a.partition.crossing() == 6);
  CHECK(a.partition.max_internal() == 3);
  auto sa = a.partition.part_sizes();
  std::sort(sa.rbegin(), sa.rend());
  CHECK(sa == std::vector<int>{3, 2});

  auto b = judicious_2partition(Graph::complete(4));
  CHECK(b.partition.crossing() == 4);
  CHECK(b.partition.max_internal() == 1);
  CHECK(b.certificate.all_pass());

  std::vector<Edge> p3{{0, 1}, {1, 2}};
  auto c = judicious_2partition(Graph(3, p3));
  CHECK(c.partition.crossing() == 2);
  CHECK(c.partition.max_internal() == 0);
}

TEST_CASE("three-part examples") {
  auto a = judicious_3partition(Graph::complete(4));
  CHECK(a.partition.max_internal() == 1);
  CHECK(a.partition.crossing() == 5);
  for (const auto& b : a.certificate.bounds) CHECK(b.tight);
  check_t13(Graph::complete(4), a);

  auto b = judicious_3partition(Graph::complete(7));
  CHECK(b.partition.max_internal() == 3);
  CHECK(b.partition.crossing() == 16);
  for (const auto& bd : b.certificate.bounds) CHECK(bd.tight);

  auto c = judicious_3partition(Graph(3));
  CHECK(c.partition.part_sizes() == std::vector<int>{1, 1, 1});
  CHECK(c.partition.crossing() == 0);
}

TEST_CASE("three-part tightness on extremal graphs") {
  for (int r = 1; r <= 3; ++r)
    for (int p = 0; p <= 2; ++p) {
      Graph g = union_with_isolated(Graph::complete(3 * r + 1), p);
      auto res = judicious_3partition(g);
      check_t13(g, res);
      const std::int64_t m = g.m();
      CHECK(ref::eq_h(9 * res.partition.max_internal() - m, 1, m));
      CHECK(ref::eq_h(3 * res.partition.crossing() - 2 * m, 1, m));
    }
}

TEST_CASE("small-m examples") {
  auto a = judicious_k_small(Graph::complete(4), 3);
  CHECK(a.partition.max_internal() <= 1);
  CHECK(a.partition.crossing() >= 5);
  std::vector<Edge> two{{0, 1}, {2, 3}};
  auto b = judicious_k_small(Graph(4, two), 3);
  CHECK(b.partition.max_internal() == 0);
  CHECK(b.partition.crossing() == 2);
  auto c = judicious_k_small(Graph::complete(5), 4);
  CHECK(c.partition.max_internal() <= 1);
  CHECK(c.certificate.all_pass());
  CHECK(ref::t15_part_ok(c.partition.max_internal(), 10, 4));
  CHECK(ref::t15_cut_ok(c.partition.crossing(), 10, 4));
  CHECK_THROWS_AS(judicious_k_small(Graph::complete(7), 3), Error);
}

TEST_CASE("verification of given partitions") {
  Graph k4 = Graph::complete(4);
  CHECK(verify_judicious(k4, Partition(k4, 3, {0, 0, 1, 2}), Theorem::t13).all_pass());
  auto bad = verify_judicious(k4, Partition(k4, 3, {0, 0, 0, 1}), Theorem::t13);
  CHECK_FALSE(bad.all_pass());
  CHECK(bad.bounds[0].achieved == 3);
  CHECK_FALSE(bad.bounds[0].pass);
  CHECK(verify_judicious(k4, Partition(k4, 3, {0, 0, 1, 2}), Theorem::c17).all_pass());
  CHECK_THROWS_AS(verify_judicious(k4, Partition(k4, 2, {0, 0, 1, 1}), Theorem::t13), Error);
}

TEST_CASE("passing both three-part bounds implies the weighted check") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 3000; ++t) {
    auto r = ref::gnp(3 + static_cast<int>(rng() % 8), (1 + rng() % 9) / 10.0, rng);
    Graph g = ref::to_graph(r);
    std::vector<int> a(g.n());
    for (int& x : a) x = static_cast<int>(rng() % 3);
    Partition p(g, 3, a);
    if (verify_judicious(g, p, Theorem::t13).all_pass())
      CHECK(verify_judicious(g, p, Theorem::c17).all_pass());
    CHECK(verify_judicious(g, p, Theorem::c17).all_pass() == ref::c17_ok(ref::internal(r, a, 3), r.m()));
  }
}

TEST_CASE("three-part construction on random graphs") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    int n = 6 + static_cast<int>(rng() % 20);
    auto r = ref::gnp(n, (2 + rng() % 7) / 10.0, rng);
    Graph g = ref::to_graph(r);
    auto res = judicious_3partition(g);
    check_t13(g, res);
    CHECK(res.certificate.diagnostics.empty());
    // restart keys strictly decrease
    const auto& keys = res.certificate.restart_keys;
    for (std::size_t i = 1; i < keys.size(); ++i) CHECK(lex_less(keys[i], keys[i - 1]));
    if (res.certificate.branch == Branch::moved_v0 && res.certificate.g_a && res.certificate.g_b &&
        res.certificate.c && *res.certificate.c >= 0.25) {
      CHECK(*res.certificate.g_a >= -1e-9);
      CHECK(*res.certificate.g_b >= -1e-9);
    }
  }
}

TEST_CASE("two-part construction on random graphs") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 60; ++t) {
    auto r = ref::gnp(3 + static_cast<int>(rng() % 25), (2 + rng() % 7) / 10.0, rng);
    Graph g = ref::to_graph(r);
    auto res = judicious_2partition(g);
    auto a = ref::assignment(res.partition);
    for (auto e : ref::internal(r, a, 2)) CHECK(ref::t14_part_ok(e, r.m()));
    if (ref::odd_clique_modulo_isolated(r)) CHECK(ref::edwards_ok(ref::cut(r, a), r.m()));
    else CHECK(ref::t14_cut_ok(ref::cut(r, a), r.m()));
  }
}
