#include <doctest.h>

#include "judicious/harness.hpp"
#include "judicious/oracle.hpp"

using namespace jp;

TEST_CASE("all graphs on 5 vertices pass for three parts") {
  SweepConfig c;
  c.mode = SweepConfig::Mode::all_graphs;
  c.n = 5;
  c.k = 3;
  auto s = run_sweep(c);
  CHECK(s.graphs == 1024);
  CHECK(s.all_pass());
  CHECK(s.failures.empty());
  auto j = s.to_json(c);
  CHECK(j["graphs"] == 1024);
}

TEST_CASE("sweep summaries do not depend on the worker count") {
  SweepConfig c;
  c.mode = SweepConfig::Mode::random;
  c.n = 14;
  c.p = 0.4;
  c.count = 40;
  c.seed = 3;
  c.k = 2;
  auto one = run_sweep(c);
  c.jobs = 4;
  auto four = run_sweep(c);
  CHECK(one.to_json(c).dump() != "");
  CHECK(one.branches == four.branches);
  CHECK(one.passed == four.passed);
  CHECK(one.tight == four.tight);
  CHECK(one.all_pass());
}

TEST_CASE("per-graph seeds are distinct") {
  CHECK(sweep_graph_seed(0, 0) != sweep_graph_seed(0, 1));
  CHECK(sweep_graph_seed(0, 0) != sweep_graph_seed(1, 0));
  CHECK(sweep_graph_seed(5, 9) == sweep_graph_seed(5, 9));
}

TEST_CASE("single graph checks") {
  CHECK(check_graph(Graph::complete(7), 3).pass);
  CHECK(check_graph(Graph::complete(7), 3).tight);
  CHECK(check_graph(Graph::complete(5), 2).pass);
  CHECK(check_graph(Graph::complete(6), 4).pass);
  CHECK(check_graph(random_gnp(30, 0.5, 1), 5).pass);
}
