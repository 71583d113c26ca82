#include "judicious/harness.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "judicious/bounds.hpp"
#include "judicious/cut_construct.hpp"
#include "judicious/error.hpp"
#include "judicious/judicious.hpp"
#include "judicious/oracle.hpp"

namespace jp {

namespace {

std::string describe(const Graph& g) {
  std::string s = "n=" + std::to_string(g.n()) + " edges=[";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) s += ' ';
    first = false;
    s += std::to_string(u) + "-" + std::to_string(v);
  }
  return s + "]";
}

void absorb(GraphCheck& out, const JudiciousCertificate& cert) {
  for (const auto& b : cert.bounds) {
    if (!b.pass) {
      out.pass = false;
      out.failure += theorem_name(cert.theorem) + ":" + b.name + " achieved " +
                     std::to_string(b.achieved) + " vs " + b.required.str() + "; ";
    }
    if (!b.tight) out.tight = false;
  }
}

}  // namespace

GraphCheck check_graph(const Graph& g, int k) {
  require(k >= 2, "sweep needs k >= 2");
  GraphCheck out;
  out.pass = true;
  out.tight = true;
  try {
    if (k == 2) {
      auto r = judicious_2partition(g);
      out.branch = branch_name(r.certificate.branch);
      absorb(out, r.certificate);
    } else if (k == 3) {
      auto r = judicious_3partition(g);
      out.branch = branch_name(r.certificate.branch);
      absorb(out, r.certificate);
      auto weighted = verify_judicious(g, r.partition, Theorem::c17);
      for (const auto& b : weighted.bounds)
        if (!b.pass) {
          out.pass = false;
          out.failure += "c17:" + b.name + "; ";
        }
    } else if (g.m() < 2 * std::int64_t(k) * k) {
      auto r = judicious_k_small(g, k);
      out.branch = branch_name(r.certificate.branch);
      absorb(out, r.certificate);
    } else {
      auto r = balanced_kcut(g, k);
      out.branch = r.branch;
      out.tight = r.guarantee == r.achieved;
    }
  } catch (const Error& e) {
    out.pass = false;
    out.tight = false;
    out.failure = std::string("error: ") + e.what();
  }
  if (!out.pass) out.failure = describe(g) + " " + out.failure;
  return out;
}

std::uint64_t sweep_graph_seed(std::uint64_t seed, std::uint64_t i) {
  // splitmix64 over (seed, i)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SweepSummary run_sweep(const SweepConfig& config) {
  require(config.k >= 2, "sweep needs k >= 2");
  require(config.jobs >= 1, "sweep needs at least one job");
  std::uint64_t total = 0;
  if (config.mode == SweepConfig::Mode::all_graphs) {
    require(config.n >= 0 && config.n <= 7, "sweep --all-graphs needs 0 <= N <= 7");
    total = std::uint64_t{1} << (config.n * (config.n - 1) / 2);
  } else {
    require(config.n >= 0, "sweep --random needs n >= 0");
    require(config.p >= 0.0 && config.p <= 1.0, "sweep --random needs 0 <= p <= 1");
    require(config.count >= 0, "sweep --random needs count >= 0");
    total = static_cast<std::uint64_t>(config.count);
  }
  auto graph_at = [&](std::uint64_t i) {
    return config.mode == SweepConfig::Mode::all_graphs
               ? labeled_graph(config.n, i)
               : random_gnp(config.n, config.p, sweep_graph_seed(config.seed, i));
  };

  std::atomic<std::uint64_t> next{0};
  std::mutex lock;
  SweepSummary summary;
  std::vector<std::pair<std::uint64_t, std::string>> failures;
  auto worker = [&] {
    SweepSummary local;
    std::vector<std::pair<std::uint64_t, std::string>> local_failures;
    while (true) {
      std::uint64_t i = next.fetch_add(1);
      if (i >= total) break;
      GraphCheck c = check_graph(graph_at(i), config.k);
      ++local.graphs;
      if (c.pass) ++local.passed;
      if (c.tight) ++local.tight;
      ++local.branches[c.branch];
      if (!c.pass) local_failures.emplace_back(i, "#" + std::to_string(i) + " " + c.failure);
    }
    std::lock_guard<std::mutex> guard(lock);
    summary.graphs += local.graphs;
    summary.passed += local.passed;
    summary.tight += local.tight;
    for (auto& [b, n] : local.branches) summary.branches[b] += n;
    for (auto& f : local_failures) failures.push_back(std::move(f));
  };
  const int jobs = static_cast<int>(std::min<std::uint64_t>(config.jobs, std::max<std::uint64_t>(total, 1)));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(failures.begin(), failures.end());
  for (auto& f : failures) summary.failures.push_back(std::move(f.second));
  return summary;
}

nlohmann::json SweepSummary::to_json(const SweepConfig& config) const {
  nlohmann::json j;
  if (config.mode == SweepConfig::Mode::all_graphs) {
    j["mode"] = "all-graphs";
    j["n"] = config.n;
  } else {
    j["mode"] = "random";
    j["n"] = config.n;
    j["p"] = config.p;
    j["count"] = config.count;
    j["seed"] = config.seed;
  }
  j["k"] = config.k;
  j["graphs"] = graphs;
  j["passed"] = passed;
  j["failed"] = graphs - passed;
  j["tight"] = tight;
  j["branches"] = branches;
  j["failures"] = failures;
  j["all_pass"] = all_pass();
  return j;
}

}  // namespace jp
