#include "judicious/judicious.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "judicious/bounds.hpp"
#include "judicious/cut_construct.hpp"
#include "judicious/error.hpp"
#include "judicious/local_search.hpp"

namespace jp {

std::string theorem_name(Theorem t) {
  switch (t) {
    case Theorem::t13: return "t13";
    case Theorem::t14: return "t14";
    case Theorem::t15: return "t15";
    case Theorem::c17: return "c17";
  }
  return "?";
}

Theorem parse_theorem(const std::string& s) {
  if (s == "t13") return Theorem::t13;
  if (s == "t14") return Theorem::t14;
  if (s == "t15") return Theorem::t15;
  if (s == "c17") return Theorem::c17;
  fail(ErrorCode::invalid_argument, "unknown theorem '" + s + "' (expected t13, t14, t15 or c17)");
}

std::string branch_name(Branch b) {
  switch (b) {
    case Branch::none: return "none";
    case Branch::odd_complete: return "odd-complete";
    case Branch::direct_good: return "direct-good";
    case Branch::moved_v0: return "moved-v0";
    case Branch::moved_v1: return "moved-v1";
    case Branch::small_m_case1: return "small-m-case1";
    case Branch::small_m_case2: return "small-m-case2";
    case Branch::small_m_case3: return "small-m-case3";
  }
  return "?";
}

bool JudiciousCertificate::all_pass() const {
  return std::all_of(bounds.begin(), bounds.end(), [](const BoundCheck& b) { return b.pass; });
}

// ---------------------------------------------------------------------------
// psi / g arithmetic

namespace {

constexpr double kTol = 1e-9;

double psi(double x, double m, double beta1, double d, double c) {
  double rad = 2.0 * (8.0 * m / 9.0 - beta1 + d - x) + 0.25;
  if (rad < 0 && rad > -1e-12) rad = 0;
  if (rad < 0) fail(ErrorCode::invalid_argument, "g: negative radicand");
  return x / 2.0 - 2.0 * m / 9.0 - (beta1 - d) / 2.0 - std::sqrt(2.0 * m + 0.25) / 3.0 +
         std::sqrt(rad) / 4.0 + 1.0 / 24.0 + c;
}

}  // namespace

double g_certificate(double x, double m, double beta1, double d0, double c) {
  return psi(x, m, beta1, d0, c);
}

PsiReport psi_clauses(std::int64_t m, double beta1, int d, double c) {
  require(m >= 18, "psi: needs m >= 18");
  require(beta1 > h(m) / 9.0, "psi: needs beta1 > h(m)/9");
  require(d >= 1, "psi: needs d >= 1");
  require(c >= 0, "psi: needs c >= 0");
  const double mm = static_cast<double>(m);
  const double a = 4.0 * mm / 9.0 + 4.0 * beta1 - d;
  const double b = 8.0 * mm / 9.0 - beta1 + d;
  // psi(., c) is real on x <= b + 1/8; the a-side clauses need the radicand
  // at a (resp. a + 1) to be non-negative.
  const double gamma = 4.0 * mm / 45.0 + 2.0 * d / 5.0 + 1.0 / 40.0;
  const double gamma1 = 4.0 * mm / 45.0 + 2.0 * d / 5.0 - 7.0 / 40.0;
  auto f = [&](double x) { return psi(x, mm, beta1, d, c); };

  PsiReport r;
  const double hi = b + 0.125;
  const double lo = std::min(a, b) - 1.0;
  const int steps = 64;
  const double step = (hi - lo) / steps;
  for (int i = 1; i < steps; ++i) {
    double x = lo + i * step;
    if (f(x - step) + f(x + step) - 2.0 * f(x) > kTol) r.concave = false;
  }

  r.b_applies = a <= b;
  if (r.b_applies) r.at_b = f(b) >= -kTol;
  r.a_large_beta_applies = beta1 >= h(m) / 9.0 + 0.5 && beta1 <= gamma;
  if (r.a_large_beta_applies) r.at_a_large_beta = f(a) >= -kTol;
  r.a_plus_one_applies = beta1 <= gamma1;
  if (r.a_plus_one_applies) r.at_a_plus_one = f(a + 1.0) >= -kTol;
  r.a_large_c_applies = c >= 0.25 && beta1 <= gamma;
  if (r.a_large_c_applies) r.at_a_large_c = f(a) >= -kTol;
  return r;
}

bool psi_lemma_check(std::int64_t m, double beta1, int d, double c) {
  return psi_clauses(m, beta1, d, c).holds();
}

// ---------------------------------------------------------------------------
// verification

JudiciousCertificate verify_judicious(const Graph& g, const Partition& p, Theorem theorem) {
  require(p.num_vertices() == g.n(), "partition does not cover the graph");
  Partition fresh(g, p.k(), std::vector<int>(p.assignment().begin(), p.assignment().end()));
  const std::int64_t m = g.m();
  const int k = fresh.k();
  JudiciousCertificate cert;
  cert.theorem = theorem;
  cert.k = k;
  cert.m = m;
  auto add = [&](std::string name, RootValue required, std::int64_t achieved, bool upper) {
    BoundCheck b;
    b.name = std::move(name);
    b.required = required;
    b.achieved = achieved;
    b.upper = upper;
    b.pass = upper ? required >= achieved : required <= achieved;
    b.tight = required == achieved;
    cert.bounds.push_back(std::move(b));
  };
  switch (theorem) {
    case Theorem::t13:
      require(k == 3, "t13 bounds need a 3-partition");
      add("max_part", min_max_part_bound(m, 3), fresh.max_internal(), true);
      add("crossing", f3_target(m), fresh.crossing(), false);
      break;
    case Theorem::t14:
      require(k == 2, "t14 bounds need a 2-partition");
      add("max_part", min_max_part_bound(m, 2), fresh.max_internal(), true);
      add("crossing", is_odd_complete_modulo_isolated(g) ? edwards_bound(m) : stability_cut_bound(m),
          fresh.crossing(), false);
      break;
    case Theorem::t15:
      require(k >= 3, "t15 bounds need k >= 3");
      add("max_part", min_max_part_bound(m, k), fresh.max_internal(), true);
      add("crossing", max_k_cut_bound(m, k), fresh.crossing(), false);
      break;
    case Theorem::c17: {
      require(k == 3, "c17 bounds need a 3-partition");
      const std::int64_t inside = m - fresh.crossing();
      for (int i = 0; i < 3; ++i)
        add("part_" + std::to_string(i), RootValue::constant(Rational(2 * m)),
            12 * fresh.internal(i) + 3 * (inside - fresh.internal(i)), true);
      break;
    }
  }
  auto sizes = fresh.part_sizes();
  cert.empty_parts = std::find(sizes.begin(), sizes.end(), 0) != sizes.end();
  return cert;
}

// ---------------------------------------------------------------------------
// constructions

namespace {

bool passes(const Partition& p, const RootValue& part_bound, const RootValue& cut_bound) {
  return part_bound >= p.max_internal() && cut_bound <= p.crossing();
}

bool is_good(const Graph& g, const Partition& p, const RootValue& cut_bound) {
  if (cut_bound > p.crossing()) return false;
  for (int i = 1; i < p.k(); ++i)
    if (p.internal(i) > p.internal(i - 1)) return false;
  return satisfies_property_q(g, p, 0);
}

Partition sorted(Partition p) {
  p.sort_parts_by_internal();
  return p;
}

Partition moved(const Graph& g, Partition p, int v, int to) {
  p.move_vertex(g, v, to);
  return p;
}

struct LowDegree {
  int v0 = -1, d0 = 0;
  int v1 = -1, d1 = 0;
};

// v0: a vertex of minimum nonzero degree in G[part]; v1: a vertex of minimum
// nonzero degree among the rest. Smallest index wins ties.
LowDegree low_degree_vertices(const Graph& g, const Partition& p, int part) {
  LowDegree out;
  std::vector<std::pair<int, int>> degs;
  for (int v = 0; v < g.n(); ++v) {
    if (p.part_of(v) != part) continue;
    int d = neighbors_in_part(g, p, v, part);
    if (d > 0) degs.emplace_back(d, v);
  }
  std::sort(degs.begin(), degs.end());
  if (!degs.empty()) std::tie(out.d0, out.v0) = degs[0];
  if (degs.size() >= 2) std::tie(out.d1, out.v1) = degs[1];
  return out;
}

// Restart partition for the next round, or nullopt when no generated
// candidate is good with a smaller lex key than `current`.
std::optional<Partition> pick_restart(const Graph& g, const std::vector<Partition>& candidates,
                                      const Partition& current, const RootValue& cut_bound) {
  const LexKey key = current.lex_key();
  const Partition* best = nullptr;
  for (const auto& c : candidates) {
    if (!is_good(g, c, cut_bound) || !lex_less(c.lex_key(), key)) continue;
    if (!best || lex_less(c.lex_key(), best->lex_key())) best = &c;
  }
  if (!best) return std::nullopt;
  Partition settled = settle(g, *best, DescentPolicy::judicious());
  if (lex_less(settled.lex_key(), key) && is_good(g, settled, cut_bound)) return settled;
  return *best;
}

struct CoreResult {
  Partition partition;
  JudiciousCertificate cert;  // loop data only; bounds filled by the caller
};

CoreResult two_partition_loop(const Graph& s) {
  const std::int64_t m = s.m();
  const RootValue part_bound = min_max_part_bound(m, 2);
  const RootValue cut_bound = stability_cut_bound(m);
  CoreResult out;
  auto& cert = out.cert;
  Partition cur = settle(s, good_partition(s, 2), DescentPolicy::judicious());
  while (true) {
    cert.beta1 = Rational(cur.internal(0)) - Rational(m, 4);
    if (passes(cur, part_bound, cut_bound)) {
      cert.branch = Branch::direct_good;
      out.partition = cur;
      return out;
    }
    LowDegree low = low_degree_vertices(s, cur, 0);
    cert.d0 = low.d0;
    cert.d1 = low.d1;
    std::vector<std::pair<Partition, Branch>> candidates;
    if (low.v0 >= 0) candidates.emplace_back(sorted(moved(s, cur, low.v0, 1)), Branch::moved_v0);
    if (low.v1 >= 0) candidates.emplace_back(sorted(moved(s, cur, low.v1, 1)), Branch::moved_v1);
    for (auto& [p, branch] : candidates)
      if (passes(p, part_bound, cut_bound)) {
        cert.branch = branch;
        out.partition = std::move(p);
        return out;
      }
    std::vector<Partition> pool;
    for (auto& c : candidates) pool.push_back(c.first);
    auto next = pick_restart(s, pool, cur, cut_bound);
    if (!next) {
      cert.branch = Branch::direct_good;
      cert.diagnostics.push_back(
          "no candidate met both bounds and none restarts with a smaller lex key");
      out.partition = cur;
      return out;
    }
    cert.restart_keys.push_back(next->lex_key());
    cur = std::move(*next);
  }
}

// Places isolated vertices back into a partition of the stripped graph.
std::vector<int> reattach(const Graph& g, const StrippedGraph& st, const Partition& core,
                          bool by_size_only) {
  const int k = core.k();
  std::vector<int> assign(static_cast<std::size_t>(g.n()), 0);
  std::vector<int> sizes(static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < st.original.size(); ++i) {
    assign[st.original[i]] = core.part_of(static_cast<int>(i));
    ++sizes[core.part_of(static_cast<int>(i))];
  }
  for (int v : st.isolated) {
    int best = 0;
    for (int p = 1; p < k; ++p) {
      auto rank = [&](int q) {
        return by_size_only ? std::pair<std::int64_t, int>{sizes[q], 0}
                            : std::pair<std::int64_t, int>{core.internal(q), sizes[q]};
      };
      if (rank(p) < rank(best)) best = p;
    }
    assign[v] = best;
    ++sizes[best];
  }
  return assign;
}

void copy_loop_data(const JudiciousCertificate& from, JudiciousCertificate& to) {
  to.branch = from.branch;
  to.beta1 = from.beta1;
  to.d0 = from.d0;
  to.d1 = from.d1;
  to.a = from.a;
  to.b = from.b;
  to.g_a = from.g_a;
  to.g_b = from.g_b;
  to.c = from.c;
  to.restart_keys = from.restart_keys;
  to.detail = from.detail;
  to.diagnostics = from.diagnostics;
}

// Proper k-colouring by backtracking (largest degree first), within a node
// budget.
std::optional<std::vector<int>> proper_colouring(const Graph& g, int k) {
  const int n = g.n();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::int64_t budget = 2'000'000;
  std::function<bool(int)> place = [&](int idx) -> bool {
    if (idx == n) return true;
    if (--budget < 0) return false;
    int v = order[idx];
    int used = 0;
    for (int i = 0; i < idx; ++i) used = std::max(used, colour[order[i]] + 1);
    // Colours above the first unused one are symmetric; try at most one.
    for (int c = 0; c < std::min(k, used + 1); ++c) {
      bool ok = true;
      for (int w : g.neighbors(v))
        if (colour[w] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      colour[v] = c;
      if (place(idx + 1)) return true;
      colour[v] = -1;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return colour;
}

CoreResult small_m_core(const Graph& s, int k, Theorem target) {
  const std::int64_t m = s.m();
  CoreResult out;
  auto& cert = out.cert;
  const std::int64_t kk = std::int64_t(k) * k;
  int which;
  if (2 * m < kk + k) {
    which = 1;
    cert.branch = Branch::small_m_case1;
  } else if (2 * m < 3 * kk) {
    which = 2;
    cert.branch = Branch::small_m_case2;
  } else {
    which = 3;
    cert.branch = Branch::small_m_case3;
  }

  auto ok = [&](const Partition& p) { return verify_judicious(s, p, target).all_pass(); };
  auto decreasing_from_balanced = [&] {
    return sorted(lex_descent(s, balanced_kcut(s, k).partition, DescentPolicy::decreasing()));
  };
  auto judicious_from_good = [&] {
    return settle(s, good_partition(s, k), DescentPolicy::judicious());
  };
  auto decreasing_from_good = [&] {
    return sorted(lex_descent(s, judicious_from_good(), DescentPolicy::decreasing()));
  };
  auto colouring = [&]() -> std::optional<Partition> {
    auto c = proper_colouring(s, k);
    if (!c) return std::nullopt;
    return sorted(Partition(s, k, std::move(*c)));
  };

  using Strategy = std::pair<const char*, std::function<std::optional<Partition>()>>;
  std::vector<Strategy> strategies;
  auto wrap = [](auto f) { return std::function<std::optional<Partition>()>([f] { return std::optional<Partition>(f()); }); };
  if (which == 1) {
    strategies = {{"decreasing-descent", wrap(decreasing_from_balanced)},
                  {"colouring", colouring},
                  {"judicious-descent", wrap(judicious_from_good)}};
  } else if (which == 2) {
    strategies = {{"judicious-descent", wrap(judicious_from_good)},
                  {"decreasing-after-judicious", wrap(decreasing_from_good)},
                  {"decreasing-descent", wrap(decreasing_from_balanced)},
                  {"colouring", colouring}};
  } else {
    strategies = {{"decreasing-descent", wrap(decreasing_from_balanced)},
                  {"judicious-descent", wrap(judicious_from_good)},
                  {"decreasing-after-judicious", wrap(decreasing_from_good)},
                  {"colouring", colouring}};
  }

  std::optional<Partition> first;
  for (auto& [name, run] : strategies) {
    auto p = run();
    if (!p) continue;
    if (!first) first = *p;
    if (ok(*p)) {
      cert.detail = name;
      out.partition = std::move(*p);
      return out;
    }
    cert.diagnostics.push_back(std::string(name) + " missed a bound");
  }
  cert.detail = strategies.front().first;
  cert.diagnostics.push_back("no strategy met both bounds");
  out.partition = *first;
  return out;
}

CoreResult three_partition_loop(const Graph& s) {
  const std::int64_t m = s.m();
  const RootValue part_bound = min_max_part_bound(m, 3);
  const RootValue cut_bound = f3_target(m);
  CoreResult out;
  auto& cert = out.cert;
  Partition cur = settle(s, good_partition(s, 3), DescentPolicy::judicious());
  while (true) {
    const Rational beta1 = Rational(cur.internal(0)) - Rational(m, 9);
    cert.beta1 = beta1;
    if (passes(cur, part_bound, cut_bound)) {
      cert.branch = Branch::direct_good;
      out.partition = cur;
      return out;
    }
    LowDegree low = low_degree_vertices(s, cur, 0);
    cert.d0 = low.d0;
    cert.d1 = low.d1;

    std::vector<std::pair<Partition, Branch>> candidates;
    if (low.v0 >= 0) {
      std::vector<int> rest;
      for (int v = 0; v < s.n(); ++v)
        if (cur.part_of(v) != 0 || v == low.v0) rest.push_back(v);
      Graph sub = induced_subgraph(s, rest);
      JudiciousResult split = judicious_2partition(sub);
      std::vector<int> assign(static_cast<std::size_t>(s.n()), 0);
      for (std::size_t i = 0; i < rest.size(); ++i)
        assign[rest[i]] = 1 + split.partition.part_of(static_cast<int>(i));
      candidates.emplace_back(sorted(Partition(s, 3, std::move(assign))), Branch::moved_v0);

      const double b1 = beta1.to_double();
      const double mm = static_cast<double>(m);
      const double c = is_odd_complete_modulo_isolated(sub) ? 0.0 : 0.25;
      const double a = 4.0 * mm / 9.0 + 4.0 * b1 - low.d0;
      const double b = 8.0 * mm / 9.0 - b1 + low.d0;
      cert.a = a;
      cert.b = b;
      cert.c = c;
      cert.g_a.reset();
      cert.g_b.reset();
      try {
        cert.g_a = g_certificate(a, mm, b1, low.d0, c);
        cert.g_b = g_certificate(b, mm, b1, low.d0, c);
      } catch (const Error&) {
        cert.diagnostics.push_back("g undefined at the lower endpoint");
      }
    }
    if (low.v1 >= 0) {
      const int in2 = neighbors_in_part(s, cur, low.v1, 1);
      const int first = in2 <= low.d1 ? 1 : 2;
      candidates.emplace_back(sorted(moved(s, cur, low.v1, first)), Branch::moved_v1);
      candidates.emplace_back(sorted(moved(s, cur, low.v1, 3 - first)), Branch::moved_v1);
    }
    for (auto& [p, branch] : candidates)
      if (passes(p, part_bound, cut_bound)) {
        cert.branch = branch;
        out.partition = std::move(p);
        return out;
      }
    std::vector<Partition> pool;
    for (auto& c : candidates) pool.push_back(c.first);
    auto next = pick_restart(s, pool, cur, cut_bound);
    if (!next) {
      cert.branch = Branch::direct_good;
      cert.diagnostics.push_back(
          "no candidate met both bounds and none restarts with a smaller lex key");
      out.partition = cur;
      return out;
    }
    cert.restart_keys.push_back(next->lex_key());
    cur = std::move(*next);
  }
}

JudiciousResult finish(const Graph& g, const StrippedGraph& st, const CoreResult& core,
                       Theorem theorem, bool by_size_only) {
  Partition p(g, core.partition.k(), reattach(g, st, core.partition, by_size_only));
  fill_empty_parts(g, p);
  p.sort_parts_by_internal();
  JudiciousResult out{p, verify_judicious(g, p, theorem)};
  copy_loop_data(core.cert, out.certificate);
  return out;
}

}  // namespace

JudiciousResult judicious_2partition(const Graph& g) {
  StrippedGraph st = strip_isolated(g);
  CoreResult core;
  if (is_odd_complete_modulo_isolated(g)) {
    const int n = st.graph.n();
    std::vector<int> assign(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) assign[i] = i < (n + 1) / 2 ? 0 : 1;
    core.partition = Partition(st.graph, 2, std::move(assign));
    core.cert.branch = Branch::odd_complete;
  } else {
    core = two_partition_loop(st.graph);
  }
  return finish(g, st, core, Theorem::t14, true);
}

JudiciousResult judicious_3partition(const Graph& g) {
  StrippedGraph st = strip_isolated(g);
  CoreResult core = st.graph.m() < 18 ? small_m_core(st.graph, 3, Theorem::t13)
                                      : three_partition_loop(st.graph);
  return finish(g, st, core, Theorem::t13, false);
}

JudiciousResult judicious_k_small(const Graph& g, int k) {
  require(k >= 3, "judicious_k_small needs k >= 3");
  require(g.m() < 2 * std::int64_t(k) * k, "judicious_k_small needs m < 2k^2");
  StrippedGraph st = strip_isolated(g);
  CoreResult core = small_m_core(st.graph, k, Theorem::t15);
  return finish(g, st, core, Theorem::t15, false);
}

}  // namespace jp
