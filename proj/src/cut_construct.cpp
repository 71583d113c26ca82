#include "judicious/cut_construct.hpp"

#include <algorithm>

#include "judicious/bounds.hpp"
#include "judicious/error.hpp"

namespace jp {

Rational conditional_expectation(const WeightedCompleteGraph& h, std::span<const int> assign,
                                 std::span<const int> quota) {
  const int n = h.n();
  const int k = static_cast<int>(quota.size());
  require(static_cast<int>(assign.size()) == n, "conditional_expectation: assignment size mismatch");
  std::int64_t free_count = 0;
  for (int a : assign) {
    require(a < k, "conditional_expectation: part index out of range");
    if (a < 0) ++free_count;
  }
  std::int64_t quota_sum = 0;
  for (int q : quota) {
    require(q >= 0, "conditional_expectation: negative quota");
    quota_sum += q;
  }
  require(quota_sum == free_count, "conditional_expectation: infeasible quota");

  std::int64_t fixed_cross = 0;
  std::int64_t free_free = 0;
  std::vector<std::int64_t> free_to_part(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::int64_t w = h.weight(i, j);
      if (w == 0) continue;
      int a = assign[i], b = assign[j];
      if (a >= 0 && b >= 0) {
        if (a != b) fixed_cross += w;
      } else if (a < 0 && b < 0) {
        free_free += w;
      } else {
        free_to_part[a >= 0 ? a : b] += w;
      }
    }

  Rational total(fixed_cross);
  const std::int64_t f = free_count;
  if (f >= 1)
    for (int p = 0; p < k; ++p)
      if (free_to_part[p] != 0) total += Rational(free_to_part[p] * (f - quota[p]), f);
  if (f >= 2 && free_free != 0) {
    std::int64_t same = 0;
    for (int q : quota) same += std::int64_t(q) * (q - 1);
    total += Rational(free_free) * Rational(f * (f - 1) - same, f * (f - 1));
  }
  return total;
}

std::vector<int> derandomized_balanced_assignment(const WeightedCompleteGraph& h, int k,
                                                  ExpectationTrace* trace) {
  require(k >= 1, "derandomization needs k >= 1");
  const int n = h.n();
  std::vector<int> quota(static_cast<std::size_t>(k), n / k);
  for (int p = 0; p < n % k; ++p) ++quota[p];
  std::vector<int> assign(static_cast<std::size_t>(n), -1);
  if (trace) trace->values.push_back(conditional_expectation(h, assign, quota));
  for (int v = 0; v < n; ++v) {
    int best = -1;
    Rational best_value;
    for (int p = 0; p < k; ++p) {
      if (quota[p] == 0) continue;
      assign[v] = p;
      --quota[p];
      Rational value = conditional_expectation(h, assign, quota);
      ++quota[p];
      if (best < 0 || value > best_value) {
        best = p;
        best_value = value;
      }
    }
    assign[v] = best;
    --quota[best];
    if (trace) trace->values.push_back(best_value);
  }
  return assign;
}

CutResult balanced_kcut(const Graph& g, int k, ExpectationTrace* trace) {
  require(k >= 2, "balanced_kcut needs k >= 2");
  Contraction c = contract(g);
  auto classes = derandomized_balanced_assignment(c.graph, k, trace);
  CutResult out;
  out.partition = Partition(g, k, lift_assignment(classes, c.map));
  out.achieved = out.partition.crossing();
  out.guarantee = balanced_cut_bound(g.m(), k);
  out.branch = "balanced-expectation";
  // At most k classes: each class has its own part and every edge crosses.
  // For odd k >= 5 and a few small m the formula exceeds m there.
  if (c.map.num_classes <= k && out.guarantee > g.m()) {
    out.formula_exceeds_m = true;
    out.guarantee = RootValue::constant(Rational(g.m()));
    out.branch = "classes-separated";
  }
  std::vector<int> sizes(static_cast<std::size_t>(k), 0);
  for (int p : classes) ++sizes[p];
  out.class_balanced = is_balanced_sizes(sizes);
  if (out.guarantee > out.achieved)
    fail(ErrorCode::falsified, "balanced_kcut fell below the balanced-partition bound");
  return out;
}

namespace {

// Places the vertices of an n1-vertex layer that are not in the residual so
// that both sides end up balanced. Returns false if the residual sides are
// already too uneven for that.
bool extend_balanced(int n1, std::span<const int> residual_vertices,
                     std::span<const int> residual_side, std::vector<int>& out) {
  out.assign(static_cast<std::size_t>(n1), -1);
  int count[2] = {0, 0};
  for (std::size_t i = 0; i < residual_vertices.size(); ++i) {
    out[residual_vertices[i]] = residual_side[i];
    ++count[residual_side[i]];
  }
  for (int v = 0; v < n1; ++v) {
    if (out[v] >= 0) continue;
    int side = count[1] < count[0] ? 1 : 0;
    out[v] = side;
    ++count[side];
  }
  return std::abs(count[0] - count[1]) <= 1;
}

std::vector<int> balanced_halves(int n) {
  std::vector<int> side(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) side[i] = i < (n + 1) / 2 ? 0 : 1;
  return side;
}

}  // namespace

std::vector<int> stability_split(const WeightedCompleteGraph& h, std::string* branch) {
  require(h.is_complete(), "stability_split needs a complete weighted graph");
  const int n1 = h.n();
  const std::int64_t w = h.total();
  require(w > 0, "stability_split: graph has no edges");
  std::string local;
  std::string& trail = branch ? *branch : local;

  if (h.is_unit()) {
    require(n1 % 2 == 0, "stability_split: unit-weight complete graph of odd order");
    trail = "even-complete";
    return balanced_halves(n1);
  }

  const RootValue target = stability_cut_bound(w);
  PeeledLayer peel = peel_layer(h);
  Contraction residual = contract(peel.residual);

  std::vector<int> residual_side;
  std::string step;
  std::string inner;
  if (residual.graph.is_unit() && residual.graph.n() % 2 == 1) {
    step = n1 % 2 == 0 ? "odd-residual-even-layer" : "odd-residual-odd-layer";
    residual_side = lift_assignment(balanced_halves(residual.graph.n()), residual.map);
  } else {
    step = "layer-residual";
    residual_side = lift_assignment(stability_split(residual.graph, &inner), residual.map);
  }

  std::vector<int> assign;
  if (extend_balanced(n1, peel.residual_vertices, residual_side, assign) &&
      target <= h.crossing_weight(assign)) {
    trail = inner.empty() ? step : step + ">" + inner;
    return assign;
  }

  // The residual split could not be aligned with a balanced split of the
  // layer. A balanced split of the whole graph is then enough when n1 is
  // even or w >= C(n1 + 1, 2); otherwise the residual carries fewer than n1
  // units of weight and any balanced residual split beating w'/2 suffices.
  if (n1 % 2 == 0 || 2 * w >= std::int64_t(n1) * (n1 + 1)) {
    trail = step + ">expectation";
    assign = derandomized_balanced_assignment(h, 2);
  } else {
    trail = step + ">residual-expectation";
    auto side = derandomized_balanced_assignment(peel.residual, 2);
    extend_balanced(n1, peel.residual_vertices, side, assign);
  }
  if (target > h.crossing_weight(assign))
    fail(ErrorCode::falsified, "stability_split fell below m/2 + h(m)/4 + 1/4");
  return assign;
}

CutResult f2_stability_cut(const Graph& g) {
  require(!is_odd_complete_modulo_isolated(g),
          "f2_stability_cut: graph is a complete graph of odd order (modulo isolated vertices)");
  StrippedGraph core = strip_isolated(g);
  Contraction c = contract(core.graph);
  CutResult out;
  // The greedy order can collapse a graph that is not an odd clique (P4,
  // for one) onto a unit odd clique, whose cuts are too small. Another first
  // merge avoids that.
  auto odd_unit = [](const Contraction& x) { return x.graph.is_unit() && x.graph.n() % 2 == 1; };
  std::string prefix;
  for (int u = 0; u < core.graph.n() && odd_unit(c); ++u)
    for (int v = u + 1; v < core.graph.n() && odd_unit(c); ++v)
      if (!core.graph.adjacent(u, v)) {
        c = contract_merging_first(core.graph, u, v);
        prefix = "recontracted>";
      }
  if (odd_unit(c))
    fail(ErrorCode::falsified, "f2_stability_cut: every contraction is a unit odd clique");
  auto classes = stability_split(c.graph, &out.branch);
  out.branch = prefix + out.branch;
  auto core_assign = lift_assignment(classes, c.map);

  std::vector<int> assign(static_cast<std::size_t>(g.n()), 0);
  int count[2] = {0, 0};
  for (std::size_t i = 0; i < core.original.size(); ++i) {
    assign[core.original[i]] = core_assign[i];
    ++count[core_assign[i]];
  }
  for (int v : core.isolated) {
    int side = count[1] < count[0] ? 1 : 0;
    assign[v] = side;
    ++count[side];
  }
  out.partition = Partition(g, 2, std::move(assign));
  out.achieved = out.partition.crossing();
  out.guarantee = stability_cut_bound(g.m());
  out.class_balanced = true;
  return out;
}

}  // namespace jp
