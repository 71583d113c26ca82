#include "judicious/local_search.hpp"

#include <algorithm>
#include <string>

#include "judicious/bounds.hpp"
#include "judicious/cut_construct.hpp"
#include "judicious/error.hpp"

namespace jp {

namespace {

// Calls visit(subset) for every subset of `pool` of the given size in
// lexicographic order of positions; stops early when visit returns true.
template <class Visit>
bool for_each_subset(const std::vector<int>& pool, int size, std::vector<int>& subset,
                     Visit&& visit) {
  const int n = static_cast<int>(pool.size());
  if (size > n || size <= 0) return false;
  std::vector<int> idx(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) idx[i] = i;
  subset.resize(static_cast<std::size_t>(size));
  while (true) {
    for (int i = 0; i < size; ++i) subset[i] = pool[idx[i]];
    if (visit(subset)) return true;
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct Change {
  int v, from, to;
};

// Neighbour-count table for fast move evaluation.
class Engine {
 public:
  Engine(const Graph& g, const Partition& p) : g_(g), p_(p), k_(p.k()) {
    cnt_.assign(static_cast<std::size_t>(g.n()) * k_, 0);
    for (int v = 0; v < g.n(); ++v)
      for (int w : g.neighbors(v)) ++cnt(v, p.part_of(w));
    key_ = p.lex_key();
    delta_.assign(static_cast<std::size_t>(k_), 0);
    scratch_.resize(static_cast<std::size_t>(k_));
  }

  const Partition& partition() const { return p_; }
  const LexKey& key() const { return key_; }

  int& cnt(int v, int part) { return cnt_[static_cast<std::size_t>(v) * k_ + part]; }
  int cnt(int v, int part) const { return cnt_[static_cast<std::size_t>(v) * k_ + part]; }

  // Evaluates the change set; true if it is improving under the policy.
  bool improving(const std::vector<Change>& changes, bool need_cut) {
    std::fill(delta_.begin(), delta_.end(), 0);
    for (const auto& c : changes) {
      delta_[c.from] -= cnt(c.v, c.from);
      delta_[c.to] += cnt(c.v, c.to);
    }
    for (std::size_t a = 0; a < changes.size(); ++a)
      for (std::size_t b = a + 1; b < changes.size(); ++b) {
        const auto& u = changes[a];
        const auto& v = changes[b];
        if (!g_.adjacent(u.v, v.v)) continue;
        if (u.from == v.from) delta_[u.from] += 1;
        if (v.from == u.to) delta_[u.to] -= 1;
        if (u.from == v.to) delta_[v.to] -= 1;
        if (u.to == v.to) delta_[u.to] += 1;
      }
    std::int64_t total = 0;
    for (int p = 0; p < k_; ++p) {
      scratch_[p] = p_.internal(p) + delta_[p];
      total += delta_[p];
    }
    if (need_cut && total > 0) return false;  // internal edges up = crossing down
    std::sort(scratch_.begin(), scratch_.end(), std::greater<>());
    return std::lexicographical_compare(scratch_.begin(), scratch_.end(), key_.sorted.begin(),
                                        key_.sorted.end());
  }

  void apply(const Move& mv) {
    for (const auto& step : mv.steps)
      for (int v : step.vertices) {
        for (int w : g_.neighbors(v)) {
          --cnt(w, step.from);
          ++cnt(w, step.to);
        }
        p_.move_vertex(g_, v, step.to);
      }
    key_ = p_.lex_key();
  }

  std::optional<Move> find(const DescentPolicy& policy) {
    const int s = std::max(1, policy.max_set_size);
    const bool need_cut = policy.require_cut_nondecreasing;
    auto members = p_.parts();
    std::vector<Change> changes;
    std::vector<int> xs, ys;

    // Vertices with an edge inside their own part; moving anything else
    // alone cannot lower an internal count.
    std::vector<std::vector<int>> active(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i)
      for (int v : members[i])
        if (cnt(v, i) > 0) active[i].push_back(v);

    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < k_; ++j) {
        if (i == j) continue;
        for (int size = 1; size <= s; ++size) {
          std::optional<Move> found;
          for_each_subset(active[i], size, xs, [&](const std::vector<int>& x) {
            changes.clear();
            for (int v : x) changes.push_back({v, i, j});
            if (!improving(changes, need_cut)) return false;
            found = Move{MoveKind::relocate, {MoveStep{x, i, j}}};
            return true;
          });
          if (found) return found;
        }
      }

    if (policy.allow_exchange)
      for (int i = 0; i < k_; ++i)
        for (int j = i + 1; j < k_; ++j) {
          std::vector<int> pool_i, pool_j;
          for (int v : members[i])
            if (cnt(v, i) > 0 || cnt(v, j) > 0) pool_i.push_back(v);
          for (int v : members[j])
            if (cnt(v, j) > 0 || cnt(v, i) > 0) pool_j.push_back(v);
          const int cap = std::min(2 * s, std::max(2, policy.max_exchange_total));
          for (int total = 2; total <= cap; ++total)
            for (int sx = std::max(1, total - s); sx <= std::min(s, total - 1); ++sx) {
              const int sy = total - sx;
              std::optional<Move> found;
              for_each_subset(pool_i, sx, xs, [&](const std::vector<int>& x) {
                return for_each_subset(pool_j, sy, ys, [&](const std::vector<int>& y) {
                  changes.clear();
                  for (int v : x) changes.push_back({v, i, j});
                  for (int v : y) changes.push_back({v, j, i});
                  if (!improving(changes, need_cut)) return false;
                  found = Move{MoveKind::exchange, {MoveStep{x, i, j}, MoveStep{y, j, i}}};
                  return true;
                });
              });
              if (found) return found;
            }
        }

    if (policy.allow_chain && k_ >= 3)
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j)
          for (int l = 0; l < k_; ++l) {
            if (i == j || j == l || i == l) continue;
            for (int sx = 1; sx <= s; ++sx) {
              std::optional<Move> found;
              for_each_subset(active[i], sx, xs, [&](const std::vector<int>& x) {
                std::vector<int> pool;
                for (int v : x)
                  for (int w : g_.neighbors(v))
                    if (p_.part_of(w) == j) pool.push_back(w);
                std::sort(pool.begin(), pool.end());
                pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
                for (int sy = 1; sy <= s; ++sy) {
                  bool hit = for_each_subset(pool, sy, ys, [&](const std::vector<int>& y) {
                    changes.clear();
                    for (int v : x) changes.push_back({v, i, j});
                    for (int v : y) changes.push_back({v, j, l});
                    if (!improving(changes, need_cut)) return false;
                    found = Move{MoveKind::chain, {MoveStep{x, i, j}, MoveStep{y, j, l}}};
                    return true;
                  });
                  if (hit) return true;
                }
                return false;
              });
              if (found) return found;
            }
          }
    return std::nullopt;
  }

 private:
  const Graph& g_;
  Partition p_;
  int k_;
  std::vector<int> cnt_;
  LexKey key_;
  std::vector<std::int64_t> delta_;
  std::vector<std::int64_t> scratch_;
};

void validate_move(const Graph& g, const Partition& p, const Move& mv) {
  require(!mv.steps.empty() && mv.steps.size() <= 2, "move must have one or two steps");
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (const auto& step : mv.steps) {
    require(step.from >= 0 && step.from < p.k() && step.to >= 0 && step.to < p.k(),
            "move: part index out of range");
    require(step.from != step.to, "move: source and destination coincide");
    require(!step.vertices.empty(), "move: empty vertex set");
    for (int v : step.vertices) {
      require(v >= 0 && v < g.n(), "move: vertex out of range");
      require(!seen[v], "move: vertex sets overlap");
      seen[v] = 1;
      require(p.part_of(v) == step.from,
              "move: vertex " + std::to_string(v) + " is not in part " + std::to_string(step.from));
    }
  }
  if (mv.steps.size() == 2)
    require(mv.steps[1].from == mv.steps[0].to, "move: second step must leave the first target");
  switch (mv.kind) {
    case MoveKind::relocate:
      require(mv.steps.size() == 1, "relocate move has exactly one step");
      break;
    case MoveKind::exchange:
      require(mv.steps.size() == 2 && mv.steps[1].to == mv.steps[0].from,
              "exchange move must swap sets between two parts");
      break;
    case MoveKind::chain:
      require(mv.steps.size() == 2 && mv.steps[1].to != mv.steps[0].from,
              "chain move must end in a third part");
      break;
  }
}

}  // namespace

Partition apply_move(const Graph& g, const Partition& p, const Move& mv) {
  validate_move(g, p, mv);
  Partition out = p;
  for (const auto& step : mv.steps)
    for (int v : step.vertices) out.move_vertex(g, v, step.to);
  return out;
}

std::optional<Move> find_improving_move(const Graph& g, const Partition& p,
                                        const DescentPolicy& policy) {
  require(p.num_vertices() == g.n(), "partition does not cover the graph");
  Engine engine(g, p);
  return engine.find(policy);
}

Partition lex_descent(const Graph& g, Partition p, const DescentPolicy& policy,
                      const DescentMonitor& monitor) {
  require(p.num_vertices() == g.n(), "partition does not cover the graph");
  Engine engine(g, p);
  while (auto mv = engine.find(policy)) {
    LexKey before = engine.key();
    std::int64_t crossing_before = engine.partition().crossing();
    engine.apply(*mv);
    if (monitor) monitor(*mv, before, engine.key(), crossing_before, engine.partition().crossing());
  }
  return engine.partition();
}

bool lemma316_holds(const Graph& g, const Partition& p) {
  const int k = p.k();
  std::vector<int> count(static_cast<std::size_t>(k));
  for (int v = 0; v < g.n(); ++v) {
    std::fill(count.begin(), count.end(), 0);
    for (int w : g.neighbors(v)) ++count[p.part_of(w)];
    const int i = p.part_of(v);
    const int d = count[i];
    if (d == 0) continue;
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      if (count[j] < 1) return false;
      if (d >= 2 && p.internal(i) > p.internal(j) && count[j] < 2) return false;
      if (p.internal(i) > p.internal(j) + 1 && count[j] < 2) return false;
    }
  }
  return true;
}

Partition greedy_property_q(const Graph& g, Partition p) {
  require(p.num_vertices() == g.n(), "partition does not cover the graph");
  Engine engine(g, p);
  const int k = p.k();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int v = 0; v < g.n(); ++v) {
      const int i = engine.partition().part_of(v);
      int best = i;
      for (int j = 0; j < k; ++j)
        if (engine.cnt(v, j) < engine.cnt(v, best)) best = j;
      if (best == i) continue;
      engine.apply(Move{MoveKind::relocate, {MoveStep{{v}, i, best}}});
      moved = true;
    }
  }
  return engine.partition();
}

Partition settle(const Graph& g, Partition p, const DescentPolicy& policy) {
  while (true) {
    Partition q = greedy_property_q(g, p);
    q = lex_descent(g, std::move(q), policy);
    if (q == p) break;
    p = std::move(q);
  }
  p.sort_parts_by_internal();
  return p;
}

Partition good_partition(const Graph& g, int k) {
  require(k >= 2, "good_partition needs k >= 2");
  Partition seed = (k == 2 && !is_odd_complete_modulo_isolated(g))
                       ? f2_stability_cut(g).partition
                       : balanced_kcut(g, k).partition;
  Partition p = greedy_property_q(g, std::move(seed));
  p.sort_parts_by_internal();
  return p;
}

}  // namespace jp
