#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "judicious/graph.hpp"
#include "judicious/partition.hpp"

namespace jp {

enum class MoveKind {
  relocate,  // one set moves from one part to another
  exchange,  // X: i -> j together with Y: j -> i
  chain,     // X: i -> j together with Y ⊆ N(X) ∩ V_j: j -> l, l != i
};

struct MoveStep {
  std::vector<int> vertices;
  int from = 0;
  int to = 0;
};

/// Steps are applied in order; every vertex of a step must sit in `from`
/// before the move starts, and the steps' vertex sets are disjoint.
struct Move {
  MoveKind kind = MoveKind::relocate;
  std::vector<MoveStep> steps;
};

struct DescentPolicy {
  /// Judicious descent: moves may not lower the crossing count.
  bool require_cut_nondecreasing = false;
  int max_set_size = 3;
  /// Largest |X| + |Y| for an exchange; the proofs never need more than 5.
  int max_exchange_total = 5;
  bool allow_exchange = true;
  bool allow_chain = true;

  static DescentPolicy decreasing() { return {}; }
  static DescentPolicy judicious() {
    DescentPolicy p;
    p.require_cut_nondecreasing = true;
    return p;
  }
};

/// Throws jp::Error if the move is inconsistent with p.
Partition apply_move(const Graph& g, const Partition& p, const Move& mv);

/// Observes every accepted descent step.
using DescentMonitor = std::function<void(const Move& mv, const LexKey& before,
                                          const LexKey& after, std::int64_t crossing_before,
                                          std::int64_t crossing_after)>;

/// First improving move under `policy` in the canonical enumeration order:
/// relocations by (source, destination, set size, vertex indices), then
/// exchanges by part pair and total size, then chains.
std::optional<Move> find_improving_move(const Graph& g, const Partition& p,
                                        const DescentPolicy& policy);

/// Applies improving moves until none is left. Every accepted move strictly
/// lowers the lex key, so the loop terminates.
Partition lex_descent(const Graph& g, Partition p, const DescentPolicy& policy,
                      const DescentMonitor& monitor = {});

/// Local consequences of lex-minimality: for v in V_i with internal degree d
/// and every other part j:
///   d >= 1 implies v has a neighbour in V_j;
///   d >= 2 and e(V_i) > e(V_j) implies two neighbours in V_j;
///   d >= 1 and e(V_i) > e(V_j) + 1 implies two neighbours in V_j.
bool lemma316_holds(const Graph& g, const Partition& p);

/// Moves any vertex that has fewer neighbours in another part than in its
/// own part to the part where it has fewest neighbours, until none is left.
/// Every move raises the crossing count; the result has property Q on every
/// part.
Partition greedy_property_q(const Graph& g, Partition p);

/// Alternates greedy_property_q and lex_descent(policy) until neither moves
/// anything, then sorts parts by internal count. The result has property Q
/// on every part, is repertoire-locally lex-minimal, and its crossing count
/// is at least the input's.
Partition settle(const Graph& g, Partition p, const DescentPolicy& policy);

/// Crossing >= balanced_cut_bound(m, k), parts sorted by internal count and
/// property Q on every part. For k = 2 on graphs that are not odd cliques the
/// seed is the m/2 + h(m)/4 + 1/4 stability cut.
Partition good_partition(const Graph& g, int k);

}  // namespace jp
