#pragma once

#include <cstdint>

#include "judicious/exact.hpp"
#include "judicious/partition.hpp"

namespace jp {

// Every bound below is returned exactly as  a + b*sqrt(8m + 1)  so that it
// can be compared against integer edge counts without rounding. Use
// .to_double() for display.

/// h(m) = sqrt(2m + 1/4) - 1/2, the positive root of h^2 + h = 2m.
RootValue h_exact(std::int64_t m);
double h(std::int64_t m);

/// Edwards: m/2 + h(m)/4.
RootValue edwards_bound(std::int64_t m);

/// (k-1)m/k + (k-1)h(m)/(2k) - (k-2)^2/(8k).
RootValue max_k_cut_bound(std::int64_t m, int k);

/// m/k^2 + (k-1)h(m)/(2k^2): the per-part internal edge bound.
RootValue min_max_part_bound(std::int64_t m, int k);

/// 2m/3 + h(m)/3.
RootValue f3_target(std::int64_t m);

/// m/2 + h(m)/4 + 1/4, the improved 2-cut for graphs that are not odd cliques.
RootValue stability_cut_bound(std::int64_t m);

/// (k-1)m/k + (k-1)h(m)/(2k) + (k-1)/(2k) - floor(k/2)ceil(k/2)/(2k):
/// the cut every graph attains with a balanced k-partition.
RootValue balanced_cut_bound(std::int64_t m, int k);

/// Maximum k-cut of K_n evaluated through the closed form with n = kr + s.
/// The form is exact for s = 0 as well.
std::int64_t fk_complete(int n, int k);

/// Cut of a balanced k-partition of K_n counted directly.
std::int64_t balanced_complete_cut(int n, int k);

struct BoundSet {
  RootValue edwards;
  RootValue max_k_cut;
  RootValue min_max_part;
  RootValue f3_target;
  RootValue stability_cut;
};
BoundSet bound_set(std::int64_t m, int k);

/// Numeric check of the Xu-Yu inequality with m' = (k-1)^2 m / k^2 + q:
///   m'/(k-1)^2 + (k-2)h(m')/(2(k-1)^2) <= m/k^2 + (k-1)h(m)/(2k^2).
/// Requires k >= 3; q is expected in [0, (k-1)h(m)/(2k^2)].
bool xu_yu_check(double m, int k, double q);

/// 12 e(V_i) + 3 sum_{j != i} e(V_j) <= 2m for every part (k = 3 only).
bool corollary_c3_check(const Partition& p, std::int64_t m);

}  // namespace jp
