#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "judicious/exact.hpp"
#include "judicious/graph.hpp"
#include "judicious/partition.hpp"

namespace jp {

/// Which family of inequalities a certificate checks.
enum class Theorem {
  t13,  // 3-partition: max e(V_i) <= m/9 + h/9, crossing >= 2m/3 + h/3
  t14,  // 2-partition: max e(V_i) <= m/4 + h/8, crossing >= m/2 + h/4 (+1/4)
  t15,  // k-partition, m < 2k^2: per-part bound and max k-cut bound
  c17,  // 3-partition: 12 e(V_i) + 3 sum_{j != i} e(V_j) <= 2m
};

std::string theorem_name(Theorem t);
/// Parses "t13", "t14", "t15" or "c17"; throws on anything else.
Theorem parse_theorem(const std::string& s);

enum class Branch {
  none,  // produced by verify_judicious on a caller-supplied partition
  odd_complete,
  direct_good,
  moved_v0,
  moved_v1,
  small_m_case1,
  small_m_case2,
  small_m_case3,
};

std::string branch_name(Branch b);

struct BoundCheck {
  std::string name;
  RootValue required;
  std::int64_t achieved = 0;
  bool upper = true;  // achieved <= required when true, >= otherwise
  bool pass = false;
  bool tight = false;  // achieved == required exactly
};

struct JudiciousCertificate {
  Theorem theorem = Theorem::t13;
  Branch branch = Branch::none;
  int k = 0;
  std::int64_t m = 0;
  std::vector<BoundCheck> bounds;
  bool empty_parts = false;

  // Loop data (3-partition with m >= 18, 2-partition outside odd cliques).
  std::optional<Rational> beta1;  // e(V_1) - m/k^2 of the last tested partition
  int d0 = 0;                     // minimum nonzero degree in G[V_1]
  int d1 = 0;                     // second-minimum nonzero degree in G[V_1]
  std::optional<double> a, b;     // x-range endpoints for the moved-v0 candidate
  std::optional<double> g_a, g_b;
  std::optional<double> c;        // 1/4 unless the complement of W_1 is an odd clique
  std::vector<LexKey> restart_keys;

  std::string detail;  // sub-construction trail, e.g. the seed cut's branch
  std::vector<std::string> diagnostics;

  bool all_pass() const;
};

struct JudiciousResult {
  Partition partition;
  JudiciousCertificate certificate;
};

/// g(x) = x/2 - 2m/9 - (beta1 - d0)/2 - sqrt(2m + 1/4)/3
///        + sqrt(2(8m/9 - beta1 + d0 - x) + 1/4)/4 + 1/24 + c.
/// Throws when the inner radicand is negative.
double g_certificate(double x, double m, double beta1, double d0, double c);

struct PsiReport {
  bool concave = true;
  bool at_b = true;              // psi(8m/9 - beta1 + d) >= 0
  bool at_a_large_beta = true;   // psi(4m/9 + 4beta1 - d) >= 0 when beta1 >= h/9 + 1/2
  bool at_a_plus_one = true;     // psi(4m/9 + 4beta1 - d + 1) >= 0
  bool at_a_large_c = true;      // psi(4m/9 + 4beta1 - d) >= 0 when c >= 1/4
  // Whether each clause's side conditions held (clauses that do not apply
  // count as passing).
  bool b_applies = false, a_large_beta_applies = false, a_plus_one_applies = false,
       a_large_c_applies = false;

  bool holds() const { return concave && at_b && at_a_large_beta && at_a_plus_one && at_a_large_c; }
};

/// Evaluates the concavity and non-negativity clauses of psi at one point,
/// with tolerance 1e-9. Requires m >= 18, beta1 > h(m)/9, d >= 1, c >= 0.
PsiReport psi_clauses(std::int64_t m, double beta1, int d, double c);
bool psi_lemma_check(std::int64_t m, double beta1, int d, double c);

/// 2-partition with max e(V_i) <= m/4 + h/8 and crossing >= m/2 + h/4 + 1/4,
/// or the balanced split (crossing f_2(K_n)) when g minus isolated vertices
/// is a complete graph of odd order.
JudiciousResult judicious_2partition(const Graph& g);

/// 3-partition with max e(V_i) <= m/9 + h/9 and crossing >= 2m/3 + h/3.
JudiciousResult judicious_3partition(const Graph& g);

/// k-partition (k >= 3, m < 2k^2) with max e(V_i) <= m/k^2 + (k-1)h/(2k^2)
/// and crossing >= (k-1)m/k + (k-1)h/(2k) - (k-2)^2/(8k).
JudiciousResult judicious_k_small(const Graph& g, int k);

/// Recounts p from scratch and checks the inequalities of `theorem`.
/// t13 and c17 need k = 3, t14 needs k = 2, t15 needs k >= 3 and m < 2k^2.
JudiciousCertificate verify_judicious(const Graph& g, const Partition& p, Theorem theorem);

}  // namespace jp
