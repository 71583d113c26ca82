#include "judicious/bounds.hpp"

#include <cmath>

#include "judicious/error.hpp"

namespace jp {

namespace {

std::int64_t radicand(std::int64_t m) {
  require(m >= 0, "edge count must be non-negative");
  return 8 * m + 1;
}

// c0 + c1 * m + c2 * h(m)
RootValue affine(std::int64_t m, Rational c0, Rational c1, Rational c2) {
  return RootValue::constant(c0 + c1 * Rational(m)) + c2 * h_exact(m);
}

void require_k(int k) { require(k >= 2, "part count k must be at least 2"); }

}  // namespace

RootValue h_exact(std::int64_t m) {
  return RootValue(Rational(-1, 2), Rational(1, 2), radicand(m));
}

double h(std::int64_t m) { return std::sqrt(2.0 * static_cast<double>(m) + 0.25) - 0.5; }

RootValue edwards_bound(std::int64_t m) {
  return affine(m, Rational(0), Rational(1, 2), Rational(1, 4));
}

RootValue max_k_cut_bound(std::int64_t m, int k) {
  require_k(k);
  return affine(m, Rational(-std::int64_t(k - 2) * (k - 2), 8 * k), Rational(k - 1, k),
                Rational(k - 1, 2 * k));
}

RootValue min_max_part_bound(std::int64_t m, int k) {
  require_k(k);
  return affine(m, Rational(0), Rational(1, std::int64_t(k) * k),
                Rational(k - 1, 2 * std::int64_t(k) * k));
}

RootValue f3_target(std::int64_t m) {
  return affine(m, Rational(0), Rational(2, 3), Rational(1, 3));
}

RootValue stability_cut_bound(std::int64_t m) {
  return affine(m, Rational(1, 4), Rational(1, 2), Rational(1, 4));
}

RootValue balanced_cut_bound(std::int64_t m, int k) {
  require_k(k);
  std::int64_t lo = k / 2, hi = k - k / 2;
  Rational c0 = Rational(k - 1, 2 * k) - Rational(lo * hi, 2 * k);
  return affine(m, c0, Rational(k - 1, k), Rational(k - 1, 2 * k));
}

std::int64_t fk_complete(int n, int k) {
  require_k(k);
  require(n >= 1, "fk_complete needs n >= 1");
  int s = n % k;
  std::int64_t m = std::int64_t(n) * (n - 1) / 2;
  RootValue value = affine(m, Rational(k - 1, 2 * k) - Rational(std::int64_t(s) * (k - s), 2 * k),
                           Rational(k - 1, k), Rational(k - 1, 2 * k));
  // 8 C(n,2) + 1 = (2n - 1)^2, so the value is rational; it must be integral.
  if (value.coeff().sign() != 0 || value.rational().den() != 1)
    fail(ErrorCode::falsified, "fk_complete: closed form is not an integer");
  return value.rational().num();
}

std::int64_t balanced_complete_cut(int n, int k) {
  require_k(k);
  require(n >= 0, "balanced_complete_cut needs n >= 0");
  std::int64_t r = n / k, s = n % k;
  auto pairs = [](std::int64_t x) { return x * (x - 1) / 2; };
  return pairs(n) - s * pairs(r + 1) - (k - s) * pairs(r);
}

BoundSet bound_set(std::int64_t m, int k) {
  return BoundSet{edwards_bound(m), max_k_cut_bound(m, k), min_max_part_bound(m, k),
                  f3_target(m), stability_cut_bound(m)};
}

bool xu_yu_check(double m, int k, double q) {
  require(k >= 3, "xu_yu_check needs k >= 3");
  require(m >= 0, "xu_yu_check needs m >= 0");
  auto hf = [](double x) { return std::sqrt(2.0 * x + 0.25) - 0.5; };
  double kk = k, k1 = k - 1.0;
  double mp = k1 * k1 * m / (kk * kk) + q;
  double lhs = mp / (k1 * k1) + (kk - 2.0) * hf(mp) / (2.0 * k1 * k1);
  double rhs = m / (kk * kk) + k1 * hf(m) / (2.0 * kk * kk);
  return lhs <= rhs + 1e-12 * std::max(1.0, std::abs(rhs));
}

bool corollary_c3_check(const Partition& p, std::int64_t m) {
  require(p.k() == 3, "corollary_c3_check applies to 3-partitions only");
  std::int64_t total = 0;
  for (auto e : p.internal_counts()) total += e;
  for (auto e : p.internal_counts())
    if (12 * e + 3 * (total - e) > 2 * m) return false;
  return true;
}

}  // namespace jp
