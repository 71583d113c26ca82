#include "judicious/exact.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace jp {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational make(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num), narrow(den));
}

int sign128(i128 v) { return (v > 0) - (v < 0); }

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero rational");
  return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  i128 l = i128(a.num_) * b.den_;
  i128 r = i128(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::int64_t isqrt(std::int64_t v) {
  if (v < 0) throw std::domain_error("isqrt of negative value");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && i128(r) * r > v) --r;
  while (i128(r + 1) * (r + 1) <= v) ++r;
  return r;
}

RootValue::RootValue(Rational rational, Rational coeff, std::int64_t radicand)
    : rational_(rational), coeff_(coeff), radicand_(radicand) {
  if (radicand < 0) throw std::domain_error("negative radicand");
  if (radicand_ == 0) coeff_ = Rational(0);
  if (coeff_.sign() == 0) radicand_ = 0;
  // Fold perfect squares into the rational part.
  if (radicand_ > 0) {
    std::int64_t r = isqrt(radicand_);
    if (r * r == radicand_) {
      rational_ = rational_ + coeff_ * Rational(r);
      coeff_ = Rational(0);
      radicand_ = 0;
    }
  }
}

double RootValue::to_double() const {
  return rational_.to_double() + coeff_.to_double() * std::sqrt(static_cast<double>(radicand_));
}

std::string RootValue::str() const {
  if (coeff_.sign() == 0) return rational_.str();
  return rational_.str() + " + " + coeff_.str() + "*sqrt(" + std::to_string(radicand_) + ")";
}

int RootValue::sign() const {
  int a = rational_.sign();
  int b = coeff_.sign();
  if (b == 0) return a;
  if (a == 0) return b;
  if (a == b) return a;
  // Opposite signs: compare rational^2 against coeff^2 * radicand.
  // lhs = (an/ad)^2, rhs = (bn/bd)^2 * r  ->  an^2 bd^2  vs  bn^2 r ad^2
  i128 an = rational_.num(), ad = rational_.den();
  i128 bn = coeff_.num(), bd = coeff_.den();
  i128 lhs = an * an;
  i128 rhs = bn * bn;
  // Scale in two steps to keep magnitudes in range for the values used here.
  lhs *= bd * bd;
  rhs *= ad * ad;
  rhs *= radicand_;
  int cmp = sign128(lhs - rhs);  // >0 means |rational| dominates
  if (cmp == 0) return 0;
  return cmp > 0 ? a : b;
}

namespace {
void require_same_radicand(const RootValue& a, const RootValue& b) {
  if (a.radicand() != 0 && b.radicand() != 0 && a.radicand() != b.radicand())
    throw std::invalid_argument("RootValue arithmetic across different radicands");
}
}  // namespace

RootValue operator+(const RootValue& a, const RootValue& b) {
  require_same_radicand(a, b);
  return RootValue(a.rational_ + b.rational_, a.coeff_ + b.coeff_,
                   a.radicand_ != 0 ? a.radicand_ : b.radicand_);
}

RootValue operator-(const RootValue& a, const RootValue& b) { return a + (-b); }

RootValue operator*(const Rational& s, const RootValue& v) {
  return RootValue(s * v.rational_, s * v.coeff_, v.radicand_);
}

std::strong_ordering operator<=>(const RootValue& a, const RootValue& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace jp
