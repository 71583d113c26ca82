#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace jp {

/// Exact rational with 64-bit numerator/denominator, always normalized
/// (den > 0, gcd(num, den) == 1). Intermediate products use __int128.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  int sign() const { return (num_ > 0) - (num_ < 0); }
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// A real number of the form  rational + coeff * sqrt(radicand)  with an
/// integer radicand >= 0. Every bound in this library has this shape with
/// radicand 8m + 1, since h(m) = (sqrt(8m + 1) - 1) / 2.
///
/// Comparisons are exact; two values can only be compared when they share a
/// radicand (or one of them has a zero root coefficient).
class RootValue {
 public:
  RootValue() = default;
  RootValue(Rational rational, Rational coeff, std::int64_t radicand);
  static RootValue constant(Rational r) { return RootValue(r, Rational(0), 0); }

  const Rational& rational() const { return rational_; }
  const Rational& coeff() const { return coeff_; }
  std::int64_t radicand() const { return radicand_; }

  double to_double() const;
  std::string str() const;

  /// Sign of the value: -1, 0 or +1.
  int sign() const;

  friend RootValue operator+(const RootValue& a, const RootValue& b);
  friend RootValue operator-(const RootValue& a, const RootValue& b);
  friend RootValue operator*(const Rational& s, const RootValue& v);
  RootValue operator-() const { return RootValue(-rational_, -coeff_, radicand_); }

  friend bool operator==(const RootValue& a, const RootValue& b) { return (a - b).sign() == 0; }
  friend std::strong_ordering operator<=>(const RootValue& a, const RootValue& b);

  friend bool operator==(const RootValue& a, std::int64_t b) { return a == constant(Rational(b)); }
  friend std::strong_ordering operator<=>(const RootValue& a, std::int64_t b) {
    return a <=> constant(Rational(b));
  }

 private:
  Rational rational_;
  Rational coeff_;
  std::int64_t radicand_ = 0;
};

/// Integer square root: largest r with r*r <= v.
std::int64_t isqrt(std::int64_t v);

}  // namespace jp
