#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "framelet/errors.hpp"

namespace framelet {

/// Exact rational number with 64-bit numerator and denominator, kept
/// normalized (den > 0, gcd(num, den) = 1).  Arithmetic runs through
/// 128-bit intermediates and throws errc::overflow instead of wrapping,
/// so results are exact or loudly absent.
///
/// Used wherever the mathematics is exact and floating point would
/// introduce spurious residuals: coset representatives, grid shifts,
/// dyadic windows and the geometric series of the density counterexample.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // intentionally implicit
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator-() const { return Rational(-num_, den_); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  std::int64_t floor() const;
  /// Fractional part in [0, 1).
  Rational frac() const;

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  /// Parses "n" or "n/d" with optional sign.
  static Rational parse(const std::string& text);
  /// Exact conversion of a finite double (doubles are dyadic rationals);
  /// throws errc::overflow when the dyadic form does not fit in 64 bits.
  static Rational from_double(double x);
  /// 2^e for e in [-62, 62].
  static Rational pow2(int e);

 private:
  std::int64_t num_;
  std::int64_t den_;
};

using RatVec = std::vector<Rational>;

}  // namespace framelet
