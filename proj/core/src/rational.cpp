#include "framelet/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

namespace framelet {

namespace {

using i128 = __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

std::int64_t narrow(i128 v, const char* op) {
  if (v > i128(kMax) || v < -i128(kMax)) fail(errc::overflow, std::string("rational ") + op);
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

Rational make(i128 num, i128 den, const char* op) {
  if (den == 0) fail(errc::overflow, "rational division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational(narrow(num, op), narrow(den, op));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  require(den != 0, errc::overflow, "rational with zero denominator");
  constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
  require(num != kMin && den != kMin, errc::overflow, "rational magnitude");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

Rational operator+(const Rational& a, const Rational& b) {
  return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_, "add");
}

Rational operator-(const Rational& a, const Rational& b) {
  return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_, "sub");
}

Rational operator*(const Rational& a, const Rational& b) {
  return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_, "mul");
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) fail(errc::overflow, "rational division by zero");
  return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_, "div");
}

bool operator<(const Rational& a, const Rational& b) {
  return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(std::stoll(text));
    }
    const std::int64_t n = std::stoll(text.substr(0, slash));
    const std::int64_t d = std::stoll(text.substr(slash + 1));
    require(d != 0, errc::parse_error, "rational with zero denominator: " + text);
    return Rational(n, d);
  } catch (const std::logic_error&) {
    fail(errc::parse_error, "not a rational: '" + text + "'");
  }
}

Rational Rational::from_double(double x) {
  require(std::isfinite(x), errc::overflow, "non-finite double");
  if (x == 0.0) return Rational(0);
  int e = 0;
  const double m = std::frexp(x, &e);  // x = m * 2^e, |m| in [1/2, 1)
  const double scaled = std::ldexp(m, 53);
  auto mant = static_cast<std::int64_t>(scaled);  // exact: 53-bit mantissa
  int exp2 = e - 53;
  while (mant != 0 && mant % 2 == 0) {
    mant /= 2;
    ++exp2;
  }
  if (exp2 >= 0) {
    require(exp2 < 63, errc::overflow, "double too large for rational");
    i128 v = i128(mant) << exp2;
    return make(v, 1, "from_double");
  }
  require(exp2 > -63, errc::overflow, "double too small for exact rational");
  return Rational(mant, std::int64_t(1) << (-exp2));
}

Rational Rational::pow2(int e) {
  require(e >= -62 && e <= 62, errc::overflow, "2^e out of range");
  if (e >= 0) return Rational(std::int64_t(1) << e);
  return Rational(1, std::int64_t(1) << (-e));
}

}  // namespace framelet
