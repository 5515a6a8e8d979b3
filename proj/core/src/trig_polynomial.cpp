#include "framelet/trig_polynomial.hpp"

#include <cmath>
#include <numbers>

namespace framelet {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::int64_t mod_positive(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}
}  // namespace

TrigPolynomial& TrigPolynomial::set(IntVec k, cdouble c) {
  require(k.size() == static_cast<std::size_t>(n_), errc::dimension_mismatch,
          "frequency vector dimension");
  if (c == cdouble{0.0, 0.0}) {
    coeffs_.erase(k);
  } else {
    coeffs_[std::move(k)] = c;
  }
  return *this;
}

cdouble TrigPolynomial::coeff(const IntVec& k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? cdouble{0.0, 0.0} : it->second;
}

cdouble TrigPolynomial::eval(std::span<const double> t) const {
  require(t.size() == static_cast<std::size_t>(n_), errc::dimension_mismatch,
          "evaluation point dimension");
  cdouble acc{0.0, 0.0};
  for (const auto& [k, c] : coeffs_) {
    double phase = 0.0;
    for (int i = 0; i < n_; ++i) {
      // Reduce per component so k·t never grows past the double's exact
      // integer range even for large arguments.
      const double ti = t[i] - std::floor(t[i]);
      phase += static_cast<double>(k[i]) * ti;
    }
    phase -= std::floor(phase);
    acc += c * std::polar(1.0, -kTwoPi * phase);
  }
  return acc;
}

cdouble TrigPolynomial::eval(const RatVec& t) const {
  require(t.size() == static_cast<std::size_t>(n_), errc::dimension_mismatch,
          "evaluation point dimension");
  cdouble acc{0.0, 0.0};
  for (const auto& [k, c] : coeffs_) {
    Rational phase(0);
    for (int i = 0; i < n_; ++i) phase += Rational(k[i]) * t[i];
    acc += c * std::polar(1.0, -kTwoPi * phase.frac().to_double());
  }
  return acc;
}

cdouble TrigPolynomial::eval_grid(std::span<const std::int64_t> idx, std::int64_t m) const {
  require(idx.size() == static_cast<std::size_t>(n_), errc::dimension_mismatch,
          "grid index dimension");
  cdouble acc{0.0, 0.0};
  for (const auto& [k, c] : coeffs_) {
    __int128 dot = 0;
    for (int i = 0; i < n_; ++i) dot += static_cast<__int128>(k[i]) * idx[i];
    const auto num = static_cast<std::int64_t>(dot % m);
    const double phase = static_cast<double>(mod_positive(num, m)) / static_cast<double>(m);
    acc += c * std::polar(1.0, -kTwoPi * phase);
  }
  return acc;
}

double TrigPolynomial::sup_bound() const {
  double s = 0.0;
  for (const auto& [k, c] : coeffs_) s += std::abs(c);
  return s;
}

TrigPolynomial TrigPolynomial::constant(int dim, cdouble c) {
  TrigPolynomial p(dim);
  p.set(IntVec(dim, 0), c);
  return p;
}

}  // namespace framelet
