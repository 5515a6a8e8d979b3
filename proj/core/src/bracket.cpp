#include "framelet/bracket.hpp"

#include <cmath>

namespace framelet {

namespace {

double lattice_sum(const PhiHat& phi, std::span<const double> t, int radius) {
  const int n = phi.dim();
  RealVec y(n);
  IntVec k(n, -radius);
  double sum = 0.0;
  while (true) {
    for (int i = 0; i < n; ++i) y[i] = t[i] + static_cast<double>(k[i]);
    const double a = phi.eval_modulus(y);
    sum += a * a;
    int i = 0;
    for (; i < n; ++i) {
      if (k[i] < radius) {
        ++k[i];
        break;
      }
      k[i] = -radius;
    }
    if (i == n) break;
  }
  return sum;
}

}  // namespace

BracketValue bracket_product(const PhiHat& phi, std::span<const double> t, int radius,
                             double rel_tol) {
  require(radius >= 1, errc::dimension_mismatch, "bracket radius must be >= 1");
  if (phi.has_closed_bracket()) return BracketValue{phi.closed_bracket(t), 0.0};
  const double s1 = lattice_sum(phi, t, radius);
  const double s2 = lattice_sum(phi, t, 2 * radius);
  const double tail = s2 - s1;  // terms are nonnegative
  if (tail > rel_tol * std::max(s2, 1e-300)) {
    fail(errc::non_convergent,
         "bracket tail " + std::to_string(tail) + " at radius " + std::to_string(radius));
  }
  return BracketValue{s1, tail};
}

Bracket::Bracket(PhiHat phi, int radius) : phi_(std::move(phi)), radius_(radius) {
  require(radius_ >= 1, errc::dimension_mismatch, "bracket radius must be >= 1");
}

double Bracket::eval(std::span<const double> t) const {
  if (phi_.has_closed_bracket()) return phi_.closed_bracket(t);
  return lattice_sum(phi_, t, radius_);
}

ZeroSetMask ZeroSetMask::compute(const Bracket& bracket, GridSpec grid, double tau_zero) {
  require(tau_zero > 0.0, errc::dimension_mismatch, "tau_zero must be positive");
  ZeroSetMask mask;
  mask.grid_ = grid;
  const std::size_t count = grid.point_count();
  std::vector<double> values(count);
  IntVec idx(grid.dim, 0);
  std::size_t flat = 0;
  do {
    values[flat++] = bracket.eval(grid.point(idx));
  } while (grid.next(idx));
  double max_v = 0.0;
  for (double v : values) max_v = std::max(max_v, v);
  mask.max_value_ = max_v;
  mask.excluded_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    mask.excluded_[i] = (max_v == 0.0) ? 1 : (values[i] < tau_zero * max_v ? 1 : 0);
  }
  return mask;
}

ZeroSetMask ZeroSetMask::none(GridSpec grid) {
  ZeroSetMask mask;
  mask.grid_ = grid;
  mask.excluded_.assign(grid.point_count(), 0);
  mask.max_value_ = 1.0;
  return mask;
}

bool ZeroSetMask::excluded(std::span<const std::int64_t> idx) const {
  return excluded_[grid_.flat_index(idx)] != 0;
}

double ZeroSetMask::excluded_fraction() const {
  std::size_t c = 0;
  for (auto v : excluded_) c += v;
  return static_cast<double>(c) / static_cast<double>(excluded_.size());
}

NormalizedPhiHat::NormalizedPhiHat(PhiHat phi, Bracket bracket)
    : phi_(std::move(phi)), bracket_(std::move(bracket)) {}

cdouble NormalizedPhiHat::eval(std::span<const double> t) const {
  const double b = bracket_.eval(t);
  if (b < 1e-300) return cdouble{0.0, 0.0};  // 0/0 = 0
  return phi_.eval(t) / std::sqrt(b);
}

double NormalizedPhiHat::eval_modulus_sq(std::span<const double> t) const {
  const double b = bracket_.eval(t);
  if (b < 1e-300) return 0.0;
  const double a = phi_.eval_modulus(t);
  return a * a / b;
}

NormalizedPhiHat normalize_scaling(const PhiHat& phi, const Bracket& bracket) {
  return NormalizedPhiHat(phi, bracket);
}

}  // namespace framelet
