#pragma once

#include <vector>

#include "framelet/refinable.hpp"

namespace framelet {

struct BracketValue {
  double value;          // lattice sum truncated at radius K
  double tail_estimate;  // increment when the radius doubles
};

/// Truncated bracket product [φ̂,φ̂](t) = Σ_{|k|∞ ≤ K} |φ̂(t+k)|² with a
/// doubling-based tail estimate; throws errc::non_convergent when the
/// tail fails the relative tolerance.
BracketValue bracket_product(const PhiHat& phi, std::span<const double> t, int radius,
                             double rel_tol = 1e-6);

/// Fixed-radius bracket evaluator (the hot path: no per-point doubling).
class Bracket {
 public:
  Bracket(PhiHat phi, int radius);

  double eval(std::span<const double> t) const;
  const PhiHat& source() const { return phi_; }
  int radius() const { return radius_; }

 private:
  PhiHat phi_;
  int radius_;
};

/// Numerical zero set N_φ̂ = {t : [φ̂,φ̂](t) = 0} over a grid; `excluded`
/// is true where the bracket falls below tau_zero times the grid
/// maximum (everywhere when the bracket vanishes identically).  All
/// verification conditions restrict to non-excluded points.
class ZeroSetMask {
 public:
  static ZeroSetMask compute(const Bracket& bracket, GridSpec grid, double tau_zero);
  static ZeroSetMask none(GridSpec grid);

  bool excluded(std::span<const std::int64_t> idx) const;
  double excluded_fraction() const;
  const GridSpec& grid() const { return grid_; }
  double max_bracket() const { return max_value_; }

 private:
  GridSpec grid_;
  std::vector<std::uint8_t> excluded_;
  double max_value_ = 0.0;
};

/// φ̂ / [φ̂,φ̂]^{1/2} with the global 0/0 = 0 convention.  The bracket of
/// the result is (within truncation error) the indicator of the
/// complement of N_φ̂.
class NormalizedPhiHat {
 public:
  NormalizedPhiHat(PhiHat phi, Bracket bracket);

  cdouble eval(std::span<const double> t) const;
  double eval_modulus_sq(std::span<const double> t) const;

 private:
  PhiHat phi_;
  Bracket bracket_;
};

NormalizedPhiHat normalize_scaling(const PhiHat& phi, const Bracket& bracket);

}  // namespace framelet
