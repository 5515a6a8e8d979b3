#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "framelet/trig_polynomial.hpp"

namespace framelet {

/// Uniform product grid (Z/m)^n on the torus: the points idx/m with
/// idx in {0..m-1}^n.
struct GridSpec {
  int dim = 1;
  std::int64_t m = 4096;

  std::size_t point_count() const;
  /// Advances a row-major odometer over {0..m-1}^n; false after the last.
  bool next(IntVec& idx) const;
  RealVec point(std::span<const std::int64_t> idx) const;
  std::size_t flat_index(std::span<const std::int64_t> idx) const;  // indices reduced mod m
};

/// A periodic filter: either an exact trigonometric polynomial or values
/// sampled on a uniform grid.  Grid-sampled filters arise from the PSD
/// square-root completion and the OEP reduction, whose square roots
/// leave the trig-polynomial class; they are evaluable only at rational
/// points that land on their grid.
class Filter {
 public:
  Filter(TrigPolynomial p);  // intentionally implicit
  static Filter grid(int dim, std::int64_t m, std::vector<cdouble> values_row_major);

  int dim() const { return dim_; }
  bool is_trig() const { return is_trig_; }
  std::int64_t grid_m() const { return grid_.m; }
  const TrigPolynomial& trig() const;
  const std::vector<cdouble>& grid_values() const { return values_; }

  /// Arbitrary-point evaluation; grid-sampled filters throw
  /// errc::eval_off_grid.
  cdouble eval(std::span<const double> t) const;
  /// Value at idx/m.  Trig filters evaluate exactly; grid filters
  /// require idx/m to land on their own grid.
  cdouble eval_grid(std::span<const std::int64_t> idx, std::int64_t m) const;
  cdouble eval(const RatVec& t) const;

 private:
  Filter() = default;

  bool is_trig_ = true;
  int dim_ = 1;
  TrigPolynomial poly_{1};
  GridSpec grid_;
  std::vector<cdouble> values_;
};

}  // namespace framelet
