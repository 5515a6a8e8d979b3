#pragma once

#include "framelet/bracket.hpp"
#include "framelet/density.hpp"

namespace framelet {

/// Monte Carlo probe parameters shared by the origin checks.
struct ProbeSpec {
  double radius = 1.0;
  std::vector<int> j_list = {1, 2, 3, 4, 5, 6, 7, 8};
  std::int64_t samples = 100000;
  std::uint64_t seed = 0x5eed2026ULL;
  double delta = 0.1;        // superlevel tolerance around the target
  double trend_tol = 0.02;   // closeness demanded of the final ratio
  double zero_tol = 1e-12;   // |φ̂| below this counts as zero
  int bracket_radius = 64;
  std::int64_t budget = 100000000;  // total samples across the curve
};

/// Origin admissibility report: (B) the zero fraction of φ̂ in the
/// shrinking cells (A^T)^{-j}B_r must tend to 0, and (C) the density of
/// the superlevel set {| |φ̂|²/[φ̂,φ̂] - 1| < δ} must tend to 1.
struct FmraReport {
  DensityCurve zero_fraction;       // condition (B)
  DensityCurve superlevel_density;  // condition (C)
  bool pass_zero = false;
  bool pass_superlevel = false;
  bool pass = false;
};

FmraReport fmra_check(const PhiHat& phi, const DilationMatrix& A, const ProbeSpec& probe);

/// Same probe applied to an arbitrary nonnegative profile with target
/// value 1 at the origin (used by the OEP origin condition on S·|φ̂|²).
DensityCurve origin_density_probe(const std::function<double(std::span<const double>)>& profile,
                                  const DilationMatrix& A, const ProbeSpec& probe);

}  // namespace framelet
