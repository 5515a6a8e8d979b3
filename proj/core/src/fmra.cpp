#include "framelet/fmra.hpp"

namespace framelet {

namespace {

void check_budget(const ProbeSpec& probe) {
  const auto total =
      static_cast<std::int64_t>(probe.j_list.size()) * probe.samples;
  require(total <= probe.budget, errc::probe_budget_exceeded,
          std::to_string(total) + " samples requested, budget " + std::to_string(probe.budget));
}

}  // namespace

FmraReport fmra_check(const PhiHat& phi, const DilationMatrix& A, const ProbeSpec& probe) {
  require(phi.dim() == A.dim(), errc::dimension_mismatch, "profile dimension vs dilation");
  check_budget(probe);
  const Expansive adjoint = Expansive::adjoint_of(A);
  const RealVec origin(A.dim(), 0.0);

  FmraReport report;

  // (B): fraction of {φ̂ = 0} in (A^T)^{-j} B_r must vanish.
  MeasurableSet zero_set;
  zero_set.dim = A.dim();
  zero_set.description = "zero set of the refinable profile";
  zero_set.contains = [&phi, &probe](std::span<const double> y) {
    return phi.eval_modulus(y) <= probe.zero_tol;
  };
  report.zero_fraction = density_curve(zero_set, adjoint, origin, probe.radius, probe.j_list,
                                       probe.samples, probe.seed, probe.trend_tol);
  report.pass_zero = report.zero_fraction.verdict == LimitVerdict::converges_to_0;

  // (C): density of {| |φ̂|²/[φ̂,φ̂] - 1| < δ} must tend to 1.
  const Bracket bracket(phi, probe.bracket_radius);
  const NormalizedPhiHat normalized = normalize_scaling(phi, bracket);
  MeasurableSet superlevel;
  superlevel.dim = A.dim();
  superlevel.description = "superlevel set of the normalized profile";
  superlevel.contains = [&normalized, &probe](std::span<const double> y) {
    return std::abs(normalized.eval_modulus_sq(y) - 1.0) < probe.delta;
  };
  report.superlevel_density =
      density_curve(superlevel, adjoint, origin, probe.radius, probe.j_list,
                    probe.samples, probe.seed + 1, probe.trend_tol);
  report.pass_superlevel = report.superlevel_density.verdict == LimitVerdict::converges_to_1;

  report.pass = report.pass_zero && report.pass_superlevel;
  return report;
}

DensityCurve origin_density_probe(const std::function<double(std::span<const double>)>& profile,
                                  const DilationMatrix& A, const ProbeSpec& probe) {
  check_budget(probe);
  const Expansive adjoint = Expansive::adjoint_of(A);
  const RealVec origin(A.dim(), 0.0);
  MeasurableSet superlevel;
  superlevel.dim = A.dim();
  superlevel.description = "superlevel set {|profile - 1| < delta}";
  superlevel.contains = [&profile, &probe](std::span<const double> y) {
    return std::abs(profile(y) - 1.0) < probe.delta;
  };
  return density_curve(superlevel, adjoint, origin, probe.radius, probe.j_list, probe.samples,
                       probe.seed, probe.trend_tol);
}

}  // namespace framelet
