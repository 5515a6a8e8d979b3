#pragma once

#include <optional>

#include "framelet/bracket.hpp"
#include "framelet/fmra.hpp"
#include "framelet/report.hpp"

namespace framelet {

/// Dilation, low-pass mask H0, high-pass masks H1..HN and an optional
/// nonnegative periodic weight S.
struct FilterBank {
  DilationMatrix dilation;
  Filter lowpass;
  std::vector<Filter> highpass;
  std::optional<Filter> weight;

  int dim() const { return dilation.dim(); }
  int generators() const { return static_cast<int>(highpass.size()); }
};

/// Checks that idx/m contains its own coset shifts: every gamma_dual
/// entry times m must be an integer.  Returns the shifts in grid units.
std::vector<IntVec> coset_grid_shifts(const DilationMatrix& A, const GridSpec& grid);

/// Smallest grid resolution >= m for which all coset offsets p_k land on
/// grid points (a multiple of the lcm of the gamma_dual denominators).
std::int64_t coset_compatible_resolution(const DilationMatrix& A, std::int64_t m);

struct UepReport {
  VerificationReport uep0;
  std::vector<VerificationReport> uepk;  // one per p_k, k = 1..d_A-1
  bool pass = false;
  double max_residual = 0.0;
};

/// Residuals of the two filter equations
///   |H0(t)|² + Σ_ℓ |H_ℓ(t)|² = 1                       (UEP0)
///   H0(t) conj(H0(t+p_k)) + Σ_ℓ H_ℓ(t) conj(H_ℓ(t+p_k)) = 0   (UEPk)
/// over the unmasked grid points (pairs for UEPk).  The weight S, if
/// present, is ignored.  Pass `mask = nullptr` for an empty zero set.
UepReport check_uep(const FilterBank& bank, const ZeroSetMask* mask, GridSpec grid, double tol);

struct OepReport {
  VerificationReport soep0;
  std::vector<VerificationReport> soepk;
  DensityCurve origin_probe;  // density of {|S|φ̂|² - 1| < δ} at 0
  bool origin_pass = false;
  bool pass = false;
  double max_residual = 0.0;
};

/// The weighted (oblique) versions:
///   S(A^T t)|H0(t)|² + Σ_ℓ |H_ℓ(t)|² = S(t)            (SOEP0)
///   S(A^T t) H0(t) conj(H0(t+p_k)) + Σ_ℓ H_ℓ(t) conj(H_ℓ(t+p_k)) = 0  (SOEPk)
/// plus the origin probe on S·|φ̂|² with target 1.
OepReport check_oep(const FilterBank& bank, const PhiHat& phi, const ZeroSetMask* mask,
                    GridSpec grid, double tol, const ProbeSpec& probe);

struct ThetaValue {
  double value = 0.0;
  /// |Θ_M(t) - (Θ_{M-1}(A^T t)|H0(t)|² + Σ_ℓ|H_ℓ(t)|²)|, a self-
  /// consistency diagnostic of the defining recursion.
  double recursion_residual = 0.0;
};

/// Truncated fundamental function
///   Θ_M(t) = Σ_{m=0..M} Σ_ℓ |H_ℓ(A^T{}^m t)|² Π_{k<m} |H0(A^T{}^k t)|²
/// (empty product = 1).  The rational overload walks the A^T-orbit of t
/// exactly, so the chaotic phase growth of A^T{}^m t costs no precision.
/// Throws errc::divergent when partial sums pass the overflow guard.
ThetaValue fundamental_function(const FilterBank& bank, const RatVec& t, int truncation,
                                double divergence_guard = 1e12);
ThetaValue fundamental_function(const FilterBank& bank, std::span<const double> t, int truncation,
                                double divergence_guard = 1e12);

/// Q0 = sqrt(S(A^T t)/S(t)) H0, Q_ℓ = H_ℓ / sqrt(S), with 0/0 = 0,
/// sampled on the grid (the square roots leave the polynomial class).
FilterBank oep_reduce(const FilterBank& bank, GridSpec grid);

/// Completes a low-pass mask satisfying the sub-QMF condition
/// Σ_k |H0(t+p_k)|² <= 1 into d_A grid-sampled high-pass filters: on
/// each coset orbit the stacked value matrix gets orthonormal columns
/// via the PSD principal square root B = (I - r*r)^{1/2}.
std::vector<Filter> uep_complete(const Filter& lowpass, const DilationMatrix& A, GridSpec grid,
                                 double tol = 1e-9);

/// Framelet spectrum ψ̂_ℓ(s) = H_ℓ((A^T)^{-1} s) · φ̂((A^T)^{-1} s),
/// optionally scaled (for deliberately broken systems in tests).
class FrameletHat {
 public:
  FrameletHat(DilationMatrix A, Filter h, PhiHat phi, double scale = 1.0);

  cdouble eval(std::span<const double> s) const;
  int dim() const { return A_.dim(); }
  FrameletHat scaled(double factor) const;

 private:
  DilationMatrix A_;
  Filter h_;
  PhiHat phi_;
  double scale_;
};

std::vector<FrameletHat> build_framelets(const FilterBank& bank, const PhiHat& phi);

struct OrthoReport {
  std::vector<VerificationReport> per_generator;  // ORTHO, one per H_ℓ
  bool pass = false;
  double max_residual = 0.0;
};

/// Residual of Σ_{k} H0(t+p_k) conj(H_ℓ(t+p_k)) on unmasked points;
/// distinguishes framelets associated with the underlying
/// multiresolution (pass) from ones merely arising from it (fail).
OrthoReport mra_orthogonality_check(const FilterBank& bank, const ZeroSetMask* mask,
                                    GridSpec grid, double tol);

}  // namespace framelet
