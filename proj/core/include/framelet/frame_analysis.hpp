#pragma once

#include <functional>
#include <utility>

#include "framelet/extension.hpp"

namespace framelet {

/// One-dimensional band-limited test signal defined by its spectrum:
/// a random trigonometric polynomial under a smooth compactly supported
/// annular window (all derivatives vanish at the support edges, so the
/// spectral quadratures converge fast).  The annulus keeps the spectrum
/// away from the origin, where truncated scale ranges lose energy.
class TestSignal {
 public:
  static TestSignal random(std::uint64_t seed, double inner = 0.25, double outer = 4.0,
                           int degree = 6, int quad_points = 8192);
  static TestSignal zero();

  cdouble spectrum(double t) const;
  double l2_norm() const { return norm_; }
  double support_radius() const { return outer_; }
  bool is_zero() const { return zero_; }
  /// Same signal rescaled to unit L² norm.
  TestSignal normalized() const;

 private:
  TestSignal() = default;

  std::vector<cdouble> coeffs_;  // dense c_{-D..D}, Horner-evaluated
  int degree_ = 0;
  double inner_ = 0.25;
  double outer_ = 4.0;
  double scale_ = 1.0;
  double norm_ = 0.0;
  bool zero_ = true;
};

struct ScaleRange {
  int j_min = -8;
  int j_max = 8;
};

struct QuadratureSpec {
  int base_points = 1024;             // samples per unit period
  std::int64_t budget = 200000000;    // total kernel evaluations allowed
};

using Kernel1D = std::function<cdouble(double)>;

Kernel1D kernel_of(const PhiHat& phi);
Kernel1D kernel_of(const FrameletHat& psi);

/// Σ_k |⟨f, D^j τ_k g⟩|² for a 1-D dilation, computed in the spectral
/// domain: the inner products are the Fourier coefficients of the
/// periodization of d^{j/2} f̂(a^j ·) conj(ĝ), so the energy is the L²
/// norm of that periodization over one period.
double level_energy(const TestSignal& f, const Kernel1D& g_hat, const DilationMatrix& A, int j,
                    const QuadratureSpec& quad);

/// Oversampled variant for the quasi-affine system at j < 0:
/// Σ_k |⟨f, d^{j/2} τ_k D^j ψ⟩|² = ∫_T |Σ_m f̂(s+m) conj(ψ̂(a^{-j}(s+m)))|².
double quasi_level_energy(const TestSignal& f, const Kernel1D& psi_hat, const DilationMatrix& A,
                          int j, const QuadratureSpec& quad);

/// |LHS - RHS| of the two-scale energy identity
///   Σ_k |⟨f,D^j τ_k φ⟩|² = Σ_k |⟨f,D^{j-1} τ_k φ⟩|² + Σ_ℓ Σ_k |⟨f,D^{j-1} τ_k ψ_ℓ⟩|².
double two_scale_energy(const FilterBank& bank, const PhiHat& phi, const TestSignal& f, int j,
                        const QuadratureSpec& quad);

struct DecayCurve {
  std::vector<int> j_values;
  std::vector<double> energies;
  double signal_norm_sq = 0.0;
  bool pass = false;  // final level < 1% of ‖f‖² and last three decreasing
};

/// Coarse-scale energies Σ_k |⟨f, D^j τ_k φ⟩|² along negative j.
DecayCurve coarse_scale_decay(const PhiHat& phi, const TestSignal& f, std::span<const int> j_list,
                              const QuadratureSpec& quad);

struct FrameBoundEstimate {
  double lower = 0.0;   // min of the bracket over unmasked grid points
  double upper = 0.0;   // max over unmasked grid points
  double masked_fraction = 0.0;
  bool inner_estimate = true;  // grid extrema bound the essential ones from inside
};

FrameBoundEstimate translate_frame_bounds(const Bracket& bracket, const ZeroSetMask* mask,
                                          GridSpec grid);

struct CalderonReport {
  VerificationReport sum;                  // |Σ_ℓ Σ_j |ψ̂_ℓ(A^T{}^j t)|² - 1|
  std::vector<VerificationReport> cross;   // per q: |Σ_ℓ Σ_{j≥0} ψ̂(A^T{}^j t) conj(ψ̂(A^T{}^j(t+q)))|
  std::vector<IntVec> q_list;              // which q were actually tested
  double tail_indicator = 0.0;             // worst outermost-octave share
  std::vector<std::pair<RealVec, double>> profile;  // (t, truncated sum)
  bool pass = false;
};

CalderonReport calderon_check(const std::vector<FrameletHat>& framelets, const DilationMatrix& A,
                              const std::vector<RealVec>& sample_points, ScaleRange range,
                              const std::vector<IntVec>& q_list, double tol_sum,
                              double tol_cross);

/// Default cross-condition probes: all q with |q|∞ <= 2 outside A^T Z^n,
/// plus the nonzero vectors A^T p_k for p_k in gamma_dual.
std::vector<IntVec> default_q_list(const DilationMatrix& A);

enum class SystemKind { affine, quasi_affine };

struct ParsevalResult {
  double ratio = 0.0;              // truncated analysis energy over ‖f‖²
  double omitted_indicator = 0.0;  // boundary-level share of the total
  bool defined = true;             // false for the zero signal
  std::vector<double> level_energies;
};

/// Truncated Parseval ratio of the affine or quasi-affine system.
/// Throws errc::truncation_dominates when the boundary levels carry
/// more than 10% of the captured energy.
ParsevalResult empirical_parseval(const std::vector<FrameletHat>& framelets,
                                  const DilationMatrix& A, const TestSignal& f, ScaleRange range,
                                  SystemKind system, const QuadratureSpec& quad);

struct FoldResiduals {
  double endomorphism = 0.0;    // |∫ g(Ât) - ∫ g|
  double coset_average = 0.0;   // |∫ g - d^{-1} ∫ Σ_i g(A^{-1}t + q_i)|
};

/// Integral identities of the induced endomorphism t ↦ At mod Z^n,
/// checked by rectangle quadrature (exact for trig polynomials once the
/// resolution clears every aliased frequency).
FoldResiduals coset_fold_integral(const TrigPolynomial& g, const DilationMatrix& A,
                                  int quad_points_per_dim);

}  // namespace framelet
