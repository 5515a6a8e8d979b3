#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "framelet/lattice.hpp"
#include "framelet/trig_polynomial.hpp"

namespace framelet {

/// Real expansive map together with its inverse, as consumed by the
/// density probes (the dilation itself or its adjoint).  For n = 1 the
/// integer scale is kept so dyadic windows can be handled exactly.
class Expansive {
 public:
  static Expansive of(const DilationMatrix& A);
  static Expansive adjoint_of(const DilationMatrix& A);

  int dim() const { return dim_; }
  RealVec apply_inverse_pow(std::span<const double> v, int j) const;  // A^{-j} v
  std::optional<std::int64_t> integer_scale() const { return scale_; }

 private:
  int dim_ = 1;
  std::vector<double> inv_;
  std::optional<std::int64_t> scale_;  // |a| when 1-D
};

/// Measurable set E given by a total membership predicate, optionally
/// with an exact one-dimensional measure function |E ∩ (lo,hi)|.
struct MeasurableSet {
  int dim = 1;
  std::string description;
  std::function<bool(std::span<const double>)> contains;
  std::function<Rational(const Rational& lo, const Rational& hi)> exact_measure;  // optional
};

struct DensityEstimate {
  double ratio = 0.0;
  double stderr_est = 0.0;
  bool exact = false;
};

enum class LimitVerdict { converges_to_1, converges_to_0, inconclusive };
const char* limit_verdict_name(LimitVerdict v);

/// Ratios |E ∩ (A^{-j}B_r + x)| / |A^{-j}B_r| over a list of j values.
struct DensityCurve {
  std::vector<int> j_values;
  std::vector<double> ratios;
  std::vector<double> stderrs;
  LimitVerdict verdict = LimitVerdict::inconclusive;
};

/// One density ratio |E ∩ (A^{-j}B_r + x)| / |A^{-j}B_r|, by the exact
/// interval path when available (1-D) and otherwise by Monte Carlo over
/// u ~ U(B_r) testing x + A^{-j}u ∈ E.
DensityEstimate density_ratio(const MeasurableSet& E, const Expansive& map,
                              std::span<const double> x, double r, int j, std::int64_t samples,
                              std::uint64_t seed);

/// Full curve over j_list plus a trend verdict: converges-to-1 when the
/// last three ratios are nondecreasing within statistical error and the
/// final one lies within trend_tol of 1 (and symmetrically for 0).
DensityCurve density_curve(const MeasurableSet& E, const Expansive& map,
                           std::span<const double> x, double r, std::span<const int> j_list,
                           std::int64_t samples, std::uint64_t seed, double trend_tol = 0.02);

/// Superlevel-set probe for A-approximate continuity of f at x with the
/// prescribed value `target`: the witness set is E_δ = {y : |f(y) -
/// target| < δ}.  One-sided by construction — a converges-to-1 verdict
/// supports the property, no verdict refutes it.
DensityCurve approx_continuity_probe(const std::function<cdouble(std::span<const double>)>& f,
                                     const Expansive& map, std::span<const double> x,
                                     cdouble target, double delta, std::span<const int> j_list,
                                     double r, std::int64_t samples, std::uint64_t seed,
                                     double trend_tol = 0.02);

struct LocallyNonzeroResult {
  std::optional<int> passing_j;  // smallest j with zero fraction < eps
  DensityCurve zero_fraction;    // fraction of {f = 0} per j
};

/// Smallest j ≤ j_max whose cell A^{-j}B_r + x carries a zero fraction
/// of {f = 0} below eps; empty when none does.
LocallyNonzeroResult locally_nonzero_probe(
    const std::function<cdouble(std::span<const double>)>& f, const Expansive& map,
    std::span<const double> x, double eps, double r, int j_max, std::int64_t samples,
    std::uint64_t seed, double zero_tol = 1e-12);

// ---------------------------------------------------------------------
// The spiked profile separating approximate continuity from the
// distributional normalization at the origin:
//   f = χ_[-1,1] + Σ_{ℓ≥0} 2^{ℓ+2} χ_(2^{-ℓ-1}, 2^{-ℓ-1} + 2^{-2ℓ-2}),
// and its plateau set F = [-1,1] minus the spikes.
// ---------------------------------------------------------------------

/// Pointwise values of the spiked profile.
double spiked_profile(double y);

/// Plateau set F with an exact interval-measure path (spikes below
/// ℓ = 60 handled term by term, the rest by the exact geometric tail).
MeasurableSet spiked_profile_plateau();

/// Exact density of F in the dyadic window (-2^{-j}, 2^{-j}): 1 - 2^{-j}/6.
Rational spiked_plateau_density(int j);

/// Nonnegative test bump for the distributional pairing: value 1 on
/// [-inner, inner], support [-outer, outer], monotone ramps.
struct TestBump {
  std::function<double(double)> eval;
  double inner = 1.0;
  double outer = 2.0;
};

/// Smoothstep trapezoid (1 on [-1,1], support [-2,2], ∫g = 3).
TestBump default_test_bump();

struct HanRecord {
  Rational q;          // 2^j ∫_{-2^{-j}}^{2^{-j}} f, exact (= 4)
  double pairing;      // ⟨|f(2^{-j}·)|, g⟩
  double one_pairing;  // ⟨1, g⟩
};

/// Window average and pairing record at scale j: the pairing stays ≥ 4
/// while ⟨1,g⟩ = 3, so |f(2^{-j}·)| does not converge to 1 in the sense
/// of distributions even though the origin is a point of approximate
/// continuity of f.
HanRecord han_counterexample(int j, const TestBump* g = nullptr, int spike_cut = 60);

}  // namespace framelet
