#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "framelet/filter.hpp"
#include "framelet/lattice.hpp"

namespace framelet {

enum class PhiMode { modulus, complex_product };

/// Refinable profile φ̂ evaluated as the truncated infinite product of
/// its mask,
///   φ̂(t) ≈ Π_{j=1..J} H0((A^T)^{-j} t)
/// (modulus mode multiplies |H0| factors instead).  Arguments outside
/// the unit ball are first contracted into it by extra product factors,
/// so the truncation depth J always counts factors past the point where
/// the tail behaves; values at |t| up to ~2^40 stay accurate.
///
/// Bundled examples can carry a named closed form instead (Haar and
/// hat sinc profiles, box indicators), which evaluates directly.
class PhiHat {
 public:
  static PhiHat from_mask(DilationMatrix A, TrigPolynomial h0, int depth,
                          PhiMode mode = PhiMode::complex_product);
  static PhiHat closed_form(int dim, std::string name,
                            std::function<cdouble(std::span<const double>)> fn);
  /// Closed forms by name: "haar", "hat", "box:lo:hi" (rational bounds),
  /// "zero".  All one-dimensional.  Named profiles also carry the exact
  /// closed form of their bracket: the sinc-type lattice tails decay too
  /// slowly (1/k² for the Haar profile) for a truncated sum to reach
  /// verification tolerances at any sane radius.
  static PhiHat named(const std::string& name);

  cdouble eval(std::span<const double> t) const;
  double eval_modulus(std::span<const double> t) const { return std::abs(eval(t)); }
  /// Same product with truncation depth `depth` (convergence checks).
  cdouble eval_at_depth(std::span<const double> t, int depth) const;

  int dim() const { return dim_; }
  int depth() const { return depth_; }
  PhiMode mode() const { return mode_; }
  bool has_closed_form() const { return static_cast<bool>(closed_); }
  const std::string& closed_name() const { return closed_name_; }
  bool has_mask() const { return static_cast<bool>(mask_); }
  const TrigPolynomial& mask() const;
  const DilationMatrix& dilation() const;
  bool has_closed_bracket() const { return static_cast<bool>(closed_bracket_); }
  double closed_bracket(std::span<const double> t) const;
  /// |H0(0)| = 1 is required for the infinite product to mean anything;
  /// callers surface a warning when this is off.
  bool mask_normalized(double tol = 1e-9) const;

  PhiHat with_depth(int depth) const;

 private:
  PhiHat() = default;

  int dim_ = 1;
  int depth_ = 30;
  PhiMode mode_ = PhiMode::complex_product;
  std::shared_ptr<const DilationMatrix> A_;
  std::shared_ptr<const TrigPolynomial> mask_;
  std::function<cdouble(std::span<const double>)> closed_;
  std::function<double(std::span<const double>)> closed_bracket_;
  std::string closed_name_;
};

}  // namespace framelet
