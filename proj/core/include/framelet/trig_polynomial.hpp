#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>

#include "framelet/lattice.hpp"
#include "framelet/rational.hpp"

namespace framelet {

using cdouble = std::complex<double>;

/// Z^n-periodic filter as a finite trigonometric polynomial
///   H(t) = Σ_k c_k e^{-2πi k·t},  k ∈ Z^n.
///
/// Evaluation reduces every phase k·t modulo 1 before exponentiating:
/// at rational arguments (in particular at grid points idx/m) the
/// reduction is exact integer arithmetic, which makes H(t + p) - H(t)
/// identically zero for integer p and keeps coset-shifted comparisons
/// free of interpolation error.
class TrigPolynomial {
 public:
  explicit TrigPolynomial(int dim) : n_(dim) {}

  int dim() const { return n_; }

  /// Sets c_k (erases the term when c == 0).
  TrigPolynomial& set(IntVec k, cdouble c);
  cdouble coeff(const IntVec& k) const;
  const std::map<IntVec, cdouble>& coeffs() const { return coeffs_; }

  cdouble eval(std::span<const double> t) const;
  cdouble eval(const RatVec& t) const;
  /// Value at the grid point idx/m (exact phases mod m).
  cdouble eval_grid(std::span<const std::int64_t> idx, std::int64_t m) const;

  /// Σ_k |c_k|: cheap bound for sup |H|.
  double sup_bound() const;

  static TrigPolynomial constant(int dim, cdouble c);

 private:
  int n_;
  std::map<IntVec, cdouble> coeffs_;
};

}  // namespace framelet
