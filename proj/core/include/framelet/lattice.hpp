#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "framelet/rational.hpp"

namespace framelet {

using IntVec = std::vector<std::int64_t>;
using RealVec = std::vector<double>;

/// Validated expansive integer dilation matrix A.
///
/// Construction checks that the matrix is square, nonsingular and
/// expansive (every eigenvalue modulus strictly greater than 1), and
/// precomputes the data the rest of the library needs: |det A|, the
/// eigenvalue moduli, the exact integer adjugate (so A^{-1} acts on
/// integer vectors in exact rational arithmetic) and a double inverse.
class DilationMatrix {
 public:
  static DilationMatrix validate(int dim, const std::vector<std::int64_t>& entries_row_major);

  int dim() const { return n_; }
  std::int64_t det() const { return det_; }
  std::int64_t det_abs() const { return det_ < 0 ? -det_ : det_; }
  const std::vector<double>& eigenvalue_moduli() const { return eig_moduli_; }
  std::int64_t entry(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<std::int64_t>& entries() const { return a_; }
  std::int64_t max_abs_entry() const;

  /// A acting on vectors.
  IntVec apply(std::span<const std::int64_t> v) const;
  RealVec apply(std::span<const double> v) const;
  /// A^T acting on vectors (the adjoint A* in the canonical basis).
  IntVec apply_transpose(std::span<const std::int64_t> v) const;
  RealVec apply_transpose(std::span<const double> v) const;
  /// Double inverses of A and A^T.
  RealVec apply_inverse(std::span<const double> v) const;
  RealVec apply_transpose_inverse(std::span<const double> v) const;
  /// Exact A^{-1} v = adj(A) v / det(A).
  RatVec apply_inverse_exact(std::span<const std::int64_t> v) const;
  RatVec apply_transpose_inverse_exact(std::span<const std::int64_t> v) const;

  /// Membership q ∈ A^T Z^n, decided exactly.
  bool transpose_lattice_contains(std::span<const std::int64_t> q) const;

  /// A^T as a validated dilation matrix (same determinant and spectrum).
  DilationMatrix transposed() const;

 private:
  DilationMatrix() = default;

  int n_ = 0;
  std::vector<std::int64_t> a_;    // row-major
  std::vector<std::int64_t> adj_;  // adjugate: A * adj = det * I
  std::int64_t det_ = 0;
  std::vector<double> eig_moduli_;
  std::vector<double> inv_;  // row-major double inverse
};

/// Coset representatives attached to a dilation:
///   omega       — the d_A integer representatives of Z^n / A Z^n, taken
///                 as the lattice points of A([0,1)^n) and sorted
///                 lexicographically;
///   gamma_dual  — the d_A rational representatives p_0..p_{d_A-1} of
///                 (A^T)^{-1} Z^n / Z^n inside [0,1)^n, with p_0 = 0
///                 first and the rest sorted lexicographically.
struct CosetReps {
  std::vector<IntVec> omega;
  std::vector<RatVec> gamma_dual;
};

CosetReps coset_reps(const DilationMatrix& A);

/// Canonical representative of the class x + A Z^n inside A([0,1)^n).
IntVec coset_canonical(const DilationMatrix& A, std::span<const std::int64_t> x);

/// Distinct canonical representatives found in an arbitrary candidate
/// list.  coset_reps() uses the bounding box of A([0,1)^n); tests feed
/// shuffled candidate sets to check the result is order-independent.
std::vector<IntVec> coset_reps_from_candidates(const DilationMatrix& A,
                                               const std::vector<IntVec>& candidates);

}  // namespace framelet
