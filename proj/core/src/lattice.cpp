#include "framelet/lattice.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

namespace framelet {

namespace {

// Determinant of an integer matrix by cofactor expansion.  Dimensions
// here are desk scale (n <= 8), so the factorial cost is irrelevant and
// the arithmetic stays exact.
std::int64_t int_det(const std::vector<std::int64_t>& m, int n) {
  if (n == 1) return m[0];
  if (n == 2) return m[0] * m[3] - m[1] * m[2];
  std::int64_t det = 0;
  std::vector<std::int64_t> minor((n - 1) * (n - 1));
  for (int c = 0; c < n; ++c) {
    int idx = 0;
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (j != c) minor[idx++] = m[static_cast<std::size_t>(i) * n + j];
    const std::int64_t cof = int_det(minor, n - 1);
    det += (c % 2 == 0 ? 1 : -1) * m[c] * cof;
  }
  return det;
}

// Adjugate (transposed cofactor matrix): A * adj(A) = det(A) * I.
std::vector<std::int64_t> int_adjugate(const std::vector<std::int64_t>& m, int n) {
  std::vector<std::int64_t> adj(static_cast<std::size_t>(n) * n);
  if (n == 1) {
    adj[0] = 1;
    return adj;
  }
  std::vector<std::int64_t> minor((n - 1) * (n - 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int idx = 0;
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0; c < n; ++c) {
          if (c == j) continue;
          minor[idx++] = m[static_cast<std::size_t>(r) * n + c];
        }
      }
      const std::int64_t cof = ((i + j) % 2 == 0 ? 1 : -1) * int_det(minor, n - 1);
      adj[static_cast<std::size_t>(j) * n + i] = cof;
    }
  }
  return adj;
}

void check_dim(int n, std::size_t got, const char* what) {
  require(static_cast<std::size_t>(n) == got, errc::dimension_mismatch, what);
}

}  // namespace

DilationMatrix DilationMatrix::validate(int dim, const std::vector<std::int64_t>& entries) {
  require(dim >= 1, errc::not_square, "dimension must be positive");
  require(entries.size() == static_cast<std::size_t>(dim) * dim, errc::not_square,
          "expected " + std::to_string(dim) + "x" + std::to_string(dim) + " entries");

  DilationMatrix A;
  A.n_ = dim;
  A.a_ = entries;
  A.det_ = int_det(entries, dim);
  require(A.det_ != 0, errc::zero_determinant, "dilation matrix is singular");
  A.adj_ = int_adjugate(entries, dim);

  Eigen::MatrixXd m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = static_cast<double>(A.entry(i, j));
  Eigen::EigenSolver<Eigen::MatrixXd> es(m, /*computeEigenvectors=*/false);
  A.eig_moduli_.resize(dim);
  for (int i = 0; i < dim; ++i) {
    A.eig_moduli_[static_cast<std::size_t>(i)] = std::abs(es.eigenvalues()[i]);
  }
  std::sort(A.eig_moduli_.begin(), A.eig_moduli_.end());
  // Integer matrices cannot have eigenvalue moduli a hair above 1, so a
  // small guard band only rejects genuine unit-modulus spectra.
  for (double mod : A.eig_moduli_) {
    require(mod > 1.0 + 1e-9, errc::not_expansive,
            "eigenvalue modulus " + std::to_string(mod) + " not > 1");
  }

  Eigen::MatrixXd inv = m.inverse();
  A.inv_.resize(static_cast<std::size_t>(dim) * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) A.inv_[static_cast<std::size_t>(i) * dim + j] = inv(i, j);
  return A;
}

std::int64_t DilationMatrix::max_abs_entry() const {
  std::int64_t m = 0;
  for (std::int64_t v : a_) m = std::max(m, std::abs(v));
  return m;
}

IntVec DilationMatrix::apply(std::span<const std::int64_t> v) const {
  check_dim(n_, v.size(), "vector dimension");
  IntVec out(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i] += entry(i, j) * v[j];
  return out;
}

RealVec DilationMatrix::apply(std::span<const double> v) const {
  check_dim(n_, v.size(), "vector dimension");
  RealVec out(n_, 0.0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i] += static_cast<double>(entry(i, j)) * v[j];
  return out;
}

IntVec DilationMatrix::apply_transpose(std::span<const std::int64_t> v) const {
  check_dim(n_, v.size(), "vector dimension");
  IntVec out(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i] += entry(j, i) * v[j];
  return out;
}

RealVec DilationMatrix::apply_transpose(std::span<const double> v) const {
  check_dim(n_, v.size(), "vector dimension");
  RealVec out(n_, 0.0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i] += static_cast<double>(entry(j, i)) * v[j];
  return out;
}

RealVec DilationMatrix::apply_inverse(std::span<const double> v) const {
  check_dim(n_, v.size(), "vector dimension");
  RealVec out(n_, 0.0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i] += inv_[static_cast<std::size_t>(i) * n_ + j] * v[j];
  return out;
}

RealVec DilationMatrix::apply_transpose_inverse(std::span<const double> v) const {
  check_dim(n_, v.size(), "vector dimension");
  RealVec out(n_, 0.0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i] += inv_[static_cast<std::size_t>(j) * n_ + i] * v[j];
  return out;
}

RatVec DilationMatrix::apply_inverse_exact(std::span<const std::int64_t> v) const {
  check_dim(n_, v.size(), "vector dimension");
  RatVec out(n_, Rational(0));
  for (int i = 0; i < n_; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < n_; ++j) acc += adj_[static_cast<std::size_t>(i) * n_ + j] * v[j];
    out[i] = Rational(acc, det_);
  }
  return out;
}

RatVec DilationMatrix::apply_transpose_inverse_exact(std::span<const std::int64_t> v) const {
  check_dim(n_, v.size(), "vector dimension");
  // (A^T)^{-1} = (A^{-1})^T = adj(A)^T / det.
  RatVec out(n_, Rational(0));
  for (int i = 0; i < n_; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < n_; ++j) acc += adj_[static_cast<std::size_t>(j) * n_ + i] * v[j];
    out[i] = Rational(acc, det_);
  }
  return out;
}

bool DilationMatrix::transpose_lattice_contains(std::span<const std::int64_t> q) const {
  for (const Rational& r : apply_transpose_inverse_exact(q))
    if (!r.is_integer()) return false;
  return true;
}

DilationMatrix DilationMatrix::transposed() const {
  std::vector<std::int64_t> t(a_.size());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t[static_cast<std::size_t>(j) * n_ + i] = entry(i, j);
  return validate(n_, t);
}

IntVec coset_canonical(const DilationMatrix& A, std::span<const std::int64_t> x) {
  // x - A*floor(A^{-1} x) lies in A([0,1)^n), the canonical fundamental
  // domain; floors are exact rationals.
  const RatVec y = A.apply_inverse_exact(x);
  IntVec fl(A.dim());
  for (int i = 0; i < A.dim(); ++i) fl[i] = y[i].floor();
  const IntVec shift = A.apply(fl);
  IntVec out(A.dim());
  for (int i = 0; i < A.dim(); ++i) out[i] = x[i] - shift[i];
  return out;
}

std::vector<IntVec> coset_reps_from_candidates(const DilationMatrix& A,
                                               const std::vector<IntVec>& candidates) {
  std::set<IntVec> reps;
  for (const IntVec& c : candidates) reps.insert(coset_canonical(A, c));
  return {reps.begin(), reps.end()};
}

namespace {

// Lattice points in the bounding box of A([0,1)^n); every residue class
// has its canonical representative in there.
std::vector<IntVec> box_candidates(const DilationMatrix& A) {
  const int n = A.dim();
  IntVec lo(n, 0), hi(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::int64_t e = A.entry(i, j);
      if (e < 0) lo[i] += e;
      if (e > 0) hi[i] += e;
    }
  }
  std::vector<IntVec> out;
  IntVec cur = lo;
  while (true) {
    out.push_back(cur);
    int i = 0;
    for (; i < n; ++i) {
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i];
    }
    if (i == n) break;
  }
  return out;
}

}  // namespace

CosetReps coset_reps(const DilationMatrix& A) {
  CosetReps reps;
  reps.omega = coset_reps_from_candidates(A, box_candidates(A));
  require(reps.omega.size() == static_cast<std::size_t>(A.det_abs()), errc::internal,
          "coset enumeration found " + std::to_string(reps.omega.size()) + " classes, expected " +
              std::to_string(A.det_abs()));

  const DilationMatrix At = A.transposed();
  std::vector<IntVec> omega_dual = coset_reps_from_candidates(At, box_candidates(At));
  require(omega_dual.size() == reps.omega.size(), errc::internal, "dual coset count mismatch");

  std::vector<RatVec> gamma;
  gamma.reserve(omega_dual.size());
  for (const IntVec& q : omega_dual) {
    RatVec p = A.apply_transpose_inverse_exact(q);
    for (Rational& r : p) r = r.frac();
    gamma.push_back(std::move(p));
  }
  std::sort(gamma.begin(), gamma.end());  // lexicographic; p_0 = 0 sorts first
  const RatVec zero(A.dim(), Rational(0));
  require(!gamma.empty() && gamma.front() == zero, errc::internal, "p_0 = 0 missing");
  reps.gamma_dual = std::move(gamma);
  return reps;
}

}  // namespace framelet
