#include "framelet/frame_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace framelet {

namespace {

double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// C^∞ transition 0 -> 1 on [0,1] (all derivatives vanish at both ends).
double smooth_step(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / u);
  const double b = std::exp(-1.0 / (1.0 - u));
  return a / (a + b);
}

std::int64_t scalar_dilation(const DilationMatrix& A) {
  require(A.dim() == 1, errc::dimension_mismatch,
          "signal-based analysis is implemented for one dimension");
  return std::llabs(A.entry(0, 0));
}

}  // namespace

TestSignal TestSignal::random(std::uint64_t seed, double inner, double outer, int degree,
                              int quad_points) {
  require(0.0 < inner && inner < outer, errc::dimension_mismatch, "need 0 < inner < outer");
  require(degree >= 0, errc::dimension_mismatch, "degree must be nonnegative");
  TestSignal f;
  f.degree_ = degree;
  f.inner_ = inner;
  f.outer_ = outer;
  f.zero_ = false;
  std::mt19937_64 rng(seed);
  f.coeffs_.resize(2 * degree + 1);
  for (cdouble& c : f.coeffs_) {
    c = cdouble{2.0 * u01(rng) - 1.0, 2.0 * u01(rng) - 1.0};
  }
  // ‖f‖₂² = ∫ |f̂|² by Plancherel; the integrand is smooth and compactly
  // supported, so the rectangle rule converges spectrally.
  double sum = 0.0;
  const double h = 2.0 * outer / quad_points;
  for (int i = 0; i < quad_points; ++i) {
    const double t = -outer + (i + 0.5) * h;
    sum += std::norm(f.spectrum(t));
  }
  f.norm_ = std::sqrt(sum * h);
  return f;
}

TestSignal TestSignal::zero() { return TestSignal(); }

cdouble TestSignal::spectrum(double t) const {
  if (zero_) return cdouble{0.0, 0.0};
  const double a = std::abs(t);
  if (a >= outer_ || a <= 0.5 * inner_) return cdouble{0.0, 0.0};
  const double rise = smooth_step((a - 0.5 * inner_) / (0.5 * inner_));
  const double fall = smooth_step((outer_ - a) / (0.25 * outer_));
  const double window = rise * fall;
  if (window == 0.0) return cdouble{0.0, 0.0};
  // Σ_k c_k e^{-2πikt} = z^{-D} Σ_i c_{i-D} z^i with z = e^{-2πit}:
  // one phase evaluation and a Horner sweep.
  const double frac = t - std::floor(t);
  const cdouble z = std::polar(1.0, -2.0 * std::numbers::pi * frac);
  cdouble acc{0.0, 0.0};
  for (int i = 2 * degree_; i >= 0; --i) acc = acc * z + coeffs_[static_cast<std::size_t>(i)];
  cdouble zmd{1.0, 0.0};
  const cdouble zc = std::conj(z);
  for (int i = 0; i < degree_; ++i) zmd *= zc;
  return scale_ * window * acc * zmd;
}

TestSignal TestSignal::normalized() const {
  require(!zero_ && norm_ > 0.0, errc::dimension_mismatch, "cannot normalize the zero signal");
  TestSignal f = *this;
  f.scale_ /= norm_;
  f.norm_ = 1.0;
  return f;
}

Kernel1D kernel_of(const PhiHat& phi) {
  require(phi.dim() == 1, errc::dimension_mismatch, "1-D kernel expected");
  return [phi](double u) { return phi.eval(std::span<const double>{&u, 1}); };
}

Kernel1D kernel_of(const FrameletHat& psi) {
  require(psi.dim() == 1, errc::dimension_mismatch, "1-D kernel expected");
  return [psi](double u) { return psi.eval(std::span<const double>{&u, 1}); };
}

namespace {

struct Periodization {
  double weight;     // d^{j/2}
  double dilate;     // a^j
  double width;      // support radius of u ↦ f̂(a^j u)
  int m_lo, m_hi;    // periodization shifts
};

Periodization plan_level(const TestSignal& f, std::int64_t a, int j) {
  Periodization p;
  p.weight = std::pow(static_cast<double>(a), 0.5 * j);
  p.dilate = std::pow(static_cast<double>(a), j);
  p.width = f.support_radius() / p.dilate;
  p.m_lo = static_cast<int>(std::floor(-p.width)) - 1;
  p.m_hi = static_cast<int>(std::ceil(p.width)) + 1;
  return p;
}

int level_points(std::int64_t a, int j, const QuadratureSpec& quad) {
  double q = quad.base_points;
  for (int i = 0; i < j; ++i) q *= static_cast<double>(a);
  require(q <= 1e9, errc::quadrature_budget, "per-level quadrature too fine");
  return std::max(quad.base_points, static_cast<int>(q));
}

}  // namespace

double level_energy(const TestSignal& f, const Kernel1D& g_hat, const DilationMatrix& A, int j,
                    const QuadratureSpec& quad) {
  if (f.is_zero()) return 0.0;
  const std::int64_t a = scalar_dilation(A);
  const Periodization p = plan_level(f, a, j);
  // Fine levels compress f̂(a^j ·), so the sampling rate follows a^j.
  const int points = level_points(a, std::max(0, j), quad);
  const auto evals = static_cast<std::int64_t>(points) * (p.m_hi - p.m_lo + 1);
  require(evals <= quad.budget, errc::quadrature_budget,
          "level energy would need " + std::to_string(evals) + " evaluations");

  double sum = 0.0;
  for (int i = 0; i < points; ++i) {
    const double s = (i + 0.5) / points;
    cdouble acc{0.0, 0.0};
    for (int m = p.m_lo; m <= p.m_hi; ++m) {
      const double u = s + m;
      if (std::abs(u) > p.width) continue;
      const cdouble fs = f.spectrum(p.dilate * u);
      if (fs == cdouble{0.0, 0.0}) continue;
      acc += p.weight * fs * std::conj(g_hat(u));
    }
    sum += std::norm(acc);
  }
  return sum / points;
}

double quasi_level_energy(const TestSignal& f, const Kernel1D& psi_hat, const DilationMatrix& A,
                          int j, const QuadratureSpec& quad) {
  require(j < 0, errc::dimension_mismatch, "quasi-affine oversampling applies to j < 0");
  if (f.is_zero()) return 0.0;
  const std::int64_t a = scalar_dilation(A);
  const double dilate = std::pow(static_cast<double>(a), -j);  // a^{|j|}
  const double width = f.support_radius();
  const int m_lo = static_cast<int>(std::floor(-width)) - 1;
  const int m_hi = static_cast<int>(std::ceil(width)) + 1;
  const int points = level_points(a, -j, quad);
  const auto evals = static_cast<std::int64_t>(points) * (m_hi - m_lo + 1);
  require(evals <= quad.budget, errc::quadrature_budget,
          "quasi-affine level would need " + std::to_string(evals) + " evaluations");

  double sum = 0.0;
  for (int i = 0; i < points; ++i) {
    const double s = (i + 0.5) / points;
    cdouble acc{0.0, 0.0};
    for (int m = m_lo; m <= m_hi; ++m) {
      const double u = s + m;
      if (std::abs(u) > width) continue;
      const cdouble fs = f.spectrum(u);
      if (fs == cdouble{0.0, 0.0}) continue;
      acc += fs * std::conj(psi_hat(dilate * u));
    }
    sum += std::norm(acc);
  }
  return sum / points;
}

double two_scale_energy(const FilterBank& bank, const PhiHat& phi, const TestSignal& f, int j,
                        const QuadratureSpec& quad) {
  const Kernel1D phi_k = kernel_of(phi);
  const double lhs = level_energy(f, phi_k, bank.dilation, j, quad);
  double rhs = level_energy(f, phi_k, bank.dilation, j - 1, quad);
  for (const FrameletHat& psi : build_framelets(bank, phi))
    rhs += level_energy(f, kernel_of(psi), bank.dilation, j - 1, quad);
  return std::abs(lhs - rhs);
}

DecayCurve coarse_scale_decay(const PhiHat& phi, const TestSignal& f, std::span<const int> j_list,
                              const QuadratureSpec& quad) {
  DecayCurve curve;
  curve.signal_norm_sq = f.l2_norm() * f.l2_norm();
  const Kernel1D phi_k = kernel_of(phi);
  DilationMatrix A = phi.has_mask() ? phi.dilation() : DilationMatrix::validate(1, {2});
  for (int j : j_list) {
    curve.j_values.push_back(j);
    curve.energies.push_back(level_energy(f, phi_k, A, j, quad));
  }
  const std::size_t n = curve.energies.size();
  if (f.is_zero()) {
    curve.pass = true;
  } else if (n >= 1) {
    bool decreasing = true;
    const std::size_t from = n > 3 ? n - 3 : 0;
    for (std::size_t i = from; i + 1 < n; ++i)
      decreasing = decreasing && curve.energies[i + 1] <= curve.energies[i] + 1e-15;
    curve.pass = decreasing && curve.energies.back() < 0.01 * curve.signal_norm_sq;
  }
  return curve;
}

FrameBoundEstimate translate_frame_bounds(const Bracket& bracket, const ZeroSetMask* mask,
                                          GridSpec grid) {
  FrameBoundEstimate est;
  bool any = false;
  std::size_t masked = 0;
  IntVec idx(grid.dim, 0);
  do {
    if (mask && mask->excluded(idx)) {
      ++masked;
      continue;
    }
    const double v = bracket.eval(grid.point(idx));
    if (!any) {
      est.lower = est.upper = v;
      any = true;
    } else {
      est.lower = std::min(est.lower, v);
      est.upper = std::max(est.upper, v);
    }
  } while (grid.next(idx));
  require(any, errc::empty_after_mask, "every grid point is masked");
  est.masked_fraction = static_cast<double>(masked) / static_cast<double>(grid.point_count());
  return est;
}

CalderonReport calderon_check(const std::vector<FrameletHat>& framelets, const DilationMatrix& A,
                              const std::vector<RealVec>& sample_points, ScaleRange range,
                              const std::vector<IntVec>& q_list, double tol_sum,
                              double tol_cross) {
  require(range.j_min <= range.j_max, errc::dimension_mismatch, "scale range");
  for (const IntVec& q : q_list) {
    require(!A.transpose_lattice_contains(q), errc::q_in_dilated_lattice,
            "cross-condition q lies in A^T Z^n");
  }

  CalderonReport report;
  const int n = A.dim();

  ResidualAccumulator sum_acc;
  for (const RealVec& t : sample_points) {
    require(t.size() == static_cast<std::size_t>(n), errc::dimension_mismatch, "sample point");
    double total = 0.0;
    double boundary = 0.0;
    RealVec x(t);
    for (int j = 0; j >= range.j_min; --j) {
      double level = 0.0;
      for (const FrameletHat& psi : framelets) level += std::norm(psi.eval(x));
      total += level;
      if (j == range.j_min) boundary += level;
      x = A.apply_transpose_inverse(x);
    }
    x = A.apply_transpose(t);
    for (int j = 1; j <= range.j_max; ++j) {
      double level = 0.0;
      for (const FrameletHat& psi : framelets) level += std::norm(psi.eval(x));
      total += level;
      if (j == range.j_max) boundary += level;
      x = A.apply_transpose(x);
    }
    report.tail_indicator = std::max(report.tail_indicator, boundary);
    report.profile.emplace_back(t, total);
    sum_acc.add(t, std::abs(total - 1.0));
  }
  report.sum.condition_id = "CALDERON";
  report.sum.grid = GridSpec{n, static_cast<std::int64_t>(sample_points.size())};
  sum_acc.finish(report.sum, tol_sum);

  for (const IntVec& q : q_list) {
    ResidualAccumulator acc;
    for (const RealVec& t : sample_points) {
      RealVec x(t);
      RealVec y(n);
      for (int i = 0; i < n; ++i) y[i] = t[i] + static_cast<double>(q[i]);
      cdouble cross{0.0, 0.0};
      for (int j = 0; j <= range.j_max; ++j) {
        for (const FrameletHat& psi : framelets) cross += psi.eval(x) * std::conj(psi.eval(y));
        x = A.apply_transpose(x);
        y = A.apply_transpose(y);
      }
      acc.add(t, std::abs(cross));
    }
    VerificationReport r;
    std::string qs = "(";
    for (std::int64_t v : q) qs += std::to_string(v) + ",";
    qs.back() = ')';
    r.condition_id = "CROSS " + qs;
    r.grid = GridSpec{n, static_cast<std::int64_t>(sample_points.size())};
    acc.finish(r, tol_cross);
    report.cross.push_back(std::move(r));
    report.q_list.push_back(q);
  }

  report.pass = report.sum.pass;
  for (const auto& r : report.cross) report.pass = report.pass && r.pass;
  return report;
}

std::vector<IntVec> default_q_list(const DilationMatrix& A) {
  const int n = A.dim();
  std::vector<IntVec> out;
  IntVec q(n, -2);
  while (true) {
    bool zero = true;
    for (std::int64_t v : q) zero = zero && v == 0;
    if (!zero && !A.transpose_lattice_contains(q)) out.push_back(q);
    int i = 0;
    for (; i < n; ++i) {
      if (q[i] < 2) {
        ++q[i];
        break;
      }
      q[i] = -2;
    }
    if (i == n) break;
  }
  // Images A^T p_k of the dual coset offsets; these sit off A^T Z^n by
  // construction and index the modulation conditions.
  for (const RatVec& p : coset_reps(A).gamma_dual) {
    IntVec ap(n);
    bool zero = true;
    bool integral = true;
    for (int i = 0; i < n; ++i) {
      Rational acc(0);
      for (int jj = 0; jj < n; ++jj) acc += Rational(A.entry(jj, i)) * p[jj];
      integral = integral && acc.is_integer();
      if (integral) {
        ap[i] = acc.num();
        zero = zero && ap[i] == 0;
      }
    }
    if (integral && !zero && std::find(out.begin(), out.end(), ap) == out.end() &&
        !A.transpose_lattice_contains(ap))
      out.push_back(ap);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ParsevalResult empirical_parseval(const std::vector<FrameletHat>& framelets,
                                  const DilationMatrix& A, const TestSignal& f, ScaleRange range,
                                  SystemKind system, const QuadratureSpec& quad) {
  ParsevalResult result;
  if (f.is_zero()) {
    result.defined = false;  // 0/0
    return result;
  }
  require(range.j_min <= range.j_max, errc::dimension_mismatch, "scale range");
  std::vector<Kernel1D> kernels;
  kernels.reserve(framelets.size());
  for (const FrameletHat& psi : framelets) kernels.push_back(kernel_of(psi));

  for (int j = range.j_min; j <= range.j_max; ++j) {
    double level = 0.0;
    for (const Kernel1D& k : kernels) {
      if (system == SystemKind::quasi_affine && j < 0) {
        level += quasi_level_energy(f, k, A, j, quad);
      } else {
        level += level_energy(f, k, A, j, quad);
      }
    }
    result.level_energies.push_back(level);
  }
  double total = 0.0;
  for (double e : result.level_energies) total += e;
  const double boundary = result.level_energies.front() + result.level_energies.back();
  result.omitted_indicator = total > 0.0 ? boundary / total : 0.0;
  require(result.omitted_indicator <= 0.10, errc::truncation_dominates,
          "boundary levels carry " + std::to_string(100.0 * result.omitted_indicator) +
              "% of the captured energy");
  result.ratio = total / (f.l2_norm() * f.l2_norm());
  return result;
}

FoldResiduals coset_fold_integral(const TrigPolynomial& g, const DilationMatrix& A,
                                  int quad_points_per_dim) {
  const int n = g.dim();
  require(n == A.dim(), errc::dimension_mismatch, "polynomial dimension vs dilation");

  // Rectangle rule is exact for trig polynomials once the resolution
  // clears every frequency, including the A^T-transported ones.
  std::int64_t max_freq = 1;
  for (const auto& [k, c] : g.coeffs()) {
    for (std::int64_t v : k) max_freq = std::max<std::int64_t>(max_freq, std::llabs(v));
    const IntVec ak = A.apply_transpose(k);
    for (std::int64_t v : ak) max_freq = std::max<std::int64_t>(max_freq, std::llabs(v));
  }
  const std::int64_t q = std::max<std::int64_t>(quad_points_per_dim, 2 * max_freq + 2);
  const GridSpec grid{n, q};
  const double count = static_cast<double>(grid.point_count());

  const std::vector<RatVec> gamma = coset_reps(A.transposed()).gamma_dual;

  cdouble int_plain{0.0, 0.0};
  cdouble int_endo{0.0, 0.0};
  cdouble int_fold{0.0, 0.0};
  IntVec idx(n, 0);
  do {
    int_plain += g.eval_grid(idx, q);
    int_endo += g.eval_grid(A.apply(idx), q);
    // A^{-1}(idx/q) = (A^{-1} idx)/q, exactly.
    const RatVec inv = A.apply_inverse_exact(idx);
    cdouble fold{0.0, 0.0};
    for (const RatVec& qi : gamma) {
      RatVec point(n);
      for (int i = 0; i < n; ++i) point[i] = inv[i] / Rational(q) + qi[i];
      fold += g.eval(point);
    }
    int_fold += fold;
  } while (grid.next(idx));
  int_plain /= count;
  int_endo /= count;
  int_fold /= count * static_cast<double>(A.det_abs());

  FoldResiduals res;
  res.endomorphism = std::abs(int_endo - int_plain);
  res.coset_average = std::abs(int_plain - int_fold);
  return res;
}

}  // namespace framelet
