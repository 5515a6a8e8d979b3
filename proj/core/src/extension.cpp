#include "framelet/extension.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace framelet {

namespace {

std::int64_t mod_positive(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

IntVec shifted(const IntVec& idx, const IntVec& shift, std::int64_t m) {
  IntVec out(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) out[i] = mod_positive(idx[i] + shift[i], m);
  return out;
}

void check_bank(const FilterBank& bank, const GridSpec& grid) {
  require(grid.dim == bank.dim(), errc::dimension_mismatch, "grid dimension vs bank");
  require(bank.lowpass.dim() == bank.dim(), errc::dimension_mismatch, "lowpass dimension");
  for (const Filter& h : bank.highpass)
    require(h.dim() == bank.dim(), errc::dimension_mismatch, "highpass dimension");
}

double real_weight(const Filter& s, const IntVec& idx, std::int64_t m) {
  return s.eval_grid(idx, m).real();
}

}  // namespace

std::vector<IntVec> coset_grid_shifts(const DilationMatrix& A, const GridSpec& grid) {
  const CosetReps reps = coset_reps(A);
  std::vector<IntVec> shifts;
  shifts.reserve(reps.gamma_dual.size());
  for (const RatVec& p : reps.gamma_dual) {
    IntVec shift(A.dim());
    for (int i = 0; i < A.dim(); ++i) {
      const Rational scaled = p[i] * Rational(grid.m);
      require(scaled.is_integer(), errc::grid_not_coset_compatible,
              "grid resolution " + std::to_string(grid.m) + " misses coset offset " + p[i].str());
      shift[i] = scaled.num();
    }
    shifts.push_back(std::move(shift));
  }
  return shifts;
}

std::int64_t coset_compatible_resolution(const DilationMatrix& A, std::int64_t m) {
  const CosetReps reps = coset_reps(A);
  std::int64_t l = 1;
  for (const RatVec& p : reps.gamma_dual)
    for (const Rational& r : p) l = std::lcm(l, r.den());
  return ((m + l - 1) / l) * l;
}

UepReport check_uep(const FilterBank& bank, const ZeroSetMask* mask, GridSpec grid, double tol) {
  check_bank(bank, grid);
  const std::vector<IntVec> shifts = coset_grid_shifts(bank.dilation, grid);
  const std::size_t total = grid.point_count();

  UepReport report;
  {
    ResidualAccumulator acc;
    std::size_t masked = 0;
    IntVec idx(grid.dim, 0);
    do {
      if (mask && mask->excluded(idx)) {
        ++masked;
        continue;
      }
      double sum = std::norm(bank.lowpass.eval_grid(idx, grid.m));
      for (const Filter& h : bank.highpass) sum += std::norm(h.eval_grid(idx, grid.m));
      acc.add(grid.point(idx), std::abs(sum - 1.0));
    } while (grid.next(idx));
    report.uep0.condition_id = "UEP0";
    report.uep0.grid = grid;
    report.uep0.masked_fraction = static_cast<double>(masked) / static_cast<double>(total);
    acc.finish(report.uep0, tol);
  }

  for (std::size_t k = 1; k < shifts.size(); ++k) {
    ResidualAccumulator acc;
    std::size_t masked = 0;
    IntVec idx(grid.dim, 0);
    do {
      const IntVec other = shifted(idx, shifts[k], grid.m);
      if (mask && (mask->excluded(idx) || mask->excluded(other))) {
        ++masked;
        continue;
      }
      cdouble sum = bank.lowpass.eval_grid(idx, grid.m) *
                    std::conj(bank.lowpass.eval_grid(other, grid.m));
      for (const Filter& h : bank.highpass)
        sum += h.eval_grid(idx, grid.m) * std::conj(h.eval_grid(other, grid.m));
      acc.add(grid.point(idx), std::abs(sum));
    } while (grid.next(idx));
    VerificationReport r;
    r.condition_id = "UEPk[" + std::to_string(k) + "]";
    r.grid = grid;
    r.masked_fraction = static_cast<double>(masked) / static_cast<double>(total);
    acc.finish(r, tol);
    report.uepk.push_back(std::move(r));
  }

  report.pass = report.uep0.pass;
  report.max_residual = report.uep0.max_residual;
  for (const auto& r : report.uepk) {
    report.pass = report.pass && r.pass;
    report.max_residual = std::max(report.max_residual, r.max_residual);
  }
  return report;
}

OepReport check_oep(const FilterBank& bank, const PhiHat& phi, const ZeroSetMask* mask,
                    GridSpec grid, double tol, const ProbeSpec& probe) {
  check_bank(bank, grid);
  require(bank.weight.has_value(), errc::missing_weight, "bank has no OEP weight");
  const Filter& S = *bank.weight;
  const std::vector<IntVec> shifts = coset_grid_shifts(bank.dilation, grid);
  const std::size_t total = grid.point_count();

  // Nonnegativity sweep first; tiny negative values are rounding.
  {
    IntVec idx(grid.dim, 0);
    do {
      const double s = real_weight(S, idx, grid.m);
      require(s >= -1e-9, errc::negative_weight,
              "S < 0 at grid point (value " + std::to_string(s) + ")");
    } while (grid.next(idx));
  }

  OepReport report;
  {
    ResidualAccumulator acc;
    std::size_t masked = 0;
    IntVec idx(grid.dim, 0);
    do {
      if (mask && mask->excluded(idx)) {
        ++masked;
        continue;
      }
      const IntVec idx_at = bank.dilation.apply_transpose(idx);
      double lhs = real_weight(S, idx_at, grid.m) * std::norm(bank.lowpass.eval_grid(idx, grid.m));
      for (const Filter& h : bank.highpass) lhs += std::norm(h.eval_grid(idx, grid.m));
      acc.add(grid.point(idx), std::abs(lhs - real_weight(S, idx, grid.m)));
    } while (grid.next(idx));
    report.soep0.condition_id = "SOEP0";
    report.soep0.grid = grid;
    report.soep0.masked_fraction = static_cast<double>(masked) / static_cast<double>(total);
    acc.finish(report.soep0, tol);
  }

  for (std::size_t k = 1; k < shifts.size(); ++k) {
    ResidualAccumulator acc;
    std::size_t masked = 0;
    IntVec idx(grid.dim, 0);
    do {
      const IntVec other = shifted(idx, shifts[k], grid.m);
      if (mask && (mask->excluded(idx) || mask->excluded(other))) {
        ++masked;
        continue;
      }
      const IntVec idx_at = bank.dilation.apply_transpose(idx);
      cdouble sum = real_weight(S, idx_at, grid.m) * bank.lowpass.eval_grid(idx, grid.m) *
                    std::conj(bank.lowpass.eval_grid(other, grid.m));
      for (const Filter& h : bank.highpass)
        sum += h.eval_grid(idx, grid.m) * std::conj(h.eval_grid(other, grid.m));
      acc.add(grid.point(idx), std::abs(sum));
    } while (grid.next(idx));
    VerificationReport r;
    r.condition_id = "SOEPk[" + std::to_string(k) + "]";
    r.grid = grid;
    r.masked_fraction = static_cast<double>(masked) / static_cast<double>(total);
    acc.finish(r, tol);
    report.soepk.push_back(std::move(r));
  }

  // Origin condition: S·|φ̂|² approximately continuous at 0 with value 1.
  require(S.is_trig(), errc::eval_off_grid,
          "origin probe needs a weight evaluable off the grid");
  const TrigPolynomial s_poly = S.trig();
  report.origin_probe = origin_density_probe(
      [&s_poly, &phi](std::span<const double> y) {
        const double a = phi.eval_modulus(y);
        return s_poly.eval(y).real() * a * a;
      },
      bank.dilation, probe);
  report.origin_pass = report.origin_probe.verdict == LimitVerdict::converges_to_1;

  report.pass = report.soep0.pass && report.origin_pass;
  report.max_residual = report.soep0.max_residual;
  for (const auto& r : report.soepk) {
    report.pass = report.pass && r.pass;
    report.max_residual = std::max(report.max_residual, r.max_residual);
  }
  return report;
}

namespace {

template <typename Point, typename EvalSq, typename Advance>
ThetaValue theta_impl(const FilterBank& bank, Point x, int truncation, double guard,
                      const EvalSq& eval_sq, const Advance& advance) {
  require(truncation >= 0, errc::depth_too_small, "theta truncation must be >= 0");
  double theta = 0.0;        // Θ_M(t)
  double theta_shift = 0.0;  // Θ_{M-1}(A^T t)
  double prod = 1.0;         // Π_{k<m} |H0|² along the orbit
  double prod_shift = 1.0;   // same product starting from the second point
  double h0_first = 0.0;
  double s_first = 0.0;
  for (int m = 0; m <= truncation; ++m) {
    double s = 0.0;
    for (const Filter& h : bank.highpass) s += eval_sq(h, x);
    const double h0 = eval_sq(bank.lowpass, x);
    theta += s * prod;
    if (m == 0) {
      h0_first = h0;
      s_first = s;
    } else {
      theta_shift += s * prod_shift;
      prod_shift *= h0;
    }
    prod *= h0;
    require(theta <= guard && prod <= guard, errc::divergent,
            "fundamental function exceeds the overflow guard");
    x = advance(x);
  }
  const double recursion = std::abs(theta - (h0_first * theta_shift + s_first));
  return ThetaValue{theta, recursion};
}

}  // namespace

ThetaValue fundamental_function(const FilterBank& bank, const RatVec& t, int truncation,
                                double divergence_guard) {
  require(t.size() == static_cast<std::size_t>(bank.dim()), errc::dimension_mismatch,
          "point dimension vs bank");
  RatVec x(t);
  for (Rational& r : x) r = r.frac();
  return theta_impl(
      bank, x, truncation, divergence_guard,
      [](const Filter& h, const RatVec& p) { return std::norm(h.eval(p)); },
      [&bank](const RatVec& p) {
        // Exact orbit step: x -> frac(A^T x); denominators never grow.
        IntVec nums(p.size());
        RatVec out(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) out[i] = Rational(0);
        for (std::size_t i = 0; i < p.size(); ++i) {
          Rational acc(0);
          for (std::size_t jj = 0; jj < p.size(); ++jj) {
            acc += Rational(bank.dilation.entry(static_cast<int>(jj), static_cast<int>(i))) *
                   p[jj];
          }
          out[i] = acc.frac();
        }
        return out;
      });
}

ThetaValue fundamental_function(const FilterBank& bank, std::span<const double> t, int truncation,
                                double divergence_guard) {
  require(t.size() == static_cast<std::size_t>(bank.dim()), errc::dimension_mismatch,
          "point dimension vs bank");
  RealVec x(t.begin(), t.end());
  for (double& v : x) v -= std::floor(v);
  return theta_impl(
      bank, x, truncation, divergence_guard,
      [](const Filter& h, const RealVec& p) { return std::norm(h.eval(p)); },
      [&bank](const RealVec& p) {
        RealVec out = bank.dilation.apply_transpose(p);
        for (double& v : out) v -= std::floor(v);
        return out;
      });
}

FilterBank oep_reduce(const FilterBank& bank, GridSpec grid) {
  check_bank(bank, grid);
  require(bank.weight.has_value(), errc::missing_weight, "bank has no OEP weight");
  const Filter& S = *bank.weight;
  const std::size_t total = grid.point_count();
  const int n_high = bank.generators();

  std::vector<cdouble> q0(total);
  std::vector<std::vector<cdouble>> qh(n_high, std::vector<cdouble>(total));
  IntVec idx(grid.dim, 0);
  std::size_t flat = 0;
  do {
    const double s_t = real_weight(S, idx, grid.m);
    require(s_t >= -1e-9, errc::negative_weight, "S < 0 on the reduction grid");
    const IntVec idx_at = bank.dilation.apply_transpose(idx);
    const double s_at = real_weight(S, idx_at, grid.m);
    if (s_t <= 0.0) {
      q0[flat] = 0.0;  // 0/0 = 0
      for (int l = 0; l < n_high; ++l) qh[l][flat] = 0.0;
    } else {
      q0[flat] = std::sqrt(std::max(s_at, 0.0) / s_t) * bank.lowpass.eval_grid(idx, grid.m);
      const double inv_root = 1.0 / std::sqrt(s_t);
      for (int l = 0; l < n_high; ++l)
        qh[l][flat] = inv_root * bank.highpass[static_cast<std::size_t>(l)].eval_grid(idx, grid.m);
    }
    ++flat;
  } while (grid.next(idx));

  FilterBank out{bank.dilation, Filter::grid(grid.dim, grid.m, std::move(q0)), {}, std::nullopt};
  out.highpass.reserve(static_cast<std::size_t>(n_high));
  for (int l = 0; l < n_high; ++l)
    out.highpass.push_back(Filter::grid(grid.dim, grid.m, std::move(qh[static_cast<std::size_t>(l)])));
  return out;
}

namespace {

// PSD principal square root of I - r* r (rank-one update).  Falls back
// to a self-adjoint eigensolve when the closed form fails its own
// consistency check.
std::vector<cdouble> psd_root_rank_one(const std::vector<cdouble>& r) {
  const std::size_t d = r.size();
  double nr2 = 0.0;
  for (const cdouble& v : r) nr2 += std::norm(v);
  std::vector<cdouble> b(d * d, cdouble{0.0, 0.0});
  const double root = std::sqrt(std::max(0.0, 1.0 - std::min(nr2, 1.0)));
  const double c = nr2 < 1e-30 ? 0.0 : (1.0 - root) / nr2;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      b[i * d + j] = (i == j ? cdouble{1.0, 0.0} : cdouble{0.0, 0.0}) -
                     c * std::conj(r[i]) * r[j];
    }
  }
  // Consistency: B² + r*r = I.
  double err = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      cdouble acc = std::conj(r[i]) * r[j];
      for (std::size_t k = 0; k < d; ++k) acc += b[i * d + k] * b[k * d + j];
      acc -= (i == j ? 1.0 : 0.0);
      err = std::max(err, std::abs(acc));
    }
  }
  if (err < 1e-10) return b;

  Eigen::MatrixXcd m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          (i == j ? 1.0 : 0.0) - std::conj(r[i]) * r[j];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  Eigen::MatrixXcd rootm =
      es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      b[i * d + j] = rootm(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return b;
}

}  // namespace

std::vector<Filter> uep_complete(const Filter& lowpass, const DilationMatrix& A, GridSpec grid,
                                 double tol) {
  require(grid.dim == A.dim() && lowpass.dim() == A.dim(), errc::dimension_mismatch,
          "completion dimensions");
  std::vector<IntVec> shifts;
  try {
    shifts = coset_grid_shifts(A, grid);
  } catch (const Error& e) {
    if (e.code() == errc::grid_not_coset_compatible) {
      fail(errc::orbit_not_on_grid, "completion orbits do not land on the grid");
    }
    throw;
  }
  const std::size_t d = shifts.size();
  const std::size_t total = grid.point_count();

  // Pass 1: gather one representative per coset orbit and screen the
  // sub-QMF condition over the whole grid before committing.
  std::vector<IntVec> reps;
  double worst = 0.0;
  RealVec worst_t;
  {
    std::vector<std::uint8_t> seen(total, 0);
    IntVec idx(grid.dim, 0);
    do {
      if (seen[grid.flat_index(idx)]) continue;
      double orbit_sum = 0.0;
      for (const IntVec& sh : shifts) {
        const IntVec p = shifted(idx, sh, grid.m);
        seen[grid.flat_index(p)] = 1;
        orbit_sum += std::norm(lowpass.eval_grid(p, grid.m));
      }
      if (orbit_sum > worst) {
        worst = orbit_sum;
        worst_t = grid.point(idx);
      }
      reps.push_back(idx);
    } while (grid.next(idx));
    if (worst > 1.0 + tol) {
      std::string at = "(";
      for (double v : worst_t) at += std::to_string(v) + ",";
      at.back() = ')';
      fail(errc::sub_qmf_violated,
           "orbit sum " + std::to_string(worst) + " > 1 at t = " + at);
    }
  }

  std::vector<std::vector<cdouble>> values(d, std::vector<cdouble>(total, cdouble{0, 0}));
  std::vector<cdouble> r(d);
  for (const IntVec& rep : reps) {
    for (std::size_t k = 0; k < d; ++k)
      r[k] = lowpass.eval_grid(shifted(rep, shifts[k], grid.m), grid.m);
    const std::vector<cdouble> b = psd_root_rank_one(r);
    for (std::size_t l = 0; l < d; ++l) {
      for (std::size_t k = 0; k < d; ++k) {
        const IntVec p = shifted(rep, shifts[k], grid.m);
        values[l][grid.flat_index(p)] = b[l * d + k];
      }
    }
  }

  std::vector<Filter> out;
  out.reserve(d);
  for (std::size_t l = 0; l < d; ++l)
    out.push_back(Filter::grid(grid.dim, grid.m, std::move(values[l])));
  return out;
}

FrameletHat::FrameletHat(DilationMatrix A, Filter h, PhiHat phi, double scale)
    : A_(std::move(A)), h_(std::move(h)), phi_(std::move(phi)), scale_(scale) {}

cdouble FrameletHat::eval(std::span<const double> s) const {
  const RealVec u = A_.apply_transpose_inverse(s);
  return scale_ * h_.eval(u) * phi_.eval(u);
}

FrameletHat FrameletHat::scaled(double factor) const {
  FrameletHat f = *this;
  f.scale_ *= factor;
  return f;
}

std::vector<FrameletHat> build_framelets(const FilterBank& bank, const PhiHat& phi) {
  require(phi.dim() == bank.dim(), errc::dimension_mismatch, "profile dimension vs bank");
  std::vector<FrameletHat> out;
  out.reserve(bank.highpass.size());
  for (const Filter& h : bank.highpass) out.emplace_back(bank.dilation, h, phi);
  return out;
}

OrthoReport mra_orthogonality_check(const FilterBank& bank, const ZeroSetMask* mask,
                                    GridSpec grid, double tol) {
  check_bank(bank, grid);
  const std::vector<IntVec> shifts = coset_grid_shifts(bank.dilation, grid);
  const std::size_t total = grid.point_count();

  OrthoReport report;
  report.pass = true;
  for (std::size_t l = 0; l < bank.highpass.size(); ++l) {
    ResidualAccumulator acc;
    std::size_t masked = 0;
    IntVec idx(grid.dim, 0);
    do {
      if (mask && mask->excluded(idx)) {
        ++masked;
        continue;
      }
      cdouble sum{0.0, 0.0};
      for (const IntVec& sh : shifts) {
        const IntVec p = shifted(idx, sh, grid.m);
        sum += bank.lowpass.eval_grid(p, grid.m) *
               std::conj(bank.highpass[l].eval_grid(p, grid.m));
      }
      acc.add(grid.point(idx), std::abs(sum));
    } while (grid.next(idx));
    VerificationReport r;
    r.condition_id = "ORTHO[" + std::to_string(l + 1) + "]";
    r.grid = grid;
    r.masked_fraction = static_cast<double>(masked) / static_cast<double>(total);
    acc.finish(r, tol);
    report.max_residual = std::max(report.max_residual, r.max_residual);
    report.pass = report.pass && r.pass;
    report.per_generator.push_back(std::move(r));
  }
  return report;
}

}  // namespace framelet
