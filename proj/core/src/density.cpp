#include "framelet/density.hpp"

#include <cmath>
#include <random>

namespace framelet {

namespace {

double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform sample from the Euclidean ball B_r (rejection from the cube).
RealVec sample_ball(std::mt19937_64& rng, int dim, double r) {
  RealVec u(dim);
  while (true) {
    double norm2 = 0.0;
    for (int i = 0; i < dim; ++i) {
      u[i] = (2.0 * u01(rng) - 1.0) * r;
      norm2 += u[i] * u[i];
    }
    if (norm2 < r * r) return u;
  }
}

bool trend_ok(std::span<const double> ratios, std::span<const double> errs, bool increasing) {
  const std::size_t n = ratios.size();
  const std::size_t from = n > 3 ? n - 3 : 0;
  for (std::size_t i = from; i + 1 < n; ++i) {
    const double slack = 3.0 * (errs[i] + errs[i + 1]) + 1e-12;
    if (increasing && ratios[i + 1] < ratios[i] - slack) return false;
    if (!increasing && ratios[i + 1] > ratios[i] + slack) return false;
  }
  return true;
}

}  // namespace

const char* limit_verdict_name(LimitVerdict v) {
  switch (v) {
    case LimitVerdict::converges_to_1: return "converges-to-1";
    case LimitVerdict::converges_to_0: return "converges-to-0";
    case LimitVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Expansive Expansive::of(const DilationMatrix& A) {
  Expansive e;
  e.dim_ = A.dim();
  e.inv_.resize(static_cast<std::size_t>(e.dim_) * e.dim_);
  RealVec col(e.dim_, 0.0);
  for (int j = 0; j < e.dim_; ++j) {
    col.assign(e.dim_, 0.0);
    col[j] = 1.0;
    const RealVec c = A.apply_inverse(col);
    for (int i = 0; i < e.dim_; ++i) e.inv_[static_cast<std::size_t>(i) * e.dim_ + j] = c[i];
  }
  if (e.dim_ == 1) e.scale_ = std::abs(A.entry(0, 0));
  return e;
}

Expansive Expansive::adjoint_of(const DilationMatrix& A) { return of(A.transposed()); }

RealVec Expansive::apply_inverse_pow(std::span<const double> v, int j) const {
  require(v.size() == static_cast<std::size_t>(dim_), errc::dimension_mismatch,
          "vector dimension");
  RealVec x(v.begin(), v.end());
  RealVec y(dim_);
  for (int step = 0; step < j; ++step) {
    for (int i = 0; i < dim_; ++i) {
      double acc = 0.0;
      for (int k = 0; k < dim_; ++k) acc += inv_[static_cast<std::size_t>(i) * dim_ + k] * x[k];
      y[i] = acc;
    }
    x.swap(y);
  }
  return x;
}

DensityEstimate density_ratio(const MeasurableSet& E, const Expansive& map,
                              std::span<const double> x, double r, int j, std::int64_t samples,
                              std::uint64_t seed) {
  require(r > 0.0, errc::dimension_mismatch, "radius must be positive");
  require(j >= 0, errc::dimension_mismatch, "scale index must be nonnegative");
  require(E.dim == map.dim(), errc::dimension_mismatch, "set dimension vs map");

  if (E.exact_measure && map.dim() == 1 && map.integer_scale()) {
    // Exact interval path: the window is x + |a|^{-j} (-r, r).
    const std::int64_t a = *map.integer_scale();
    bool fits = true;
    std::int64_t pw = 1;
    for (int k = 0; k < j && fits; ++k) {
      if (pw > (std::int64_t{1} << 62) / a) {
        fits = false;
      } else {
        pw *= a;
      }
    }
    if (fits) {
      try {
        const Rational scale(1, pw);
        const Rational xr = Rational::from_double(x[0]);
        const Rational rr = Rational::from_double(r);
        const Rational half = scale * rr;
        const Rational measure = E.exact_measure(xr - half, xr + half);
        const Rational ratio = measure / (Rational(2) * half);
        return DensityEstimate{ratio.to_double(), 0.0, true};
      } catch (const Error& e) {
        if (e.code() != errc::overflow) throw;
        // fall through to Monte Carlo
      }
    }
  }

  require(samples >= 1000, errc::dimension_mismatch, "at least 10^3 samples");
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(j) * 0x9e3779b97f4a7c15ULL);
  std::int64_t hits = 0;
  RealVec y(map.dim());
  for (std::int64_t s = 0; s < samples; ++s) {
    const RealVec u = sample_ball(rng, map.dim(), r);
    const RealVec v = map.apply_inverse_pow(u, j);
    for (int i = 0; i < map.dim(); ++i) y[i] = x[i] + v[i];
    if (E.contains(y)) ++hits;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  const double se = std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(samples));
  return DensityEstimate{p, se, false};
}

DensityCurve density_curve(const MeasurableSet& E, const Expansive& map,
                           std::span<const double> x, double r, std::span<const int> j_list,
                           std::int64_t samples, std::uint64_t seed, double trend_tol) {
  DensityCurve curve;
  for (int j : j_list) {
    const DensityEstimate est = density_ratio(E, map, x, r, j, samples, seed);
    curve.j_values.push_back(j);
    curve.ratios.push_back(est.ratio);
    curve.stderrs.push_back(est.stderr_est);
  }
  if (!curve.ratios.empty()) {
    const double last = curve.ratios.back();
    const double last_err = 3.0 * curve.stderrs.back();
    if (last >= 1.0 - trend_tol - last_err && trend_ok(curve.ratios, curve.stderrs, true)) {
      curve.verdict = LimitVerdict::converges_to_1;
    } else if (last <= trend_tol + last_err && trend_ok(curve.ratios, curve.stderrs, false)) {
      curve.verdict = LimitVerdict::converges_to_0;
    }
  }
  return curve;
}

DensityCurve approx_continuity_probe(const std::function<cdouble(std::span<const double>)>& f,
                                     const Expansive& map, std::span<const double> x,
                                     cdouble target, double delta, std::span<const int> j_list,
                                     double r, std::int64_t samples, std::uint64_t seed,
                                     double trend_tol) {
  require(delta > 0.0, errc::dimension_mismatch, "delta must be positive");
  MeasurableSet E;
  E.dim = map.dim();
  E.description = "superlevel set {|f - target| < delta}";
  E.contains = [f, target, delta](std::span<const double> y) {
    return std::abs(f(y) - target) < delta;
  };
  return density_curve(E, map, x, r, j_list, samples, seed, trend_tol);
}

LocallyNonzeroResult locally_nonzero_probe(
    const std::function<cdouble(std::span<const double>)>& f, const Expansive& map,
    std::span<const double> x, double eps, double r, int j_max, std::int64_t samples,
    std::uint64_t seed, double zero_tol) {
  require(eps > 0.0 && r > 0.0, errc::dimension_mismatch, "eps and r must be positive");
  MeasurableSet zero_set;
  zero_set.dim = map.dim();
  zero_set.description = "zero set {f = 0}";
  zero_set.contains = [f, zero_tol](std::span<const double> y) {
    return std::abs(f(y)) <= zero_tol;
  };
  LocallyNonzeroResult result;
  for (int j = 1; j <= j_max; ++j) {
    const DensityEstimate est = density_ratio(zero_set, map, x, r, j, samples, seed);
    result.zero_fraction.j_values.push_back(j);
    result.zero_fraction.ratios.push_back(est.ratio);
    result.zero_fraction.stderrs.push_back(est.stderr_est);
    if (est.ratio < eps) {
      result.passing_j = j;
      break;
    }
  }
  result.zero_fraction.verdict =
      result.passing_j ? LimitVerdict::converges_to_0 : LimitVerdict::inconclusive;
  return result;
}

// ---------------------------------------------------------------------
// Spiked profile and its plateau set
// ---------------------------------------------------------------------

namespace {

// Spike ell covers (2^{-ell-1}, 2^{-ell-1} + 2^{-2ell-2}).
bool in_spike(double y, int* ell_out = nullptr) {
  if (y <= 0.0 || y >= 0.75 + 1e-300) return false;
  int e = 0;
  std::frexp(y, &e);  // y in [2^{e-1}, 2^e)
  const int ell = -e;
  if (ell < 0) return false;
  const double a = std::ldexp(1.0, -ell - 1);
  const double b = a + std::ldexp(1.0, -2 * ell - 2);
  if (y > a && y < b) {
    if (ell_out) *ell_out = ell;
    return true;
  }
  return false;
}

Rational clip_len(const Rational& lo, const Rational& hi, const Rational& a, const Rational& b) {
  const Rational l = lo < a ? a : lo;
  const Rational h = hi < b ? hi : b;
  return h > l ? h - l : Rational(0);
}

}  // namespace

double spiked_profile(double y) {
  double v = (y >= -1.0 && y <= 1.0) ? 1.0 : 0.0;
  int ell = 0;
  if (in_spike(y, &ell)) v += std::ldexp(1.0, ell + 2);
  return v;
}

MeasurableSet spiked_profile_plateau() {
  MeasurableSet F;
  F.dim = 1;
  F.description = "[-1,1] minus the dyadic spike intervals";
  F.contains = [](std::span<const double> y) {
    return y[0] >= -1.0 && y[0] <= 1.0 && !in_spike(y[0]);
  };
  // Spikes up to ell = 28 are handled interval by interval; beyond that
  // the whole remaining series lives in (0, 2^{-29}) and its measure is
  // the exact geometric tail 2^{-58}/3, still within 64-bit rationals.
  // Windows that cut through that region fall back to Monte Carlo.
  constexpr int kTailStart = 29;
  F.exact_measure = [](const Rational& lo, const Rational& hi) {
    require(lo < hi, errc::dimension_mismatch, "empty window");
    Rational measure = clip_len(lo, hi, Rational(-1), Rational(1));
    for (int ell = 0; ell < kTailStart; ++ell) {
      const Rational a = Rational::pow2(-ell - 1);
      const Rational b = a + Rational::pow2(-2 * ell - 2);
      measure -= clip_len(lo, hi, a, b);
    }
    const Rational tail_hi = Rational::pow2(-kTailStart - 1) + Rational::pow2(-2 * kTailStart - 2);
    if (hi >= tail_hi && lo <= Rational(0)) {
      measure -= Rational::pow2(-2 * kTailStart) / Rational(3);
    } else if (hi > Rational(0) && lo < tail_hi) {
      fail(errc::overflow, "window cuts through the sub-2^-29 spike region");
    }
    return measure;
  };
  return F;
}

Rational spiked_plateau_density(int j) {
  require(j >= 0 && j <= 30, errc::overflow, "closed-form density needs 0 <= j <= 30");
  return Rational(1) - Rational::pow2(-j) / Rational(6);
}

TestBump default_test_bump() {
  TestBump g;
  g.inner = 1.0;
  g.outer = 2.0;
  g.eval = [](double t) {
    const double a = std::abs(t);
    if (a <= 1.0) return 1.0;
    if (a >= 2.0) return 0.0;
    const double u = 2.0 - a;      // in (0,1)
    return u * u * (3.0 - 2.0 * u);  // smoothstep ramp
  };
  return g;
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm,
               double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-11) {
  if (b <= a) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

// Integral of g over [a,b], split at the ramp joints so the adaptive
// rule only ever sees smooth pieces.
double integrate_bump(const TestBump& g, double a, double b) {
  const double joints[] = {-g.outer, -g.inner, g.inner, g.outer};
  double total = 0.0;
  double lo = a;
  for (double j : joints) {
    if (j > lo && j < b) {
      total += integrate(g.eval, lo, j);
      lo = j;
    }
  }
  total += integrate(g.eval, lo, b);
  return total;
}

void validate_bump(const TestBump& g) {
  require(g.inner > 0.0 && g.outer > g.inner, errc::bad_test_function,
          "bump needs 0 < inner < outer");
  for (int i = 0; i <= 8; ++i) {
    const double t = -g.inner + 2.0 * g.inner * i / 8.0;
    require(std::abs(g.eval(t) - 1.0) <= 1e-12, errc::bad_test_function,
            "bump must equal 1 on the inner plateau");
  }
  require(g.eval(g.outer + 1e-9) == 0.0 && g.eval(-g.outer - 1e-9) == 0.0,
          errc::bad_test_function, "bump must vanish outside its support");
  double prev = 0.0;
  for (int i = 0; i <= 32; ++i) {
    const double t = -g.outer + (g.outer - g.inner) * i / 32.0;
    const double v = g.eval(t);
    require(v >= prev - 1e-12 && v >= -1e-12, errc::bad_test_function,
            "bump must increase on the left ramp");
    prev = v;
  }
  prev = 1.0;
  for (int i = 0; i <= 32; ++i) {
    const double t = g.inner + (g.outer - g.inner) * i / 32.0;
    const double v = g.eval(t);
    require(v <= prev + 1e-12 && v >= -1e-12, errc::bad_test_function,
            "bump must decrease on the right ramp");
    prev = v;
  }
}

}  // namespace

HanRecord han_counterexample(int j, const TestBump* g_in, int spike_cut) {
  require(j >= 0, errc::dimension_mismatch, "scale index must be nonnegative");
  require(spike_cut >= 1 && spike_cut <= 60, errc::dimension_mismatch,
          "spike cut must be in [1,60]");
  const TestBump g = g_in ? *g_in : default_test_bump();
  validate_bump(g);

  HanRecord rec;

  // Exact window average q_j = 2^j ∫_{-2^{-j}}^{2^{-j}} f: the box part
  // contributes 2·2^{-j}; spikes ell >= j lie inside the window and each
  // carries mass 2^{-ell}, summed exactly with the geometric tail.
  Rational integral = Rational(2) * Rational::pow2(-j);
  Rational spikes(0);
  for (int ell = j; ell <= spike_cut; ++ell) spikes += Rational::pow2(-ell);
  spikes += Rational::pow2(-spike_cut);  // exact tail Σ_{ell>cut} 2^{-ell}
  integral += spikes;
  rec.q = Rational::pow2(j) * integral;

  // Pairing ⟨|f(2^{-j}·)|, g⟩: box part plus one term per dilated spike
  // interval (2^{j-ell-1}, 2^{j-ell-1} + 2^{j-2ell-2}).
  const double pow2j = std::ldexp(1.0, j);
  double pairing = integrate_bump(g, -std::min(g.outer, pow2j), std::min(g.outer, pow2j));
  for (int ell = 0; ell <= spike_cut; ++ell) {
    const double a = std::ldexp(1.0, j - ell - 1);
    const double b = a + std::ldexp(1.0, j - 2 * ell - 2);
    const double lo = std::max(a, -g.outer);
    const double hi = std::min(b, g.outer);
    if (hi > lo) pairing += std::ldexp(1.0, ell + 2) * integrate_bump(g, lo, hi);
  }
  // Spikes past the cut sit at positions below 2^{j-cut-1}, well inside
  // the plateau where g = 1; their pairing mass is exactly 2^{j-cut}.
  require(std::ldexp(1.0, j - spike_cut - 1) < g.inner, errc::bad_test_function,
          "spike cut too shallow for this scale");
  pairing += std::ldexp(1.0, j - spike_cut);
  rec.pairing = pairing;

  rec.one_pairing = integrate_bump(g, -g.outer, g.outer);
  return rec;
}

}  // namespace framelet
