// Acceptance suite: one criterion per line, every tolerance pinned in
// code.  Exit status is the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "framelet/bundled.hpp"

using namespace framelet;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

void criterion(int id, const std::string& label, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::printf("[%s] %02d %-24s %s\n", ok ? "PASS" : "FAIL", id, label.c_str(), detail.c_str());
  if (!ok) ++g_failures;
}

DilationMatrix dyadic() { return DilationMatrix::validate(1, {2}); }

TrigPolynomial poly1(std::initializer_list<std::pair<std::int64_t, cdouble>> coeffs) {
  TrigPolynomial p(1);
  for (const auto& [k, c] : coeffs) p.set(IntVec{k}, c);
  return p;
}

FilterBank haar_bank() { return bundled_haar().to_bank(); }
FilterBank spline_bank() { return bundled_linear_spline().to_bank(); }

std::vector<RealVec> seeded_points(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RealVec> pts;
  for (int i = 0; i < count; ++i) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    pts.push_back(RealVec{0.02 + 0.96 * u});
  }
  return pts;
}

char buffer[256];

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  std::snprintf(buffer, sizeof(buffer), pattern, a, b, c);
  return buffer;
}

}  // namespace

int main() {
  criterion(1, "haar-uep", [](std::string& detail) {
    const auto report = check_uep(haar_bank(), nullptr, GridSpec{1, 4096}, 1e-12);
    detail = fmt("max residual %.3e (tol 1e-12)", report.max_residual);
    return report.pass && report.max_residual < 1e-12;
  });

  criterion(2, "spline-arising-not-assoc", [](std::string& detail) {
    const auto bank = spline_bank();
    const GridSpec grid{1, 4096};
    const auto uep = check_uep(bank, nullptr, grid, 1e-12);
    const auto ortho = mra_orthogonality_check(bank, nullptr, grid, 1e-10);
    const double target = std::sqrt(2.0) / 4.0;
    // Residual of the coset sum at exactly t = 1/8 (grid index 512).
    cdouble at_eighth{0.0, 0.0};
    for (std::int64_t shift : {std::int64_t{0}, std::int64_t{2048}}) {
      const IntVec p{512 + shift};
      at_eighth += bank.lowpass.eval_grid(p, grid.m) *
                   std::conj(bank.highpass[0].eval_grid(p, grid.m));
    }
    detail = fmt("uep %.3e, ortho max %.9f at t=1/8 %.9f", uep.max_residual,
                 ortho.per_generator[0].max_residual, std::abs(at_eighth));
    return uep.pass && uep.max_residual < 1e-12 && !ortho.pass &&
           std::abs(ortho.per_generator[0].max_residual - target) <= 1e-10 &&
           std::abs(std::abs(at_eighth) - target) <= 1e-10;
  });

  criterion(3, "infinite-product", [](std::string& detail) {
    const auto phi = PhiHat::from_mask(dyadic(), poly1({{0, 0.5}, {1, 0.5}}), 30,
                                       PhiMode::modulus);
    const RealVec half{0.5};
    const double value = phi.eval_modulus(half);
    const double drift =
        std::abs(phi.eval_at_depth(half, 30).real() - phi.eval_at_depth(half, 60).real());
    detail = fmt("|phi(1/2)|=%.8f vs 2/pi=%.8f, drift %.2e", value, 2.0 / kPi, drift);
    return std::abs(value - 2.0 / kPi) < 1e-6 && drift < 1e-6;
  });

  criterion(4, "fundamental-function", [](std::string& detail) {
    const auto bank = haar_bank();
    const auto theta = fundamental_function(bank, RatVec{Rational(1, 3)}, 40);
    const auto origin = fundamental_function(bank, RatVec{Rational(0)}, 40);
    double worst_recursion = theta.recursion_residual;
    std::mt19937_64 rng(20260809);
    for (int i = 0; i < 100; ++i) {
      const auto num = static_cast<std::int64_t>(rng() % 65536);
      const auto t = fundamental_function(bank, RatVec{Rational(num, 65536)}, 40);
      worst_recursion = std::max(worst_recursion, t.recursion_residual);
    }
    detail = fmt("theta(1/3)=%.9f, theta(0)=%.1f, worst recursion %.2e", theta.value,
                 origin.value, worst_recursion);
    return std::abs(theta.value - 1.0) < 1e-6 && origin.value == 0.0 &&
           worst_recursion < 1e-12;
  });

  criterion(5, "oep-pipeline", [](std::string& detail) {
    const GridSpec grid{1, 1024};
    const BankFile bank = build_haar_oep_bank(grid);
    ProbeSpec probe;
    probe.samples = 100000;
    const auto oep = check_oep(bank.to_bank(), bank.phi_hat(), nullptr, grid, 1e-10, probe);
    const FilterBank reduced = oep_reduce(bank.to_bank(), grid);
    const auto uep = check_uep(reduced, nullptr, grid, 1e-10);
    detail = fmt("oep max %.3e, reduced uep max %.3e (tol 1e-10)", oep.max_residual,
                 uep.max_residual);
    return oep.pass && oep.max_residual < 1e-10 && uep.pass && uep.max_residual < 1e-10;
  });

  criterion(6, "completion", [](std::string& detail) {
    const GridSpec grid{1, 1024};
    const Filter h0 = Filter(poly1({{0, 0.5}, {1, 0.5}}));
    const auto high = uep_complete(h0, dyadic(), grid);
    double worst = 0.0;
    IntVec idx(1, 0);
    do {
      const IntVec other{idx[0] + 512};
      cdouble dot = h0.eval_grid(idx, grid.m) * std::conj(h0.eval_grid(other, grid.m));
      double n0 = std::norm(h0.eval_grid(idx, grid.m));
      for (const Filter& h : high) {
        dot += h.eval_grid(idx, grid.m) * std::conj(h.eval_grid(other, grid.m));
        n0 += std::norm(h.eval_grid(idx, grid.m));
      }
      worst = std::max(worst, std::abs(dot));
      worst = std::max(worst, std::abs(n0 - 1.0));
    } while (grid.next(idx));

    bool rejected = false;
    try {
      uep_complete(Filter(TrigPolynomial::constant(1, 1.1)), dyadic(), grid);
    } catch (const Error& e) {
      rejected = e.code() == errc::sub_qmf_violated;
    }
    detail = fmt("worst orthonormality residual %.3e (tol 1e-12), sub-QMF rejected: %.0f",
                 worst, rejected ? 1.0 : 0.0);
    return worst < 1e-12 && rejected;
  });

  criterion(7, "calderon", [](std::string& detail) {
    const auto bank = haar_bank();
    const auto phi = PhiHat::named("haar");
    const auto psis = build_framelets(bank, phi);
    const auto pts = seeded_points(256, 746312957);
    const auto report = calderon_check(psis, bank.dilation, pts, ScaleRange{-25, 25},
                                       {IntVec{1}}, 1e-4, 1e-8);
    auto scaled = psis;
    scaled[0] = scaled[0].scaled(0.5);
    const auto broken =
        calderon_check(scaled, bank.dilation, pts, ScaleRange{-25, 25}, {}, 1e-4, 1e-8);
    double worst_scaled = 0.0;
    for (const auto& [t, v] : broken.profile) {
      worst_scaled = std::max(worst_scaled, std::abs(v - 0.25));
    }
    detail = fmt("|sum-1| %.3e, cross %.3e, halved system off 1/4 by %.2e",
                 report.sum.max_residual, report.cross[0].max_residual, worst_scaled);
    return report.pass && report.sum.max_residual < 1e-4 &&
           report.cross[0].max_residual < 1e-8 && !broken.pass && worst_scaled < 1e-4;
  });

  criterion(8, "two-scale-identity", [](std::string& detail) {
    const auto bank = haar_bank();
    const auto phi = PhiHat::named("haar");
    const QuadratureSpec quad;
    FilterBank damped = bank;
    damped.highpass[0] = Filter(poly1({{0, 0.45}, {1, -0.45}}));
    double worst_ok = 0.0, best_damped = 1e9;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto f = TestSignal::random(seed).normalized();
      worst_ok = std::max(worst_ok, two_scale_energy(bank, phi, f, 3, quad));
      best_damped = std::min(best_damped, two_scale_energy(damped, phi, f, 3, quad));
    }
    detail = fmt("worst residual %.3e (tol 1e-8), damped >= %.3e (need > 1e-3)", worst_ok,
                 best_damped);
    return worst_ok < 1e-8 && best_damped > 1e-3;
  });

  criterion(9, "frame-bounds", [](std::string& detail) {
    const GridSpec grid{1, 4096};
    const auto hat = translate_frame_bounds(Bracket(PhiHat::named("hat"), 64), nullptr, grid);
    const auto shannon_phi = PhiHat::named("box:-1/4:1/4");
    const Bracket sb(shannon_phi, 64);
    const auto mask = ZeroSetMask::compute(sb, grid, 1e-10);
    const auto shannon = translate_frame_bounds(sb, &mask, grid);
    detail = fmt("hat (%.7f, %.7f), shannon masked %.4f", hat.lower, hat.upper,
                 shannon.masked_fraction);
    return std::abs(hat.lower - 1.0 / 3.0) < 1e-6 && std::abs(hat.upper - 1.0) < 1e-6 &&
           std::abs(shannon.lower - 1.0) < 1e-9 && std::abs(shannon.upper - 1.0) < 1e-9 &&
           std::abs(shannon.masked_fraction - 0.5) < 0.01;
  });

  criterion(10, "empirical-parseval", [](std::string& detail) {
    const auto bank = haar_bank();
    const auto psis = build_framelets(bank, PhiHat::named("haar"));
    const QuadratureSpec quad;
    double worst_ratio_lo = 1.0, worst_ratio_hi = 1.0, worst_gap = 0.0;
    for (std::uint64_t seed : {201u, 202u, 203u}) {
      const auto f = TestSignal::random(seed).normalized();
      const auto affine = empirical_parseval(psis, bank.dilation, f, ScaleRange{-8, 8},
                                             SystemKind::affine, quad);
      const auto quasi = empirical_parseval(psis, bank.dilation, f, ScaleRange{-8, 8},
                                            SystemKind::quasi_affine, quad);
      worst_ratio_lo = std::min(worst_ratio_lo, affine.ratio);
      worst_ratio_hi = std::max(worst_ratio_hi, affine.ratio);
      worst_gap = std::max(worst_gap, std::abs(affine.ratio - quasi.ratio));
    }
    detail = fmt("affine ratio in [%.6f, %.6f], |affine-quasi| <= %.2e", worst_ratio_lo,
                 worst_ratio_hi, worst_gap);
    return worst_ratio_lo >= 0.99 && worst_ratio_hi <= 1.0001 && worst_gap < 1e-2;
  });

  criterion(11, "counterexample", [](std::string& detail) {
    bool q_exact = true;
    for (int j = 0; j <= 10; ++j) q_exact = q_exact && han_counterexample(j).q == Rational(4);
    const auto rec = han_counterexample(1);
    const bool pairing_ok =
        rec.pairing >= 4.0 - 1e-6 && std::abs(rec.one_pairing - 3.0) <= 1e-6 &&
        rec.pairing > rec.one_pairing;
    const auto F = spiked_profile_plateau();
    MeasurableSet mc_only;
    mc_only.dim = 1;
    mc_only.contains = F.contains;
    const auto map = Expansive::of(dyadic());
    const RealVec origin{0.0};
    bool mc_ok = true;
    double worst_sigma = 0.0;
    for (int j = 1; j <= 8; ++j) {
      const auto mc = density_ratio(mc_only, map, origin, 1.0, j, 100000, 20260809);
      const double closed = spiked_plateau_density(j).to_double();
      const double sigmas = std::abs(mc.ratio - closed) / std::max(mc.stderr_est, 1e-300);
      worst_sigma = std::max(worst_sigma, sigmas);
      mc_ok = mc_ok && std::abs(mc.ratio - closed) <= 3.0 * mc.stderr_est + 1e-12;
    }
    detail = fmt("q=4 exact: %.0f, pairing %.4f > 3, worst MC deviation %.2f sigma",
                 q_exact ? 1.0 : 0.0, rec.pairing, worst_sigma);
    return q_exact && pairing_ok && mc_ok;
  });

  criterion(12, "coarse-scale-decay", [](std::string& detail) {
    const QuadratureSpec quad;
    const std::vector<int> js{-4, -6, -8, -10};
    double worst = 0.0;
    for (const char* name : {"haar", "hat"}) {
      const auto phi = PhiHat::named(name);
      const auto f = TestSignal::random(31).normalized();
      const auto curve = coarse_scale_decay(phi, f, js, quad);
      if (!curve.pass) {
        detail = std::string("decay curve failed for ") + name;
        return false;
      }
      worst = std::max(worst, curve.energies.back());
    }
    detail = fmt("worst level energy at j=-10: %.3e (tol 1e-2)", worst);
    return worst < 1e-2;
  });

  criterion(13, "lattice-cosets", [](std::string& detail) {
    const auto quincunx = DilationMatrix::validate(2, {1, 1, 1, -1});
    const auto reps = coset_reps(quincunx);
    const std::vector<RatVec> expected = {{Rational(0), Rational(0)},
                                          {Rational(1, 2), Rational(1, 2)}};
    const bool quincunx_ok = reps.gamma_dual == expected;
    const std::vector<std::pair<int, std::vector<std::int64_t>>> battery = {
        {1, {2}},        {1, {3}},          {1, {-2}},
        {2, {2, 0, 0, 2}}, {2, {1, 1, 1, -1}}, {2, {1, -1, 1, 1}},
        {2, {2, 1, 0, 2}}, {2, {1, 2, -1, 1}},
        {3, {2, 0, 0, 0, 2, 0, 0, 0, 2}}, {3, {0, 0, 2, 1, 0, 0, 0, 1, 0}},
    };
    bool counts_ok = true;
    for (const auto& [n, entries] : battery) {
      const auto A = DilationMatrix::validate(n, entries);
      const auto r = coset_reps(A);
      counts_ok = counts_ok && r.omega.size() == static_cast<std::size_t>(A.det_abs()) &&
                  r.gamma_dual.size() == static_cast<std::size_t>(A.det_abs());
    }
    detail = fmt("quincunx reps exact: %.0f, battery of 10 count-checks: %.0f",
                 quincunx_ok ? 1.0 : 0.0, counts_ok ? 1.0 : 0.0);
    return quincunx_ok && counts_ok;
  });

  std::printf("%s: %d criteria failed\n", g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              g_failures);
  return g_failures;
}
