#include <benchmark/benchmark.h>

#include "framelet/bundled.hpp"

using namespace framelet;

namespace {

TrigPolynomial haar_mask() {
  TrigPolynomial h(1);
  h.set({0}, 0.5).set({1}, 0.5);
  return h;
}

void BM_TrigEvalGrid(benchmark::State& state) {
  TrigPolynomial p(1);
  for (std::int64_t k = -8; k <= 8; ++k) p.set({k}, cdouble{0.1, -0.05});
  IntVec idx{1234};
  for (auto _ : state) {
    benchmark::DoNotOptimize(p.eval_grid(idx, 4096));
  }
}
BENCHMARK(BM_TrigEvalGrid);

void BM_PhiHatProduct(benchmark::State& state) {
  const auto phi = PhiHat::from_mask(DilationMatrix::validate(1, {2}), haar_mask(),
                                     static_cast<int>(state.range(0)));
  const RealVec t{0.37};
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi.eval(t));
  }
}
BENCHMARK(BM_PhiHatProduct)->Arg(10)->Arg(30)->Arg(60);

void BM_BracketLatticeSum(benchmark::State& state) {
  const auto bare = PhiHat::closed_form(1, "hat-bare", [](std::span<const double> t) {
    const double x = 3.14159265358979323846 * t[0];
    const double s = std::abs(x) < 1e-8 ? 1.0 : std::sin(x) / x;
    return cdouble{s * s, 0.0};
  });
  const Bracket bracket(bare, static_cast<int>(state.range(0)));
  const RealVec t{0.37};
  for (auto _ : state) {
    benchmark::DoNotOptimize(bracket.eval(t));
  }
}
BENCHMARK(BM_BracketLatticeSum)->Arg(16)->Arg(64);

void BM_CheckUepHaar(benchmark::State& state) {
  const auto bank = bundled_haar().to_bank();
  const GridSpec grid{1, state.range(0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_uep(bank, nullptr, grid, 1e-12));
  }
}
BENCHMARK(BM_CheckUepHaar)->Arg(1024)->Arg(4096);

void BM_UepComplete(benchmark::State& state) {
  const Filter h0 = Filter(haar_mask());
  const auto A = DilationMatrix::validate(1, {2});
  const GridSpec grid{1, state.range(0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(uep_complete(h0, A, grid));
  }
}
BENCHMARK(BM_UepComplete)->Arg(1024)->Arg(4096);

void BM_FundamentalFunction(benchmark::State& state) {
  const auto bank = bundled_haar().to_bank();
  const RatVec t{Rational(1, 3)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(fundamental_function(bank, t, 40));
  }
}
BENCHMARK(BM_FundamentalFunction);

void BM_CalderonPoint(benchmark::State& state) {
  const auto bank = bundled_haar().to_bank();
  const auto psis = build_framelets(bank, PhiHat::named("haar"));
  const std::vector<RealVec> pts{RealVec{1.0 / 3.0}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        calderon_check(psis, bank.dilation, pts, ScaleRange{-25, 25}, {}, 1e-4, 1e-8));
  }
}
BENCHMARK(BM_CalderonPoint);

void BM_DensityRatioExact(benchmark::State& state) {
  const auto F = spiked_profile_plateau();
  const auto map = Expansive::of(DilationMatrix::validate(1, {2}));
  const RealVec x{0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(density_ratio(F, map, x, 1.0, 6, 1000, 1));
  }
}
BENCHMARK(BM_DensityRatioExact);

}  // namespace

BENCHMARK_MAIN();
