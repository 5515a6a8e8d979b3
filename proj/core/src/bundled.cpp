#include "framelet/bundled.hpp"

#include <cmath>

namespace framelet {

namespace {

TrigPolynomial poly1(std::initializer_list<std::pair<std::int64_t, cdouble>> coeffs) {
  TrigPolynomial p(1);
  for (const auto& [k, c] : coeffs) p.set(IntVec{k}, c);
  return p;
}

}  // namespace

BankFile bundled_haar() {
  BankFile bank;
  bank.dimension = 1;
  bank.dilation = {2};
  bank.filters.emplace_back("H0", Filter(poly1({{0, 0.5}, {1, 0.5}})));
  bank.filters.emplace_back("H1", Filter(poly1({{0, 0.5}, {1, -0.5}})));
  bank.phi.kind = PhiSpec::Kind::named;
  bank.phi.name = "haar";
  bank.meta.name = "haar";
  bank.meta.mask_mode = "none";
  bank.meta.expected = {{"verify-uep", "pass"}, {"ortho", "pass"},      {"frame-bounds", "pass"},
                        {"calderon", "pass"},   {"two-scale", "pass"},  {"density-probe", "pass"},
                        {"complete", "pass"},   {"build-framelet", "pass"}};
  bank.meta.expected_bounds = {{1.0, 1.0}};
  bank.meta.notes = "orthonormal scaling function; translates have bracket identically 1";
  return bank;
}

BankFile bundled_linear_spline() {
  const double r = std::sqrt(2.0) / 4.0;
  BankFile bank;
  bank.dimension = 1;
  bank.dilation = {2};
  bank.filters.emplace_back("H0", Filter(poly1({{-1, 0.25}, {0, 0.5}, {1, 0.25}})));
  bank.filters.emplace_back("H1", Filter(poly1({{-1, -r}, {1, r}})));
  bank.filters.emplace_back("H2", Filter(poly1({{-1, -0.25}, {0, 0.5}, {1, -0.25}})));
  bank.phi.kind = PhiSpec::Kind::named;
  bank.phi.name = "hat";
  bank.meta.name = "linear-spline";
  bank.meta.mask_mode = "none";
  bank.meta.expected = {{"verify-uep", "pass"},
                        {"ortho", "fail"},
                        {"frame-bounds", "pass"},
                        {"density-probe", "pass"},
                        {"build-framelet", "pass"}};
  bank.meta.expected_bounds = {{1.0 / 3.0, 1.0}};
  bank.meta.notes =
      "three-generator framelet arising from the spline multiresolution but not associated "
      "with it: the mixed coset sums do not vanish";
  return bank;
}

BankFile bundled_shannon_fmra() {
  BankFile bank;
  bank.dimension = 1;
  bank.dilation = {2};
  bank.phi.kind = PhiSpec::Kind::named;
  bank.phi.name = "box:-1/4:1/4";
  bank.meta.name = "shannon-fmra";
  bank.meta.mask_mode = "auto";
  bank.meta.expected = {{"frame-bounds", "pass"}, {"density-probe", "pass"}};
  bank.meta.expected_bounds = {{1.0, 1.0}};
  bank.meta.notes =
      "half-band profile: the bracket is the indicator of [-1/4,1/4]+Z, so half of every "
      "grid is masked; the ideal low-pass mask is not a trig polynomial, hence no filters";
  return bank;
}

BankFile bundled_quincunx_haar() {
  BankFile bank;
  bank.dimension = 2;
  bank.dilation = {1, 1, 1, -1};
  TrigPolynomial h0(2), h1(2);
  h0.set({0, 0}, 0.5).set({1, 0}, 0.5);
  h1.set({0, 0}, -0.5).set({1, 0}, 0.5);
  bank.filters.emplace_back("H0", Filter(std::move(h0)));
  bank.filters.emplace_back("H1", Filter(std::move(h1)));
  bank.phi.kind = PhiSpec::Kind::product;
  bank.phi.depth = 24;
  bank.meta.name = "quincunx-haar";
  bank.meta.mask_mode = "none";
  bank.meta.expected = {{"verify-uep", "pass"}, {"ortho", "pass"}, {"complete", "pass"}};
  bank.meta.notes = "twin-dragon scaling set tiles the plane, so translates are orthonormal";
  return bank;
}

std::vector<BankFile> bundled_banks() {
  return {bundled_haar(), bundled_linear_spline(), bundled_shannon_fmra(),
          bundled_quincunx_haar()};
}

BankFile build_haar_oep_bank(GridSpec grid) {
  const DilationMatrix A = DilationMatrix::validate(1, {2});
  const TrigPolynomial h0 = poly1({{0, 0.5}, {1, 0.5}});
  // S(t) = (2 + cos 2πt)/3: S(0) = 1, S >= 1/3, and the reduced mask
  // satisfies the sub-QMF bound (its orbit sum is 1 - 32u²/(3+4u) with
  // u = sin²πt cos²πt).
  const TrigPolynomial s = poly1({{-1, 1.0 / 6.0}, {0, 2.0 / 3.0}, {1, 1.0 / 6.0}});

  FilterBank seed{A, Filter(h0), {}, Filter(s)};
  const FilterBank reduced = oep_reduce(seed, grid);
  const std::vector<Filter> completed = uep_complete(reduced.lowpass, A, grid);

  // Lift the completed filters back through the weight: H_ℓ = sqrt(S) Q_ℓ.
  BankFile bank;
  bank.dimension = 1;
  bank.dilation = {2};
  bank.filters.emplace_back("H0", Filter(h0));
  int label = 1;
  for (const Filter& q : completed) {
    std::vector<cdouble> values(grid.point_count());
    IntVec idx(grid.dim, 0);
    std::size_t flat = 0;
    do {
      const double st = s.eval_grid(idx, grid.m).real();
      values[flat++] = std::sqrt(std::max(st, 0.0)) * q.eval_grid(idx, grid.m);
    } while (grid.next(idx));
    bank.filters.emplace_back("H" + std::to_string(label++),
                              Filter::grid(grid.dim, grid.m, std::move(values)));
  }
  bank.weight = Filter(s);
  bank.phi.kind = PhiSpec::Kind::named;
  bank.phi.name = "haar";
  bank.meta.name = "haar-oep";
  bank.meta.mask_mode = "none";
  bank.meta.expected = {{"verify-oep", "pass"}};
  bank.meta.notes = "oblique bank over the Haar profile; high passes are grid-sampled";
  return bank;
}

}  // namespace framelet
