#include <doctest.h>

#include <cmath>

#include "framelet/density.hpp"

using namespace framelet;

namespace {

Expansive dyadic_map() { return Expansive::of(DilationMatrix::validate(1, {2})); }

MeasurableSet whole_line() {
  MeasurableSet E;
  E.dim = 1;
  E.description = "all of R";
  E.contains = [](std::span<const double>) { return true; };
  return E;
}

}  // namespace

TEST_CASE("density of the whole space is one with zero error") {
  const RealVec x{0.0};
  const auto est = density_ratio(whole_line(), dyadic_map(), x, 1.0, 3, 5000, 1);
  CHECK(est.ratio == 1.0);
  CHECK(est.stderr_est == 0.0);
}

TEST_CASE("plateau set density at scale 3 is exactly 47/48") {
  const auto F = spiked_profile_plateau();
  const RealVec x{0.0};
  const auto est = density_ratio(F, dyadic_map(), x, 1.0, 3, 1000, 1);
  CHECK(est.exact);
  CHECK(est.stderr_est == 0.0);
  CHECK(est.ratio == doctest::Approx(47.0 / 48.0).epsilon(1e-15));
  CHECK(spiked_plateau_density(3) == Rational(47, 48));
}

TEST_CASE("half line has density one half at every scale") {
  MeasurableSet E;
  E.dim = 1;
  E.description = "[0, inf)";
  E.contains = [](std::span<const double> y) { return y[0] >= 0.0; };
  const RealVec x{0.0};
  for (int j : {0, 1, 4}) {
    const auto est = density_ratio(E, dyadic_map(), x, 1.0, j, 100000, 7);
    CHECK(std::abs(est.ratio - 0.5) < 3.0 * est.stderr_est + 1e-12);
  }
}

TEST_CASE("plateau density closed form") {
  for (int j = 0; j <= 12; ++j) {
    CHECK(spiked_plateau_density(j) == Rational(1) - Rational(1, 6 * (std::int64_t{1} << j)));
  }
}

TEST_CASE("closed form and Monte Carlo agree within three standard errors") {
  const auto F = spiked_profile_plateau();
  MeasurableSet mc_only;  // same membership, no exact path
  mc_only.dim = 1;
  mc_only.contains = F.contains;
  const RealVec x{0.0};
  for (int j = 1; j <= 8; ++j) {
    const auto exact = density_ratio(F, dyadic_map(), x, 1.0, j, 1000, 3);
    const auto mc = density_ratio(mc_only, dyadic_map(), x, 1.0, j, 100000, 3);
    REQUIRE(exact.exact);
    REQUIRE_FALSE(mc.exact);
    CHECK(std::abs(mc.ratio - exact.ratio) <= 3.0 * mc.stderr_est + 1e-12);
  }
}

TEST_CASE("spiked profile pointwise values") {
  CHECK(spiked_profile(0.6) == 5.0);    // spike 0: height 4 over the box
  CHECK(spiked_profile(0.3) == 9.0);    // spike 1: height 8
  CHECK(spiked_profile(0.4) == 1.0);    // between spikes
  CHECK(spiked_profile(-0.5) == 1.0);   // spikes live on the right
  CHECK(spiked_profile(2.0) == 0.0);
}

TEST_CASE("approximate-continuity probe on an indicator is flat") {
  const auto f = [](std::span<const double> y) {
    return cdouble{(y[0] >= -1.0 && y[0] <= 1.0) ? 1.0 : 0.0, 0.0};
  };
  const RealVec x{0.0};
  const std::vector<int> js{1, 2, 3, 4};
  const auto curve = approx_continuity_probe(f, dyadic_map(), x, cdouble{1.0, 0.0}, 0.5, js, 1.0,
                                             5000, 11);
  for (double r : curve.ratios) CHECK(r == 1.0);
  CHECK(curve.verdict == LimitVerdict::converges_to_1);
}

TEST_CASE("origin is a point of approximate continuity of the spiked profile") {
  const auto f = [](std::span<const double> y) { return cdouble{spiked_profile(y[0]), 0.0}; };
  const RealVec x{0.0};
  const std::vector<int> js{1, 2, 3, 4, 5, 6, 7, 8};
  const auto curve = approx_continuity_probe(f, dyadic_map(), x, cdouble{1.0, 0.0}, 0.5, js, 1.0,
                                             100000, 17);
  CHECK(curve.verdict == LimitVerdict::converges_to_1);
  for (std::size_t i = 0; i < js.size(); ++i) {
    const double closed = spiked_plateau_density(js[i]).to_double();
    CHECK(std::abs(curve.ratios[i] - closed) <= 3.0 * curve.stderrs[i] + 1e-12);
  }
}

TEST_CASE("sign function never concentrates") {
  const auto f = [](std::span<const double> y) {
    return cdouble{y[0] >= 0.0 ? 1.0 : -1.0, 0.0};
  };
  const RealVec x{0.0};
  const std::vector<int> js{1, 2, 3, 4};
  const auto curve = approx_continuity_probe(f, dyadic_map(), x, cdouble{1.0, 0.0}, 0.5, js, 1.0,
                                             20000, 23);
  for (std::size_t i = 0; i < curve.ratios.size(); ++i) {
    CHECK(curve.ratios[i] <= 0.5 + 3.0 * curve.stderrs[i]);
  }
  CHECK(curve.verdict != LimitVerdict::converges_to_1);
}

TEST_CASE("locally-nonzero probe finds the first good scale") {
  const auto box = [](std::span<const double> y) {
    return cdouble{(y[0] >= -0.25 && y[0] <= 0.25) ? 1.0 : 0.0, 0.0};
  };
  const RealVec x{0.0};
  const auto res = locally_nonzero_probe(box, dyadic_map(), x, 0.1, 1.0, 8, 20000, 29);
  REQUIRE(res.passing_j.has_value());
  CHECK(*res.passing_j == 2);  // the window fits in the box once 2^{-j} <= 1/4

  const auto zero = [](std::span<const double>) { return cdouble{0.0, 0.0}; };
  CHECK_FALSE(locally_nonzero_probe(zero, dyadic_map(), x, 0.1, 1.0, 6, 2000, 29).passing_j);

  const auto off = [](std::span<const double> y) {
    return cdouble{(y[0] >= 0.125 && y[0] <= 0.25) ? 1.0 : 0.0, 0.0};
  };
  const auto res_off = locally_nonzero_probe(off, dyadic_map(), x, 0.1, 1.0, 8, 20000, 29);
  CHECK_FALSE(res_off.passing_j.has_value());
  CHECK(res_off.zero_fraction.ratios.back() > 0.9);
}

TEST_CASE("ratios lie in the unit interval and grow with the set") {
  const RealVec x{0.0};
  double prev = -1.0;
  for (double half_width : {0.1, 0.3, 0.7, 1.5}) {
    MeasurableSet E;
    E.dim = 1;
    E.contains = [half_width](std::span<const double> y) {
      return std::abs(y[0]) <= half_width;
    };
    const auto est = density_ratio(E, dyadic_map(), x, 1.0, 1, 20000, 31);
    CHECK(est.ratio >= 0.0);
    CHECK(est.ratio <= 1.0);
    CHECK(est.ratio >= prev);  // same seed, nested sets, identical samples
    prev = est.ratio;
  }
}

TEST_CASE("window average of the spiked profile is exactly 4 at every scale") {
  for (int j = 0; j <= 10; ++j) {
    const auto rec = han_counterexample(j);
    CHECK(rec.q == Rational(4));
  }
}

TEST_CASE("distributional pairing exceeds the plateau pairing") {
  for (int j : {0, 1, 2, 4, 6}) {
    const auto rec = han_counterexample(j);
    CHECK(rec.one_pairing == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(rec.pairing >= 4.0 - 1e-9);
    CHECK(rec.pairing > rec.one_pairing + 0.5);
  }
}

TEST_CASE("malformed test bumps are rejected") {
  TestBump bad = default_test_bump();
  bad.eval = [](double t) { return std::abs(t) <= 1.0 ? 0.5 : 0.0; };  // plateau != 1
  CHECK_THROWS_AS(han_counterexample(1, &bad), Error);
  TestBump negative = default_test_bump();
  negative.eval = [](double t) { return std::abs(t) <= 2.0 ? -1.0 : 0.0; };
  CHECK_THROWS_AS(han_counterexample(1, &negative), Error);
}
