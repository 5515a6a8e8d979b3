#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "framelet/bracket.hpp"

using namespace framelet;

namespace {

constexpr double kPi = std::numbers::pi;

TrigPolynomial haar_mask() {
  TrigPolynomial h(1);
  h.set({0}, 0.5).set({1}, 0.5);
  return h;
}

double u01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

TEST_CASE("constant polynomial evaluates to its coefficient") {
  const auto c = TrigPolynomial::constant(1, cdouble{1.0, 0.0});
  for (double t : {0.0, 0.3, -2.7, 11.0}) {
    CHECK(c.eval(std::span<const double>{&t, 1}) == cdouble{1.0, 0.0});
  }
}

TEST_CASE("haar mask values") {
  const auto h = haar_mask();
  // (1 + e^{-2πi/2})/2 = 0 and coefficient sum 1 at the origin.
  CHECK(std::abs(h.eval(RatVec{Rational(1, 2)})) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(h.eval(RatVec{Rational(0)}).real() == doctest::Approx(1.0));
  const double t0 = 0.0;
  CHECK(h.eval(std::span<const double>{&t0, 1}).real() == doctest::Approx(1.0));
}

TEST_CASE("evaluation is exactly periodic at rational points") {
  const auto h = haar_mask();
  for (const auto& t : {Rational(1, 3), Rational(3, 7), Rational(-5, 11)}) {
    const cdouble base = h.eval(RatVec{t});
    for (std::int64_t m : {1, -2, 17}) {
      const cdouble shifted = h.eval(RatVec{t + Rational(m)});
      CHECK(base.real() == shifted.real());
      CHECK(base.imag() == shifted.imag());
    }
  }
  // Dyadic doubles shift exactly as well.
  const double a = 0.375, b = 5.375;
  CHECK(h.eval(std::span<const double>{&a, 1}) == h.eval(std::span<const double>{&b, 1}));
}

TEST_CASE("grid evaluation agrees with rational evaluation") {
  TrigPolynomial p(2);
  p.set({1, 0}, cdouble{0.3, -0.1}).set({-2, 3}, cdouble{-0.7, 0.2}).set({0, 0}, 0.25);
  const std::int64_t m = 48;
  for (const IntVec& idx : {IntVec{0, 0}, IntVec{7, 13}, IntVec{47, 1}}) {
    const cdouble g = p.eval_grid(idx, m);
    const cdouble r = p.eval(RatVec{Rational(idx[0], m), Rational(idx[1], m)});
    CHECK(std::abs(g - r) < 1e-15);
  }
}

TEST_CASE("dimension mismatches are rejected") {
  const auto h = haar_mask();
  const RealVec t2{0.1, 0.2};
  CHECK_THROWS_AS((void)h.eval(std::span<const double>(t2)), Error);
  TrigPolynomial p(2);
  CHECK_THROWS_AS(p.set({1}, 1.0), Error);
}

TEST_CASE("bracket of box profiles") {
  const auto half = PhiHat::named("box:-1/2:1/2");
  const auto quarter = PhiHat::named("box:-1/4:1/4");
  for (double t : {0.0, 0.1, 0.49, 0.9}) {
    CHECK(bracket_product(half, std::span<const double>{&t, 1}, 8).value ==
          doctest::Approx(1.0));
  }
  const double inside = 0.2, outside = 0.3;
  CHECK(bracket_product(quarter, std::span<const double>{&inside, 1}, 8).value ==
        doctest::Approx(1.0));
  CHECK(bracket_product(quarter, std::span<const double>{&outside, 1}, 8).value ==
        doctest::Approx(0.0));
}

TEST_CASE("hat bracket: closed form (2 + cos 2πt)/3 vs brute-force lattice sum") {
  // Bare profile without the attached closed bracket, so Bracket falls
  // back to the truncated lattice sum: the independent oracle.
  const auto bare = PhiHat::closed_form(1, "hat-bare", [](std::span<const double> t) {
    const double x = kPi * t[0];
    const double s = std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
    return cdouble{s * s, 0.0};
  });
  const Bracket brute(bare, 64);
  const auto hat = PhiHat::named("hat");
  const Bracket closed(hat, 64);
  for (double t : {0.0, 0.1, 0.25, 0.5, 0.77}) {
    const double expected = 2.0 / 3.0 + std::cos(2.0 * kPi * t) / 3.0;
    const std::span<const double> pt{&t, 1};
    CHECK(closed.eval(pt) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(brute.eval(pt) == doctest::Approx(expected).epsilon(1e-7));
  }
  const double half_point = 0.5;
  CHECK(brute.eval(std::span<const double>{&half_point, 1}) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("haar bracket is identically one") {
  const auto haar = PhiHat::named("haar");
  const Bracket bracket(haar, 64);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1024; ++i) {
    const double t = u01(rng);
    CHECK(std::abs(bracket.eval(std::span<const double>{&t, 1}) - 1.0) < 1e-8);
  }
}

TEST_CASE("bracket values are nonnegative and periodic") {
  const auto hat = PhiHat::named("hat");
  const Bracket bracket(hat, 32);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 64; ++i) {
    const double t = 3.0 * (2.0 * u01(rng) - 1.0);
    const double v = bracket.eval(std::span<const double>{&t, 1});
    const double tp = t + 2.0;
    CHECK(v >= 0.0);
    CHECK(std::abs(v - bracket.eval(std::span<const double>{&tp, 1})) < 1e-9);
  }
}

TEST_CASE("non-square-summable profile fails the doubling check") {
  const auto one = PhiHat::closed_form(
      1, "one", [](std::span<const double>) { return cdouble{1.0, 0.0}; });
  const double t = 0.3;
  CHECK_THROWS_AS((void)bracket_product(one, std::span<const double>{&t, 1}, 8), Error);
  try {
    (void)bracket_product(one, std::span<const double>{&t, 1}, 8);
  } catch (const Error& e) {
    CHECK(e.code() == errc::non_convergent);
  }
}

TEST_CASE("zero-set mask of the half-band profile") {
  const auto quarter = PhiHat::named("box:-1/4:1/4");
  const GridSpec grid{1, 1024};
  const auto mask = ZeroSetMask::compute(Bracket(quarter, 8), grid, 1e-10);
  IntVec idx(1, 0);
  do {
    const double t = static_cast<double>(idx[0]) / 1024.0;
    const bool inside_zero_set = t > 0.25 && t < 0.75;
    CHECK(mask.excluded(idx) == inside_zero_set);
  } while (grid.next(idx));
  CHECK(mask.excluded_fraction() == doctest::Approx(0.4990234375));
}

TEST_CASE("haar mask has empty zero set; zero profile masks everything") {
  const GridSpec grid{1, 256};
  const auto haar_mask_set = ZeroSetMask::compute(Bracket(PhiHat::named("haar"), 32), grid, 1e-10);
  CHECK(haar_mask_set.excluded_fraction() == 0.0);
  const auto zero_mask = ZeroSetMask::compute(Bracket(PhiHat::named("zero"), 8), grid, 1e-10);
  CHECK(zero_mask.excluded_fraction() == 1.0);
}

TEST_CASE("grid-sampled filters evaluate on their grid and refuse off-grid points") {
  std::vector<cdouble> values(8);
  for (int i = 0; i < 8; ++i) values[i] = cdouble{static_cast<double>(i), 0.0};
  const Filter f = Filter::grid(1, 8, values);
  CHECK(f.eval_grid(IntVec{3}, 8) == cdouble{3.0, 0.0});
  CHECK(f.eval_grid(IntVec{1}, 4) == cdouble{2.0, 0.0});   // 1/4 = 2/8
  CHECK(f.eval_grid(IntVec{11}, 8) == cdouble{3.0, 0.0});  // wraps mod 8
  CHECK(f.eval(RatVec{Rational(5, 8)}) == cdouble{5.0, 0.0});
  CHECK_THROWS_AS(f.eval_grid(IntVec{1}, 3), Error);
  const double t = 0.1;
  CHECK_THROWS_AS((void)f.eval(std::span<const double>{&t, 1}), Error);
}
