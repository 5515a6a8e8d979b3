#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "framelet/lattice.hpp"

using namespace framelet;

namespace {

DilationMatrix quincunx() { return DilationMatrix::validate(2, {1, 1, 1, -1}); }

// Brute-force oracle: distinct residues frac((A^T)^{-1} q) over a box of
// integer vectors q.
std::set<RatVec> dual_residues(const DilationMatrix& A, std::int64_t radius) {
  std::set<RatVec> residues;
  const int n = A.dim();
  IntVec q(n, -radius);
  while (true) {
    RatVec p = A.apply_transpose_inverse_exact(q);
    for (Rational& r : p) r = r.frac();
    residues.insert(p);
    int i = 0;
    for (; i < n; ++i) {
      if (q[i] < radius) {
        ++q[i];
        break;
      }
      q[i] = -radius;
    }
    if (i == n) break;
  }
  return residues;
}

}  // namespace

TEST_CASE("scalar dyadic dilation validates") {
  const auto A = DilationMatrix::validate(1, {2});
  CHECK(A.det_abs() == 2);
  CHECK(A.eigenvalue_moduli() == std::vector<double>{2.0});
}

TEST_CASE("quincunx spectral data") {
  // Characteristic polynomial is λ² - 2, so both moduli are √2.
  const auto A = quincunx();
  CHECK(A.det_abs() == 2);
  REQUIRE(A.eigenvalue_moduli().size() == 2);
  for (double m : A.eigenvalue_moduli()) CHECK(m == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("non-expansive and degenerate inputs are rejected") {
  CHECK_THROWS_AS(DilationMatrix::validate(2, {1, 1, 0, 1}), Error);  // eigenvalues 1,1
  CHECK_THROWS_AS(DilationMatrix::validate(2, {1, 0, 0}), Error);    // not square
  CHECK_THROWS_AS(DilationMatrix::validate(2, {1, 1, 1, 1}), Error); // singular
  try {
    DilationMatrix::validate(2, {1, 1, 0, 1});
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_expansive);
  }
}

TEST_CASE("dyadic coset representatives") {
  const auto reps = coset_reps(DilationMatrix::validate(1, {2}));
  REQUIRE(reps.omega.size() == 2);
  CHECK(reps.omega[0] == IntVec{0});
  CHECK(reps.omega[1] == IntVec{1});
  REQUIRE(reps.gamma_dual.size() == 2);
  CHECK(reps.gamma_dual[0] == RatVec{Rational(0)});
  CHECK(reps.gamma_dual[1] == RatVec{Rational(1, 2)});
}

TEST_CASE("2I coset representatives") {
  const auto reps = coset_reps(DilationMatrix::validate(2, {2, 0, 0, 2}));
  REQUIRE(reps.gamma_dual.size() == 4);
  const std::vector<RatVec> expected = {
      {Rational(0), Rational(0)},
      {Rational(0), Rational(1, 2)},
      {Rational(1, 2), Rational(0)},
      {Rational(1, 2), Rational(1, 2)},
  };
  CHECK(reps.gamma_dual == expected);
}

TEST_CASE("quincunx dual representatives match the brute-force oracle") {
  const auto A = quincunx();
  const auto reps = coset_reps(A);
  const std::vector<RatVec> expected = {{Rational(0), Rational(0)},
                                        {Rational(1, 2), Rational(1, 2)}};
  CHECK(reps.gamma_dual == expected);

  const std::set<RatVec> oracle = dual_residues(A, 4);
  CHECK(oracle.size() == 2);
  CHECK(oracle == std::set<RatVec>(reps.gamma_dual.begin(), reps.gamma_dual.end()));
}

TEST_CASE("residue count equals |det A| on a matrix battery") {
  const std::vector<std::pair<int, std::vector<std::int64_t>>> battery = {
      {1, {2}},
      {1, {3}},
      {1, {-2}},
      {2, {2, 0, 0, 2}},
      {2, {1, 1, 1, -1}},
      {2, {1, -1, 1, 1}},
      {2, {2, 1, 0, 2}},
      {2, {1, 2, -1, 1}},
      {3, {2, 0, 0, 0, 2, 0, 0, 0, 2}},
      {3, {0, 0, 2, 1, 0, 0, 0, 1, 0}},
  };
  for (const auto& [n, entries] : battery) {
    const auto A = DilationMatrix::validate(n, entries);
    const auto reps = coset_reps(A);
    CHECK(reps.omega.size() == static_cast<std::size_t>(A.det_abs()));
    CHECK(reps.gamma_dual.size() == static_cast<std::size_t>(A.det_abs()));
    // Spec invariant: residues over the box |q|∞ <= 2 max|A| hit every class.
    const auto residues = dual_residues(A, 2 * A.max_abs_entry());
    CHECK(residues.size() == static_cast<std::size_t>(A.det_abs()));
  }
}

TEST_CASE("gamma_dual lands in the integer lattice under A^T, exactly") {
  for (const auto& entries :
       std::vector<std::vector<std::int64_t>>{{1, 1, 1, -1}, {2, 1, 0, 2}, {1, 2, -1, 1}}) {
    const auto A = DilationMatrix::validate(2, entries);
    for (const RatVec& p : coset_reps(A).gamma_dual) {
      for (int i = 0; i < 2; ++i) {
        Rational acc(0);
        for (int j = 0; j < 2; ++j) acc += Rational(A.entry(j, i)) * p[j];
        CHECK(acc.is_integer());
      }
    }
  }
}

TEST_CASE("omega entries are pairwise non-congruent") {
  const auto A = DilationMatrix::validate(2, {2, 1, 0, 2});
  const auto reps = coset_reps(A);
  for (std::size_t i = 0; i < reps.omega.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.omega.size(); ++j) {
      IntVec diff(2);
      for (int k = 0; k < 2; ++k) diff[k] = reps.omega[i][k] - reps.omega[j][k];
      const RatVec y = A.apply_inverse_exact(diff);
      bool integral = std::all_of(y.begin(), y.end(),
                                  [](const Rational& r) { return r.is_integer(); });
      CHECK_FALSE(integral);
    }
  }
}

TEST_CASE("enumeration is independent of candidate order") {
  const auto A = quincunx();
  std::vector<IntVec> candidates;
  for (std::int64_t x = -3; x <= 3; ++x)
    for (std::int64_t y = -3; y <= 3; ++y) candidates.push_back({x, y});
  const auto sorted = coset_reps_from_candidates(A, candidates);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(candidates.begin(), candidates.end(), rng);
    CHECK(coset_reps_from_candidates(A, candidates) == sorted);
  }
}

TEST_CASE("transpose lattice membership") {
  const auto A = DilationMatrix::validate(1, {2});
  CHECK(A.transpose_lattice_contains(IntVec{2}));
  CHECK(A.transpose_lattice_contains(IntVec{0}));
  CHECK_FALSE(A.transpose_lattice_contains(IntVec{1}));
  const auto Q = quincunx();
  CHECK(Q.transpose_lattice_contains(IntVec{1, 1}));
  CHECK_FALSE(Q.transpose_lattice_contains(IntVec{1, 0}));
}
