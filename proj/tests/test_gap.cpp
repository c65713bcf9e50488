#include <doctest.h>

#include <cmath>
#include <random>

#include "bcs/gap.hpp"
#include "bcs/subspace.hpp"
#include "oracles.hpp"

using namespace bcs;

TEST_CASE("excitation_energy") {
  CHECK(excitation_energy(0.0, 2.5) == 2.5);
  CHECK(excitation_energy(3.0, 4.0) == 5.0);
  CHECK(excitation_energy(-1.5, 0.0) == 1.5);
}

TEST_CASE("gap_from_levels: round-trip anchor") {
  const double d = std::sqrt(2.0) - std::sqrt(5.0);
  const GapResult r = gap_from_levels(1.0, 2.0, d);
  REQUIRE(r.has_gap());
  CHECK(oracle::rel_close(r.gap, 1.0, 1e-12));
  CHECK(r.method == GapMethod::kSub1Spectrum);
  CHECK(std::fabs(r.residual) <= 1e-10 * std::fabs(d));
}

TEST_CASE("gap_from_levels: d outside the monotone range") {
  CHECK(gap_from_levels(1.0, 2.0, -1.5).outcome == GapOutcome::kNoRealRoot);
  CHECK(gap_from_levels(1.0, 2.0, 0.0).outcome == GapOutcome::kNoRealRoot);
  CHECK(gap_from_levels(1.0, 2.0, 0.3).outcome == GapOutcome::kNoRealRoot);
  const GapResult edge = gap_from_levels(1.0, 2.0, -1.0);
  REQUIRE(edge.has_gap());
  CHECK(edge.gap == 0.0);
  CHECK_THROWS(gap_from_levels(2.0, 1.0, -0.5));
  CHECK_THROWS(gap_from_levels(-1.0, 1.0, -0.5));
}

TEST_CASE("gap_from_levels: d = -0.5 against the bisection oracle") {
  const double oracle_gap = oracle::gap_difference_bisection(1.0, 2.0, -0.5);
  CHECK(oracle::rel_close(oracle_gap, std::sqrt(6.5625), 1e-12));
  const GapResult r = gap_from_levels(1.0, 2.0, -0.5);
  REQUIRE(r.has_gap());
  CHECK(oracle::rel_close(r.gap, oracle_gap, 1e-12));
}

TEST_CASE("gap_from_levels: round trip on random inputs") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> level(0.0, 10.0), spread(0.05, 10.0), ratio(-2.0, 2.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double xi1 = level(rng);
    const double xi2 = xi1 + spread(rng);
    const double target = xi2 * std::pow(10.0, ratio(rng));
    const double d = excitation_energy(xi1, target) - excitation_energy(xi2, target);
    const GapResult r = gap_from_levels(xi1, xi2, d);
    REQUIRE(r.has_gap());
    CHECK(oracle::rel_close(r.gap, target, 1e-9));
  }
}

TEST_CASE("gap_from_levels: closed form agrees with bisection") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> level(0.0, 5.0), spread(0.1, 5.0), frac(0.01, 0.99);
  for (int trial = 0; trial < 1000; ++trial) {
    const double xi1 = level(rng);
    const double xi2 = xi1 + spread(rng);
    const double d = (xi1 - xi2) * frac(rng);
    const GapResult r = gap_from_levels(xi1, xi2, d);
    REQUIRE(r.has_gap());
    CHECK(oracle::rel_close(r.gap, oracle::gap_difference_bisection(xi1, xi2, d), 1e-9));
  }
}

TEST_CASE("gap_from_pair_energy") {
  // sqrt(1 + 1) + sqrt(4 + 1) at Delta = 1.
  const double s = std::sqrt(2.0) + std::sqrt(5.0);
  const GapResult r = gap_from_pair_energy(1.0, 2.0, s);
  REQUIRE(r.has_gap());
  CHECK(oracle::rel_close(r.gap, 1.0, 1e-12));

  CHECK(gap_from_pair_energy(1.0, 2.0, 2.9).outcome == GapOutcome::kNoRealRoot);
  CHECK(gap_from_pair_energy(1.0, 2.0, 3.0).gap == 0.0);
  CHECK(gap_from_pair_energy(1.0, 2.0, -4.0).outcome == GapOutcome::kNoRealRoot);

  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> level(0.0, 10.0), spread(0.05, 10.0), ratio(-2.0, 2.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double xi1 = level(rng);
    const double xi2 = xi1 + spread(rng);
    const double target = xi2 * std::pow(10.0, ratio(rng));
    const GapResult rt =
        gap_from_pair_energy(xi1, xi2, excitation_energy(xi1, target) + excitation_energy(xi2, target));
    REQUIRE(rt.has_gap());
    CHECK(oracle::rel_close(rt.gap, target, 1e-9));
  }
}

TEST_CASE("gap equation: single-level closed forms") {
  const GapResult r = solve_gap_equation(PairingModel({3.0}, 10.0));
  REQUIRE(r.has_gap());
  CHECK(r.method == GapMethod::kGapEquation);
  CHECK(oracle::rel_close(r.gap, 4.0, 1e-12));
  CHECK(std::fabs(r.residual) <= 1e-10);

  CHECK(solve_gap_equation(PairingModel({3.0}, 2.0)).outcome == GapOutcome::kNoSolution);
  CHECK(solve_gap_equation(PairingModel({3.0}, 0.0)).outcome == GapOutcome::kNoSolution);
  CHECK(solve_gap_equation(PairingModel({3.0}, 6.0)).gap == 0.0);
}

TEST_CASE("gap equation: level at the Fermi surface is singular") {
  CHECK_THROWS_AS(solve_gap_equation(PairingModel({0.0, 1.0}, 1.0)), SingularLevel);
}

TEST_CASE("gap equation: N=20, lambda=10 against a 1e7-point scan") {
  const PairingModel m = make_model({20, 1.0, 10.0, 0});
  const GapResult r = solve_gap_equation(m);
  REQUIRE(r.has_gap());
  CHECK(std::fabs(r.residual) <= 1e-10);

  const std::vector<double> xi(m.levels().begin(), m.levels().end());
  const double hi = 0.5 * m.v() * 20.0;
  const long points = 10'000'000;
  const double cell = oracle::gap_equation_scan(xi, m.v(), hi, points);
  const double h = hi / static_cast<double>(points);
  CHECK(r.gap >= cell);
  CHECK(r.gap <= cell + h);
  MESSAGE("gap (delta-units) = " << r.gap);
}

TEST_CASE("gap equation residual on random models") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> lam(1.0, 100.0);
  std::uniform_int_distribution<int> n_dist(1, 100), b_dist(0, 30);
  for (int trial = 0; trial < 200; ++trial) {
    const GapResult r = solve_gap_equation(make_model({n_dist(rng), 1.0, lam(rng), b_dist(rng)}));
    if (r.has_gap()) CHECK(std::fabs(r.residual) <= 1e-10);
  }
}

TEST_CASE("gap_from_spectrum") {
  const PairingModel strong = make_model({20, 1.0, 10.0, 0});
  const GapResult sub1 = gap_from_spectrum(strong, sub1_eigenvalues(strong));
  const GapResult eqn = solve_gap_equation(strong);
  REQUIRE(sub1.has_gap());
  REQUIRE(eqn.has_gap());
  CHECK(std::fabs(sub1.gap - eqn.gap) / eqn.gap <= 0.05);

  const PairingModel offset = make_model({10, 1.0, 10.0, 60});
  CHECK(gap_from_spectrum(offset, sub1_eigenvalues(offset)).outcome == GapOutcome::kNoRealRoot);

  CHECK_THROWS_AS(gap_from_spectrum(PairingModel({1.0}, 1.0), Spectrum{{0.0}, SolverTag::kSecular}),
                  InsufficientLevels);
}

TEST_CASE("level-difference extraction: zero-coupling boundary gives zero gap") {
  const PairingModel free({1.0, 2.0, 3.0}, 0.0);
  const GapResult r = gap_from_spectrum(free, sub1_eigenvalues(free), GapExtraction::kLevelDifference);
  REQUIRE(r.has_gap());
  CHECK(r.gap == 0.0);
}

TEST_CASE("level-difference extraction has no real root in the strong-coupling presets") {
  for (int n : {2, 10, 20, 100}) {
    const PairingModel m = make_model({n, 1.0, 10.0, 0});
    CHECK(gap_from_spectrum(m, sub1_eigenvalues(m), GapExtraction::kLevelDifference).outcome ==
          GapOutcome::kNoRealRoot);
  }
}

TEST_CASE("both gap methods are degree-1 homogeneous") {
  const PairingModel m = make_model({20, 1.0, 10.0, 2});
  const double sub1 = gap_from_spectrum(m, sub1_eigenvalues(m)).gap;
  const double eqn = solve_gap_equation(m).gap;
  for (double c : {1e-7, 1.0, 1e3}) {
    const PairingModel s = rescale(m, c);
    CHECK(oracle::rel_close(gap_from_spectrum(s, sub1_eigenvalues(s)).gap, c * sub1, 1e-9));
    CHECK(oracle::rel_close(solve_gap_equation(s).gap, c * eqn, 1e-9));
  }
}

TEST_CASE("estimate_coupling") {
  CHECK(oracle::rel_close(estimate_coupling({1e5, 0.2, 1e-2}), 2e-6, 1e-15));
  CHECK(oracle::rel_close(estimate_coupling({1e5, 0.3, 1e-2}), 3e-6, 1e-15));
  CHECK(estimate_coupling({1.0, 1.0, 1.0}) == 1.0);
  CHECK_THROWS_AS(estimate_coupling({0.0, 0.2, 1e-2}), InvalidParameter);
  CHECK_THROWS_AS(estimate_coupling({1e5, 0.0, 1e-2}), InvalidParameter);
  CHECK_THROWS_AS(estimate_coupling({1e5, 1.5, 1e-2}), InvalidParameter);
  CHECK_THROWS_AS(estimate_coupling({1e5, 0.2, 0.0}), InvalidParameter);
}
