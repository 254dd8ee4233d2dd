#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cosk/catalog.hpp"
#include "cosk/report.hpp"
#include "cosk/spectral.hpp"
#include "support/oracles.hpp"

using namespace cosk;
using cosk::testing::random_feasible_value;
using cosk::testing::weighted_min_by_vertex_enumeration;

namespace {

Spectrum sphere_product_spectrum_s3s1() {
  // second-kind spectrum of S^3 x S^1, derived in the product example:
  // kernel of dimension p(n-p) = 3, simple eigenvalue 1 - 2 p(n-p)/n = -1/2,
  // remaining eigenvalues 1
  return Spectrum::of({-0.5, 0, 0, 0, 1, 1, 1, 1, 1});
}

Spectrum s2s2_spectrum() { return Spectrum::of({-1, 0, 0, 0, 0, 1, 1, 1, 1}); }

}  // namespace

TEST_CASE("eigh basics") {
  SUBCASE("diagonal matrix: sorted diagonal") {
    Matrix m(3, 3);
    m(0, 0) = 3.0;
    m(1, 1) = -1.0;
    m(2, 2) = 2.0;
    const EighSystem s = eigh(m);
    CHECK(s.spectrum.values[0] == doctest::Approx(-1.0));
    CHECK(s.spectrum.values[1] == doctest::Approx(2.0));
    CHECK(s.spectrum.values[2] == doctest::Approx(3.0));
  }
  SUBCASE("[[0,1],[1,0]] -> {-1, 1}") {
    Matrix m(2, 2);
    m(0, 1) = m(1, 0) = 1.0;
    const EighSystem s = eigh(m);
    CHECK(s.spectrum.values[0] == doctest::Approx(-1.0));
    CHECK(s.spectrum.values[1] == doctest::Approx(1.0));
  }
  SUBCASE("second_kind(S^4(1)) has 9 unit eigenvalues") {
    const EighSystem s = eigh(second_kind(build(SpaceSpec::sphere(4, 1.0))).matrix);
    REQUIRE(s.spectrum.size() == 9);
    for (double v : s.spectrum.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("non-symmetric input rejected") {
    Matrix m(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(eigh(m), std::invalid_argument);
  }
  SUBCASE("random symmetric matrices: reconstruction and orthonormality hold") {
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
      const int n = 2 + static_cast<int>(rng.below(30));
      Matrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m(i, j) = m(j, i) = rng.normal();
      CHECK_NOTHROW(eigh(m));  // contract checks run inside
    }
  }
}

TEST_CASE("partial_sum") {
  const Spectrum ones = Spectrum::of(std::vector<double>(9, 1.0));
  CHECK(partial_sum(ones, 3.5) == doctest::Approx(3.5));
  const Spectrum s = sphere_product_spectrum_s3s1();
  CHECK(partial_sum(s, 4.0) == doctest::Approx(-0.5));
  CHECK(partial_sum(s, 5.0) == doctest::Approx(0.5));
  CHECK(partial_sum(s, 0.0) == 0.0);
  CHECK(partial_sum(s, 9.0) == doctest::Approx(4.5));
  CHECK_THROWS_AS(partial_sum(s, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(partial_sum(s, 9.5), std::invalid_argument);
}

TEST_CASE("partial sums are convex piecewise linear") {
  Rng rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 3 + static_cast<int>(rng.below(18));
    std::vector<double> v(d);
    for (double& x : v) x = rng.normal();
    const Spectrum s = Spectrum::of(std::move(v));
    for (int k = 0; k + 2 <= d; ++k) {
      const double second_diff =
          partial_sum(s, k + 2) - 2.0 * partial_sum(s, k + 1) + partial_sum(s, k);
      CHECK(second_diff >= -1e-12);
    }
  }
}

TEST_CASE("k-nonnegativity verdicts") {
  const Spectrum s = sphere_product_spectrum_s3s1();
  CHECK(!is_k_nonneg(s, 4.0));
  CHECK(is_k_nonneg(s, 5.0));
  const Spectrum q = s2s2_spectrum();
  CHECK(!is_k_nonneg(q, 4.0));
  CHECK(is_k_nonneg(q, 6.0));
  const Spectrum ones = Spectrum::of(std::vector<double>(5, 1.0));
  for (double k = 0.5; k <= 5.0; k += 0.5) CHECK(is_k_nonneg(ones, k));
}

TEST_CASE("k-nonnegativity is monotone in k on random spectra") {
  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 4 + static_cast<int>(rng.below(12));
    std::vector<double> v(d);
    for (double& x : v) x = rng.normal();
    const Spectrum s = Spectrum::of(std::move(v));
    bool seen_nonneg = false;
    for (int k = 1; k <= d; ++k) {
      const bool now = is_k_nonneg(s, k);
      if (seen_nonneg) CHECK(now);
      seen_nonneg |= now;
    }
  }
}

TEST_CASE("duality between nonneg and nonpos is exact") {
  Rng rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 3 + static_cast<int>(rng.below(10));
    std::vector<double> v(d);
    for (double& x : v) x = rng.normal();
    const Spectrum s = Spectrum::of(std::move(v));
    const Spectrum neg = negate(s);
    for (double k = 0.5; k <= d; k += 0.5) {
      CHECK(is_k_nonpos(s, k) == is_k_nonneg(neg, k));
      CHECK(is_k_nonpos(neg, k) == is_k_nonneg(s, k));
    }
  }
}

TEST_CASE("nonneg_threshold") {
  CHECK(*nonneg_threshold(sphere_product_spectrum_s3s1()) == doctest::Approx(4.5));
  CHECK(*nonneg_threshold(s2s2_spectrum()) == doctest::Approx(6.0));
  CHECK(*nonneg_threshold(Spectrum::of(std::vector<double>(9, 1.0))) == 0.0);
  CHECK(!nonneg_threshold(Spectrum::of({-2, -1, 0, 1})).has_value());  // S(4) = -2
  SUBCASE("threshold marks the sign change of S") {
    Rng rng(47);
    for (int trial = 0; trial < 100; ++trial) {
      const int d = 4 + static_cast<int>(rng.below(12));
      std::vector<double> v(d);
      for (double& x : v) x = rng.normal();
      const Spectrum s = Spectrum::of(std::move(v));
      const auto k = nonneg_threshold(s);
      if (!k) {
        CHECK(partial_sum(s, d) < 0.0);
        continue;
      }
      if (*k == 0.0) {
        CHECK(s.values.front() >= -s.tol());
        continue;
      }
      CHECK(std::abs(partial_sum(s, *k)) <= 1e-11 * s.scale());
      if (*k + 0.25 <= d) CHECK(partial_sum(s, *k + 0.25) >= 0.0);
      CHECK(partial_sum(s, *k * 0.5) < 0.0);
    }
  }
}

TEST_CASE("spectrum construction") {
  const Spectrum s = Spectrum::of({3.0, -1.0, 0.5});
  CHECK(s.values == std::vector<double>{-1.0, 0.5, 3.0});
  CHECK(s.scale() == 3.0);
  CHECK_THROWS_AS(Spectrum::of({1.0, std::nan("")}), std::invalid_argument);
}

TEST_CASE("kernel_dim") {
  CHECK(kernel_dim(sphere_product_spectrum_s3s1()) == 3);
  CHECK(kernel_dim(Spectrum::of(std::vector<double>(5, 1.0))) == 0);
  CHECK(kernel_dim(Spectrum::of(std::vector<double>(9, 0.0))) == 9);
  // flat(n): the whole operator vanishes, kernel is all of S^2_0
  const Spectrum flat = eigh(second_kind(build(SpaceSpec::flat(4))).matrix).spectrum;
  CHECK(kernel_dim(flat) == 9);
  // S^p x S^q kernels are at least p*q dimensional
  for (auto [p, q] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
    const SpaceSpec spec =
        SpaceSpec::product({SpaceSpec::sphere(p, 1.0), SpaceSpec::sphere(q, 1.0)});
    const Spectrum s = eigh(second_kind(build(spec)).matrix).spectrum;
    CHECK(kernel_dim(s) >= p * q);
  }
}

TEST_CASE("greedy_weighted_min") {
  SUBCASE("all-ones spectrum gives the total") {
    const Spectrum ones = Spectrum::of(std::vector<double>(6, 1.0));
    CHECK(greedy_weighted_min(ones, 1.7, 4.2).minimum == doctest::Approx(4.2));
  }
  SUBCASE("S2 x S2 with the Einstein weights: cap 4/3, total 6 -> -4/3") {
    const WeightBound wb = greedy_weighted_min(s2s2_spectrum(), 4.0 / 3.0, 6.0);
    CHECK(wb.minimum == doctest::Approx(-4.0 / 3.0).epsilon(1e-12));
  }
  SUBCASE("equals cap * S(total/cap)") {
    Rng rng(53);
    for (int trial = 0; trial < 100; ++trial) {
      const int d = 3 + static_cast<int>(rng.below(15));
      std::vector<double> v(d);
      for (double& x : v) x = rng.normal();
      const Spectrum s = Spectrum::of(std::move(v));
      const double cap = rng.uniform(0.3, 3.0);
      const double total = rng.uniform(0.0, cap * d);
      const WeightBound wb = greedy_weighted_min(s, cap, total);
      CHECK(wb.minimum ==
            doctest::Approx(cap * partial_sum(s, total / cap)).epsilon(1e-12));
    }
  }
  SUBCASE("optimal against vertex enumeration and random feasible points, d <= 6") {
    Rng rng(59);
    for (int trial = 0; trial < 200; ++trial) {
      const int d = 2 + static_cast<int>(rng.below(5));
      std::vector<double> v(d);
      for (double& x : v) x = rng.normal();
      const Spectrum s = Spectrum::of(std::move(v));
      const double cap = rng.uniform(0.3, 2.0);
      const double total = rng.uniform(0.0, cap * d * 0.999);
      const double greedy = greedy_weighted_min(s, cap, total).minimum;
      const double oracle = weighted_min_by_vertex_enumeration(s.values, cap, total);
      CHECK(greedy == doctest::Approx(oracle).epsilon(1e-11));
      for (int probe = 0; probe < 50; ++probe)
        CHECK(random_feasible_value(s.values, cap, total, rng) >= greedy - 1e-9);
    }
  }
  SUBCASE("infeasible budget rejected") {
    const Spectrum s = Spectrum::of({1, 2, 3});
    CHECK_THROWS_AS(greedy_weighted_min(s, 1.0, 3.5), std::invalid_argument);
    CHECK_THROWS_AS(greedy_weighted_min(s, 0.0, 1.0), std::invalid_argument);
  }
}

TEST_CASE("weight_principle_check") {
  SUBCASE("nonnegative spectra satisfy the implication trivially") {
    const Spectrum s = Spectrum::of({0.0, 0.5, 1.0, 2.0});
    CHECK(weight_principle_check(s, 1.2, 3.6, 2.0));
  }
  SUBCASE("premise failure makes it vacuously true") {
    CHECK(weight_principle_check(s2s2_spectrum(), 4.0 / 3.0, 6.0, 4.0));
    CHECK(!is_k_nonneg(s2s2_spectrum(), 4.0));
  }
  SUBCASE("Monte-Carlo: zero violations over 1e5 seeded spectra") {
    const WeightPrincipleScan scan = run_weight_principle(100000, 42);
    CHECK(scan.trials == 100000);
    CHECK(scan.violations == 0);
    CHECK(scan.premise_holds > 1000);  // the filter keeps a healthy sample
  }
  CHECK_THROWS_AS(weight_principle_check(s2s2_spectrum(), 1.0, 2.0, 3.0), std::invalid_argument);
}

TEST_CASE("threshold constants are exact rationals") {
  CHECK(threshold_N(5) == Rational(35, 6));
  CHECK(threshold_N(2) == Rational(2));
  CHECK(threshold_N(8) == Rational(10));
  CHECK(threshold_kahler(2) == Rational(9, 2));
  CHECK(threshold_kahler(2) == threshold_Cp(4, 2));
  CHECK(threshold_N(5).str() == "35/6");

  SUBCASE("kahler threshold agrees with C_p at the proof degrees") {
    for (long long m = 2; m <= 9; ++m) {
      if (m % 2 == 0)
        CHECK(threshold_kahler(m) == threshold_Cp(2 * m, m));
      else
        CHECK(threshold_kahler(m) == threshold_Cp(2 * m, m - 1));
    }
    // even m: M(2m) = N(2m)
    for (long long m = 2; m <= 10; m += 2) CHECK(threshold_kahler(m) == threshold_N(2 * m));
  }
  SUBCASE("domain violations") {
    CHECK_THROWS_AS(threshold_N(1), std::domain_error);
    CHECK_THROWS_AS(threshold_Cp(4, 3), std::domain_error);
    CHECK_THROWS_AS(threshold_Cp(4, 0), std::domain_error);
    CHECK_THROWS_AS(threshold_kahler(0), std::domain_error);
  }
}

TEST_CASE("integrality scan") {
  CHECK(integrality_scan(100) == std::vector<long long>{2, 8});
  CHECK(integrality_scan(10000) == std::vector<long long>{2, 8});
  CHECK(!threshold_N(5).is_integer());
}

TEST_CASE("k report") {
  const KReport rep = make_k_report(sphere_product_spectrum_s3s1(), {4.0, 4.5, 5.0});
  CHECK(rep.entries.size() == 3);
  CHECK(rep.entries[0].partial_sum == doctest::Approx(-0.5));
  CHECK(!rep.entries[0].nonneg);
  CHECK(rep.entries[1].partial_sum == doctest::Approx(0.0));
  CHECK(rep.entries[2].nonneg);
  CHECK(rep.kernel_dim == 3);
  CHECK(*rep.nonneg_threshold == doctest::Approx(4.5));
}

TEST_CASE("trace-free ascending spectra have nonpositive partial sums") {
  // S(0) = S(D) = 0 and convexity force S <= 0 on [0, D]; this is the
  // spectral half of the scal = 0 rigidity statement
  Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 4 + static_cast<int>(rng.below(12));
    std::vector<double> v(d);
    double sum = 0.0;
    for (double& x : v) {
      x = rng.normal();
      sum += x;
    }
    for (double& x : v) x -= sum / d;
    const Spectrum s = Spectrum::of(std::move(v));
    for (int k = 0; k <= d; ++k) CHECK(partial_sum(s, k) <= 1e-12);
  }
}
