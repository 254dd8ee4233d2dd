#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cosk/catalog.hpp"
#include "cosk/holonomy.hpp"
#include "cosk/spectral.hpp"
#include "support/oracles.hpp"

using namespace cosk;

namespace {

// the symmetric pair so(3) = so(2) (+) R^2 realizing the round 2-sphere
LieSymmetricData so3_so2_pair() {
  LieSymmetricData data;
  data.name = "so3_so2";
  data.dim_g = 3;
  data.c.assign(27, 0.0);
  auto set = [&](int a, int b, int e) {
    data.set_structure(a, b, e, 1.0);
    data.set_structure(b, a, e, -1.0);
  };
  set(0, 1, 2);  // [L1,L2] = L3
  set(1, 2, 0);  // [L2,L3] = L1
  set(2, 0, 1);  // [L3,L1] = L2
  data.k_idx = {2};
  data.m_idx = {0, 1};
  data.inner_m = Matrix::identity(2);
  return data;
}

}  // namespace

TEST_CASE("space form components") {
  const CurvatureTensor r = build(SpaceSpec::sphere(4, 1.0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          const double expect = (i == k && j == l ? 1.0 : 0.0) - (i == l && j == k ? 1.0 : 0.0);
          CHECK(r(i, j, k, l) == doctest::Approx(expect));
        }
}

TEST_CASE("products assemble blockwise") {
  const SpaceSpec spec = SpaceSpec::product({SpaceSpec::sphere(3, 1.0), SpaceSpec::flat(1)});
  const CurvatureTensor r = build(spec);
  CHECK(r.dim() == 4);
  CHECK(ricci(r).scal == doctest::Approx(6.0));
  // mixed components vanish
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          const bool all_first = i < 3 && j < 3 && k < 3 && l < 3;
          if (!all_first) CHECK(r(i, j, k, l) == 0.0);
        }
}

TEST_CASE("product ricci is the direct sum of factor riccis") {
  const SpaceSpec a = SpaceSpec::sphere(2, 1.0);
  const SpaceSpec b = SpaceSpec::sphere(3, 0.5);
  const RicciData ra = ricci(build(a));
  const RicciData rb = ricci(build(b));
  const RicciData rp = ricci(build(SpaceSpec::product({a, b})));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(rp.ric(i, j) == doctest::Approx(ra.ric(i, j)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(rp.ric(2 + i, 2 + j) == doctest::Approx(rb.ric(i, j)));
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < 5; ++j) CHECK(rp.ric(i, j) == 0.0);
}

TEST_CASE("fubini_study is Einstein with constant 2(m+1)") {
  for (int m : {1, 2, 3}) {
    const RicciData rd = ricci(build(SpaceSpec::cpn(m)));
    CHECK(rd.einstein);
    for (int i = 0; i < 2 * m; ++i)
      CHECK(rd.ric(i, i) == doctest::Approx(2.0 * (m + 1)).epsilon(1e-12));
  }
}

TEST_CASE("fubini_study holomorphic and totally real sectional curvatures") {
  const CurvatureTensor r = build(SpaceSpec::cpn(2));
  CHECK(r(0, 1, 0, 1) == doctest::Approx(4.0));  // holomorphic plane (e1, Je1)
  CHECK(r(0, 2, 0, 2) == doctest::Approx(1.0));  // totally real plane
  CHECK(r(1, 3, 1, 3) == doctest::Approx(1.0));
}

TEST_CASE("cpn(1) is the round sphere of curvature 4") {
  const CurvatureTensor r = build(SpaceSpec::cpn(1));
  const CurvatureTensor s = build(SpaceSpec::sphere(2, 4.0));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) CHECK(r(i, j, k, l) == doctest::Approx(s(i, j, k, l)));
}

TEST_CASE("lie_symmetric on the so(3)/so(2) pair reproduces the unit 2-sphere") {
  const CurvatureTensor r = lie_symmetric(so3_so2_pair());
  const CurvatureTensor s = build(SpaceSpec::sphere(2, 1.0));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          CHECK(r(i, j, k, l) == doctest::Approx(s(i, j, k, l)).epsilon(1e-12));
}

TEST_CASE("lie_symmetric rejects a non-symmetric pair") {
  // su(2) with k = {} and m = everything: [m,m] leaks into m
  LieSymmetricData bad = so3_so2_pair();
  bad.k_idx = {};
  bad.m_idx = {0, 1, 2};
  bad.inner_m = Matrix::identity(3);
  CHECK_THROWS_WITH_AS(lie_symmetric(bad), doctest::Contains("leaks"), std::invalid_argument);
}

TEST_CASE("lie data validation catches broken structure constants") {
  LieSymmetricData d = so3_so2_pair();
  d.set_structure(0, 1, 2, 2.0);  // breaks antisymmetry against c(1,0,2) = -1
  CHECK_THROWS_WITH_AS(lie_symmetric(d), doctest::Contains("antisymmetric"), std::invalid_argument);

  LieSymmetricData j = so3_so2_pair();
  j.set_structure(0, 1, 0, 1.0);  // [L1,L2] = L3 + L1 breaks Jacobi on (L1,L2,L3)
  j.set_structure(1, 0, 0, -1.0);
  CHECK_THROWS_WITH_AS(lie_symmetric(j), doctest::Contains("Jacobi"), std::invalid_argument);
}

TEST_CASE("su3_so3 dataset") {
  const LieSymmetricData& data = su3_so3_data();
  CHECK(data.dim_g == 8);
  CHECK(data.m_idx.size() == 5);
  const CurvatureTensor r = build(SpaceSpec::sym("su3_so3"));
  CHECK(r.dim() == 5);

  SUBCASE("Einstein with scal = 15 under <X,Y> = -tr(XY)") {
    const RicciData rd = ricci(r);
    CHECK(rd.einstein);
    CHECK(rd.scal == doctest::Approx(15.0).epsilon(1e-12));
  }

  SUBCASE("sectional curvatures are nonnegative, and some vanish (rank two)") {
    double min_sect = 1e9;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) min_sect = std::min(min_sect, r(i, j, i, j));
    CHECK(min_sect >= -1e-12);
    CHECK(min_sect <= 1e-12);  // flat planes exist
  }

  SUBCASE("second-kind spectrum is {-3/2 x5, 2 x9}") {
    // derived numerically from this construction; the positivity verdicts
    // below are scale-invariant
    const Spectrum s = eigh(second_kind(r).matrix).spectrum;
    REQUIRE(s.size() == 14);
    for (int i = 0; i < 5; ++i) CHECK(s.values[i] == doctest::Approx(-1.5).epsilon(1e-10));
    for (int i = 5; i < 14; ++i) CHECK(s.values[i] == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(is_k_positive(s, 9.0));
    CHECK(!is_k_nonneg(s, 8.0));
  }

  SUBCASE("isotropy invariance: curvature annihilated by ad of each k generator") {
    const LieSymmetricData& d = su3_so3_data();
    for (int kk : d.k_idx) {
      Matrix ad(5, 5);
      for (int b = 0; b < 5; ++b)
        for (int e = 0; e < 5; ++e) ad(e, b) = d.structure(kk, d.m_idx[b], d.m_idx[e]);
      CHECK(derivation_residual(r, ad) <= 1e-9 * std::max(1.0, r.max_abs()));
    }
  }
}

TEST_CASE("curvature scale multiplies the spectrum") {
  for (const auto& base : {SpaceSpec::sym("su3_so3"), SpaceSpec::cpn(2)}) {
    SpaceSpec scaled = base;
    scaled.scale = 2.0;
    const Spectrum s1 = eigh(second_kind(build(base)).matrix).spectrum;
    const Spectrum s2 = eigh(second_kind(build(scaled)).matrix).spectrum;
    REQUIRE(s1.size() == s2.size());
    for (std::size_t i = 0; i < s1.size(); ++i)
      CHECK(s2.values[i] == doctest::Approx(2.0 * s1.values[i]).epsilon(1e-12));
  }
}

TEST_CASE("every catalog space validates") {
  for (const auto& entry : builtin_catalog()) {
    CAPTURE(entry.text);
    CHECK(validate(build(entry.spec)).accepted);
    CHECK(entry.spec.dimension() <= 8);
  }
}

TEST_CASE("lie json loader") {
  const nlohmann::json j = {
      {"name", "so3_so2"},
      {"dim", 3},
      {"k_indices", {3}},
      {"m_indices", {1, 2}},
      {"structure_constants", {{1, 2, 3, 1.0}, {2, 3, 1, 1.0}, {3, 1, 2, 1.0}}},
  };
  const LieSymmetricData data = load_lie_json(j);
  const CurvatureTensor r = lie_symmetric(data);
  const CurvatureTensor s = build(SpaceSpec::sphere(2, 1.0));
  for (int i = 0; i < 2; ++i)
    for (int jj = 0; jj < 2; ++jj)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          CHECK(r(i, jj, k, l) == doctest::Approx(s(i, jj, k, l)).epsilon(1e-12));

  // usable through build() via extra datasets
  const CurvatureTensor r2 = build(SpaceSpec::sym("so3_so2"), {data});
  CHECK(r2.dim() == 2);
  CHECK_THROWS_AS(build(SpaceSpec::sym("nonexistent")), std::invalid_argument);
}

TEST_CASE("non-orthonormal Lie inner product is handled by orthonormalization") {
  LieSymmetricData d = so3_so2_pair();
  d.inner_m = Matrix::identity(2);
  d.inner_m(0, 0) = 4.0;  // stretch one direction; still Ad(so(2))-invariant? no:
  // a non-isotropic metric on R^2 is not rotation invariant, so this must throw
  CHECK_THROWS_WITH_AS(lie_symmetric(d), doctest::Contains("invariant"), std::invalid_argument);

  // a uniform rescale stays invariant and rescales the curvature: S^2(r)
  LieSymmetricData u = so3_so2_pair();
  u.inner_m = 4.0 * Matrix::identity(2);
  const CurvatureTensor r = lie_symmetric(u);
  // metric scaled by 4 => sectional curvature scaled by 1/4
  CHECK(r(0, 1, 0, 1) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("spec strings round trip through dimension and rendering") {
  const SpaceSpec spec = SpaceSpec::product(
      {SpaceSpec::sphere(3, 1.0), SpaceSpec::flat(2), SpaceSpec::cpn(2)}, 2.0);
  CHECK(spec.dimension() == 9);
  CHECK(spec.str() == "product[sphere(3,1);flat(2);cpn(2)]*scale(2)");
}
