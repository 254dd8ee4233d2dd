#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cosk/holonomy.hpp"
#include "cosk/catalog.hpp"
#include "cosk/spectral.hpp"
#include "support/oracles.hpp"

using namespace cosk;

TEST_CASE("space forms generate all of so(n)") {
  for (int n : {2, 3, 5, 8}) {
    const HolonomyReport rep = curvature_algebra(build(SpaceSpec::sphere(n, 1.0)));
    CHECK(rep.dimension == n * (n - 1) / 2);
    CHECK(rep.full_so_n);
    CHECK(!rep.reducible);
    CHECK(!rep.trivial);
    CHECK(rep.invariant_subspace_dims == std::vector<int>{n});
  }
  // negative curvature generates the same algebra
  const HolonomyReport rep = curvature_algebra(build(SpaceSpec::sphere(4, -1.0)));
  CHECK(rep.full_so_n);
}

TEST_CASE("flat space is trivial and fully reducible") {
  const HolonomyReport rep = curvature_algebra(build(SpaceSpec::flat(4)));
  CHECK(rep.dimension == 0);
  CHECK(rep.trivial);
  CHECK(rep.reducible);
  CHECK(!rep.full_so_n);
  CHECK(rep.invariant_subspace_dims == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("S2 x S2: dimension 2, invariant subspaces {2,2}") {
  const HolonomyReport rep = curvature_algebra(
      build(SpaceSpec::product({SpaceSpec::sphere(2, 1.0), SpaceSpec::sphere(2, 1.0)})));
  CHECK(rep.dimension == 2);
  CHECK(rep.reducible);
  CHECK(!rep.full_so_n);
  CHECK(rep.invariant_subspace_dims == std::vector<int>{2, 2});
}

TEST_CASE("S3 x S1: so(3) plus a fixed line") {
  const HolonomyReport rep = curvature_algebra(
      build(SpaceSpec::product({SpaceSpec::sphere(3, 1.0), SpaceSpec::flat(1)})));
  CHECK(rep.dimension == 3);
  CHECK(rep.invariant_subspace_dims == std::vector<int>{1, 3});
  CHECK(rep.reducible);
}

TEST_CASE("cpn(2): unitary algebra of dimension 4, irreducible over R") {
  const HolonomyReport rep = curvature_algebra(build(SpaceSpec::cpn(2)));
  CHECK(rep.dimension == 4);  // u(2)
  CHECK(!rep.full_so_n);
  CHECK(!rep.reducible);
  CHECK(rep.invariant_subspace_dims == std::vector<int>{4});
}

TEST_CASE("cpn(3): u(3), dimension 9, irreducible") {
  const HolonomyReport rep = curvature_algebra(build(SpaceSpec::cpn(3)));
  CHECK(rep.dimension == 9);
  CHECK(rep.invariant_subspace_dims == std::vector<int>{6});
}

TEST_CASE("su3_so3: so(3) acting irreducibly on R^5") {
  const HolonomyReport rep = curvature_algebra(build(SpaceSpec::sym("su3_so3")));
  CHECK(rep.dimension == 3);
  CHECK(!rep.full_so_n);
  CHECK(!rep.reducible);
  CHECK(rep.invariant_subspace_dims == std::vector<int>{5});
  CHECK(rep.kind == "curvature-generated subalgebra");
}

TEST_CASE("closure is idempotent") {
  for (const auto& spec : {SpaceSpec::cpn(2), SpaceSpec::sym("su3_so3")}) {
    const HolonomyReport rep = curvature_algebra(build(spec));
    // one more bracket round adds nothing beyond the rank tolerance
    for (const Matrix& a : rep.generators)
      for (const Matrix& b : rep.generators) {
        Matrix c = commutator(a, b);
        for (const Matrix& g : rep.generators) {
          double d = 0.0;
          for (int i = 0; i < c.rows(); ++i)
            for (int j = 0; j < c.cols(); ++j) d += c(i, j) * g(i, j);
          c -= d * g;
        }
        CHECK(c.frobenius_norm() <= 1e-9);
      }
  }
}

TEST_CASE("generators are orthonormal skew matrices inside so(n)") {
  const HolonomyReport rep = curvature_algebra(build(SpaceSpec::cpn(2)));
  for (std::size_t a = 0; a < rep.generators.size(); ++a) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(rep.generators[a](i, j) + rep.generators[a](j, i) ==
              doctest::Approx(0.0).epsilon(1e-12));
    for (std::size_t b = 0; b < rep.generators.size(); ++b) {
      double d = 0.0;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) d += rep.generators[a](i, j) * rep.generators[b](i, j);
      CHECK(d == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("invariant_subspaces on hand-built generator sets") {
  SUBCASE("so(n) generators act irreducibly") {
    const auto gens = curvature_operators(build(SpaceSpec::sphere(4, 1.0)));
    CHECK(invariant_subspaces(gens, 4) == std::vector<int>{4});
  }
  SUBCASE("block so(2) + so(2) in R^4") {
    Matrix a(4, 4), b(4, 4);
    a(0, 1) = 1.0;
    a(1, 0) = -1.0;
    b(2, 3) = 1.0;
    b(3, 2) = -1.0;
    CHECK(invariant_subspaces({a, b}, 4) == std::vector<int>{2, 2});
  }
  SUBCASE("empty generator set splits into lines") {
    CHECK(invariant_subspaces({}, 3) == std::vector<int>{1, 1, 1});
  }
}

TEST_CASE("probe seed changes do not change the decomposition") {
  const CurvatureTensor r =
      build(SpaceSpec::product({SpaceSpec::sphere(2, 1.0), SpaceSpec::sphere(3, 1.0)}));
  const HolonomyReport a = curvature_algebra(r, 1);
  const HolonomyReport b = curvature_algebra(r, 99991);
  CHECK(a.dimension == b.dimension);
  CHECK(a.invariant_subspace_dims == b.invariant_subspace_dims);
  CHECK(a.invariant_subspace_dims == std::vector<int>{2, 3});
}

TEST_CASE("dimensions are invariant under frame rotation") {
  Rng rng(401);
  for (const auto& spec :
       {SpaceSpec::sphere(4, 1.0), SpaceSpec::cpn(2), SpaceSpec::sym("su3_so3"),
        SpaceSpec::product({SpaceSpec::sphere(2, 1.0), SpaceSpec::sphere(2, 1.0)})}) {
    const CurvatureTensor r = build(spec);
    const HolonomyReport base = curvature_algebra(r);
    const Matrix q = random_orthogonal(r.dim(), rng);
    const HolonomyReport rotated = curvature_algebra(rotate_frame(r, q));
    CHECK(base.dimension == rotated.dimension);
    CHECK(base.invariant_subspace_dims == rotated.invariant_subspace_dims);
    CHECK(base.full_so_n == rotated.full_so_n);
  }
}

TEST_CASE("curvature is invariant under its own algebra on the symmetric catalog") {
  for (const auto& entry : builtin_catalog()) {
    CAPTURE(entry.text);
    const CurvatureTensor r = build(entry.spec);
    const HolonomyReport rep = curvature_algebra(r);
    const double tol = 1e-9 * std::max(1.0, r.max_abs());
    for (const Matrix& g : rep.generators) CHECK(derivation_residual(r, g) <= tol);
  }
}

TEST_CASE("theorem-style sweep: one-sided spectrum forces flat or full holonomy") {
  for (const auto& entry : builtin_catalog()) {
    CAPTURE(entry.text);
    const CurvatureTensor r = build(entry.spec);
    const int n = r.dim();
    if (n < 2) continue;
    const Spectrum s = eigh(second_kind(r).matrix).spectrum;
    if (is_k_nonneg(s, n) || is_k_nonpos(s, n)) {
      const bool flat = r.max_abs() <= 1e-9;
      const HolonomyReport rep = curvature_algebra(r);
      CHECK((flat || rep.full_so_n));
    }
  }
}
