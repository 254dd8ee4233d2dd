#include "cosk/holonomy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cosk/rng.hpp"

namespace cosk {
namespace {

double mat_dot(const Matrix& a, const Matrix& b) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * b(i, j);
  return s;
}

// Projects cand against the orthonormal basis; appends the normalized
// residual if it exceeds tol.  Returns whether the span grew.
bool extend_span(std::vector<Matrix>& basis, Matrix cand, double tol) {
  for (int pass = 0; pass < 2; ++pass)
    for (const Matrix& b : basis) {
      const double d = mat_dot(cand, b);
      cand -= d * b;
    }
  const double nn = cand.frobenius_norm();
  if (nn <= tol) return false;
  cand *= 1.0 / nn;
  basis.push_back(std::move(cand));
  return true;
}

}  // namespace

std::vector<int> invariant_subspaces(const std::vector<Matrix>& generators, int n,
                                     std::uint64_t seed) {
  const int nsym = n * (n + 1) / 2;
  // pack a symmetric matrix into upper-triangle coordinates
  std::vector<std::pair<int, int>> slots;
  slots.reserve(nsym);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) slots.emplace_back(i, j);

  Matrix commutant_basis;
  if (generators.empty()) {
    commutant_basis = Matrix::identity(nsym);
  } else {
    // [G, C] is symmetric for skew G and symmetric C, so each generator
    // contributes nsym linear equations on the nsym unknowns of C.
    Matrix a(static_cast<int>(generators.size()) * nsym, nsym);
    int row = 0;
    for (const Matrix& g : generators) {
      for (const auto& [i, j] : slots) {
        for (int v = 0; v < nsym; ++v) {
          const auto& [k, l] = slots[v];
          // coefficient of C_{kl} (and C_{lk}) in [G,C]_{ij}
          double coef = 0.0;
          auto add = [&](int kk, int ll) {
            // [G,C]_{ij} = sum_m G_im C_mj - C_im G_mj
            if (ll == j) coef += g(i, kk);
            if (kk == i) coef -= g(ll, j);
          };
          add(k, l);
          if (k != l) add(l, k);
          a(row, v) = coef;
        }
        ++row;
      }
    }
    commutant_basis = nullspace(a, 1e-9);
  }

  // generic symmetric commutant element
  Rng rng(seed);
  Matrix probe(n, n);
  for (int c = 0; c < commutant_basis.cols(); ++c) {
    const double g = rng.normal();
    for (int v = 0; v < nsym; ++v) {
      const auto& [i, j] = slots[v];
      probe(i, j) += g * commutant_basis(v, c);
      if (i != j) probe(j, i) += g * commutant_basis(v, c);
    }
  }

  const EighResult er = jacobi_eigh(probe);
  const double gap_tol = 1e-7 * std::max(1.0, probe.max_abs());
  std::vector<int> dims;
  int run = 1;
  for (int i = 1; i < n; ++i) {
    if (er.eigenvalues[i] - er.eigenvalues[i - 1] <= gap_tol) {
      ++run;
    } else {
      dims.push_back(run);
      run = 1;
    }
  }
  if (n > 0) dims.push_back(run);
  std::sort(dims.begin(), dims.end());
  return dims;
}

HolonomyReport curvature_algebra(const CurvatureTensor& r, std::uint64_t seed) {
  require_valid(r);
  const int n = r.dim();
  HolonomyReport rep;
  rep.n = n;
  rep.seed = seed;

  const std::vector<Matrix> ops = curvature_operators(r);
  double scale = 1.0;
  for (const Matrix& g : ops) scale = std::max(scale, g.frobenius_norm());
  const double tol = 1e-9 * scale;

  std::vector<Matrix> basis;
  for (const Matrix& g : ops) extend_span(basis, g, tol);

  // bracket closure; each round brackets every pair of current basis
  // elements, until a full round adds nothing
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t sz = basis.size();
    for (std::size_t a = 0; a < sz; ++a)
      for (std::size_t b = a + 1; b < sz; ++b)
        grew |= extend_span(basis, commutator(basis[a], basis[b]), tol);
    if (basis.size() > static_cast<std::size_t>(n) * (n - 1) / 2)
      throw std::runtime_error("curvature_algebra: span exceeded dim so(n)");
  }

  rep.dimension = static_cast<int>(basis.size());
  rep.invariant_subspace_dims = invariant_subspaces(basis, n, seed);
  rep.generators = std::move(basis);
  rep.full_so_n = rep.dimension == n * (n - 1) / 2;
  rep.reducible = rep.invariant_subspace_dims.size() > 1;
  rep.trivial = rep.dimension == 0;
  return rep;
}

}  // namespace cosk
