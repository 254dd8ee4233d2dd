#ifndef COSK_HOLONOMY_HPP
#define COSK_HOLONOMY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cosk/curvature.hpp"
#include "cosk/version.hpp"

namespace cosk {

// Bracket-closed span of the curvature operators R(e_i, e_j).  This is a
// subalgebra of the restricted holonomy algebra (Ambrose-Singer); it is the
// full holonomy algebra on locally symmetric spaces, which covers the whole
// built-in catalog.  The `kind` field records that caveat.
struct HolonomyReport {
  int n = 0;
  int dimension = 0;
  std::vector<Matrix> generators;           // orthonormal skew matrices
  std::vector<int> invariant_subspace_dims; // ascending, sums to n
  bool full_so_n = false;
  bool reducible = false;
  bool trivial = false;
  std::uint64_t seed = 0;
  std::string kind = "curvature-generated subalgebra";
};

// Span growth uses a single rank knob: a candidate extends the span iff its
// residual after projection exceeds 1e-9 * scale.
HolonomyReport curvature_algebra(const CurvatureTensor& r, std::uint64_t seed = kDefaultSeed);

// Minimal invariant subspace dimensions of the span of the given skew
// matrices, from the eigenspaces of a seeded random symmetric element of
// their commutant.
std::vector<int> invariant_subspaces(const std::vector<Matrix>& generators, int n,
                                     std::uint64_t seed = kDefaultSeed);

}  // namespace cosk

#endif
