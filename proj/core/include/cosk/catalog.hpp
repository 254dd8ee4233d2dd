#ifndef COSK_CATALOG_HPP
#define COSK_CATALOG_HPP

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "cosk/curvature.hpp"

namespace cosk {

// Description of a model geometry.  Grammar (see parse_spec):
//   sphere(n,kappa) | flat(n) | cpn(m) | sym(name) | product[spec;...]
// with an optional *scale(s) suffix multiplying the curvature tensor.
struct SpaceSpec {
  enum class Kind { SpaceForm, Flat, Product, FubiniStudy, LieSymmetric };

  Kind kind = Kind::Flat;
  int n = 0;              // SpaceForm / Flat
  double kappa = 0.0;     // SpaceForm
  int m = 0;              // FubiniStudy: real dimension 2m
  std::string dataset;    // LieSymmetric
  double scale = 1.0;     // curvature scale
  std::vector<SpaceSpec> factors;

  int dimension() const;
  std::string str() const;  // canonical rendering, parseable by parse_spec

  static SpaceSpec sphere(int n, double kappa, double scale = 1.0);
  static SpaceSpec flat(int n);
  static SpaceSpec cpn(int m, double scale = 1.0);
  static SpaceSpec sym(std::string dataset, double scale = 1.0);
  static SpaceSpec product(std::vector<SpaceSpec> factors, double scale = 1.0);
};

// Symmetric pair g = k (+) m given by structure constants over a basis of g.
// Curvature of the associated compact-type symmetric space:
//   R(X,Y,Z,W) = sigma <[[X,Y],Z], W>   on an orthonormal basis of m,
// with the global sign sigma in {+1,-1} fixed so that sectional curvatures
// are >= 0.
struct LieSymmetricData {
  std::string name;
  int dim_g = 0;
  std::vector<double> c;    // structure constants, c[(a*dim_g + b)*dim_g + e]
  std::vector<int> k_idx;   // basis indices spanning k (0-based)
  std::vector<int> m_idx;   // basis indices spanning m (0-based)
  Matrix inner_m;           // inner product on m in the m-basis

  double structure(int a, int b, int e) const {
    return c[(static_cast<std::size_t>(a) * dim_g + b) * dim_g + e];
  }
  void set_structure(int a, int b, int e, double v) {
    c[(static_cast<std::size_t>(a) * dim_g + b) * dim_g + e] = v;
  }
};

// Residual checks for LieSymmetricData; throws std::invalid_argument with
// the failed invariant when any residual exceeds its tolerance.
void require_symmetric_pair(const LieSymmetricData& data);

CurvatureTensor lie_symmetric(const LieSymmetricData& data);

// Built-in dataset: g = su(3), k = so(3), m = i * (traceless symmetric 3x3),
// inner product <X,Y> = -tr(XY).  n = 5.
const LieSymmetricData& su3_so3_data();

// Looks up built-in datasets by name ("su3_so3").
const LieSymmetricData* find_dataset(const std::string& name);

// JSON schema:
// { "name": str, "dim": int, "k_indices": [..], "m_indices": [..]  (1-based),
//   "structure_constants": [[a, b, e, value], ...]      (1-based; [g_a,g_b]
//     = sum_e value * g_e; the (b,a) entry is filled by antisymmetry),
//   "inner_product": [[..], ..] (dim_m x dim_m, optional, default identity) }
LieSymmetricData load_lie_json(const nlohmann::json& j);

// Builds the validated curvature tensor of a spec.  Extra named Lie datasets
// (e.g. loaded from JSON) can be supplied for sym(...) resolution.
CurvatureTensor build(const SpaceSpec& spec,
                      const std::vector<LieSymmetricData>& extra_datasets = {});

// Contiguous frame-index blocks of the factors of a product (the spec itself
// as a single block when it is not a product).  Nested products flatten.
std::vector<std::pair<int, int>> factor_blocks(const SpaceSpec& spec);  // (offset, dim)

// The built-in desk-scale catalog (all dimensions <= 8).
struct CatalogEntry {
  std::string text;
  SpaceSpec spec;
};
const std::vector<CatalogEntry>& builtin_catalog();

}  // namespace cosk

#endif
