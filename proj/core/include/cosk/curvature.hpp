#ifndef COSK_CURVATURE_HPP
#define COSK_CURVATURE_HPP

#include <string>
#include <vector>

#include "cosk/linalg.hpp"
#include "cosk/multilinear.hpp"

namespace cosk {

// Algebraic curvature tensor at a point, components R_{ijkl} in an
// orthonormal frame.
//
// Sign convention (the single point all signs trace back to): the unit round
// sphere has R_{1212} = +1, i.e. R_{ijkl} = kappa (d_ik d_jl - d_il d_jk)
// for the space form of curvature kappa, sectional curvature is R_{ijij},
// and ric_{jk} = sum_i R_{ijik} makes the unit sphere's Ricci (n-1) g.
// Under this convention the second-kind operator of the unit sphere is the
// identity; the first-kind operator of the unit sphere is 2 * Id in the
// orthonormal Lambda^2 basis (e^i o e^j - e^j o e^i)/sqrt(2).
class CurvatureTensor {
 public:
  explicit CurvatureTensor(int n)
      : n_(n), r_(static_cast<std::size_t>(n) * n * n * n, 0.0) {}

  int dim() const { return n_; }
  double operator()(int i, int j, int k, int l) const { return r_[off(i, j, k, l)]; }
  double& at(int i, int j, int k, int l) { return r_[off(i, j, k, l)]; }
  double max_abs() const;

  CurvatureTensor& operator*=(double s);

 private:
  std::size_t off(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l;
  }
  int n_;
  std::vector<double> r_;
};

struct ValidationReport {
  double scale = 0.0;      // max |R_{ijkl}|
  double tolerance = 0.0;  // 1e-10 * scale
  double antisym_ij = 0.0;
  double antisym_kl = 0.0;
  double pair_sym = 0.0;
  double bianchi = 0.0;
  bool accepted = false;
  std::string violated;  // first violated symmetry class, empty if accepted
};

ValidationReport validate(const CurvatureTensor& r);
// throws std::invalid_argument naming the violated symmetry
void require_valid(const CurvatureTensor& r);

struct RicciData {
  SymTensor ric;
  double scal = 0.0;
  double einstein_deviation = 0.0;  // |ric - (scal/n) g|
  bool einstein = false;
};

RicciData ricci(const CurvatureTensor& r);

struct EinsteinCheck {
  bool einstein = false;
  double deviation = 0.0;
  double tolerance = 0.0;
};

EinsteinCheck einstein_check(const CurvatureTensor& r);

// Orthonormal basis of trace-free symmetric tensors, D = (n-1)(n+2)/2
// elements: first the n-1 diagonal combinations
//   (E^11 + ... + E^kk - k E^{k+1,k+1}) / sqrt(k(k+1)),  k = 1..n-1,
// then the off-diagonal (e^i o e^j + e^j o e^i)/sqrt(2) in lex order.
std::vector<SymTensor> tracefree_basis(int n);

struct SecondKindOperator {
  int n = 0;
  Matrix matrix;  // D x D over tracefree_basis(n)
};

struct FirstKindOperator {
  int n = 0;
  Matrix matrix;  // m x m over (e^i o e^j - e^j o e^i)/sqrt(2), i < j, lex
};

SecondKindOperator second_kind(const CurvatureTensor& r);
FirstKindOperator first_kind(const CurvatureTensor& r);

// (Rbar h)_{ij} = sum_{kl} R_{iklj} h_{kl}
SymTensor rbar_apply(const CurvatureTensor& r, const SymTensor& h);
// pr_{S^2_0} Rbar h for trace-free h, via Rbar(h) + <ric, h> g / n
SymTensor second_kind_apply(const CurvatureTensor& r, const RicciData& rd, const SymTensor& h);

// Components of the rotated tensor R'(e_a,...) = R(Q e_a, ...).
CurvatureTensor rotate_frame(const CurvatureTensor& r, const Matrix& q);

// Skew matrices R(e_i, e_j) for i < j: (G^{ij})_{kl} = R_{ijkl}.
std::vector<Matrix> curvature_operators(const CurvatureTensor& r);

// max |A.R| over components, where A acts on R as the infinitesimal frame
// rotation (derivation on each slot).
double derivation_residual(const CurvatureTensor& r, const Matrix& a);

}  // namespace cosk

#endif
