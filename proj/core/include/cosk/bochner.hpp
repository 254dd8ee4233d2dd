#ifndef COSK_BOCHNER_HPP
#define COSK_BOCHNER_HPP

#include <string>
#include <vector>

#include "cosk/catalog.hpp"
#include "cosk/curvature.hpp"
#include "cosk/spectral.hpp"

namespace cosk {

// Three-term decomposition of (3/2) g(Ric_L w, w) for a p-form w,
// 1 <= p <= n/2:
//
//   total = sum_a lambda_a |S_a w|^2
//         + (p(n-2p)/n) * Ric-interior pairing
//         + (p^2/n^2) scal |w|^2
//
// where {S_a} is an orthonormal eigenbasis of the second-kind operator.
// The Ric-interior pairing sum_j <i_{Ric(e_j)} w, i_{e_j} w> is taken in
// the normalization with sum_j |i_{e_j} w|^2 = |w|^2, i.e. 1/p times the
// componentwise pairing of canonical (p-1)-forms; with unit increasing
// monomials on Lambda^p this is the normalization that closes the
// decomposition (for Einstein tensors the last two terms collapse to
// (p(n-p)/n^2) scal |w|^2).
struct BochnerBreakdown {
  int p = 0;
  int n = 0;
  double term_eig = 0.0;
  double term_ric = 0.0;
  double term_scal = 0.0;
  double total = 0.0;
};

// Eigen-systems of both curvature operators for one tensor, so that form
// sweeps do not re-diagonalize per form.
class BochnerEvaluator {
 public:
  explicit BochnerEvaluator(const CurvatureTensor& r);

  int dim() const { return n_; }
  const RicciData& ricci_data() const { return ricci_; }
  const Spectrum& second_kind_spectrum() const { return second_.spectrum; }
  const Spectrum& first_kind_spectrum() const { return first_.spectrum; }
  const std::vector<SymTensor>& second_kind_eigentensors() const { return sym_eigs_; }

  BochnerBreakdown second_kind_quadratic(const PForm& w) const;

  // Weitzenboeck oracle sum_a mu_a |Theta_a w|^2 over an eigenbasis of the
  // first-kind operator; equals c * g(Ric_L w, w) for the global constant
  // c = weitzenboeck_calibration() (1 under this library's conventions).
  double first_kind_quadratic(const PForm& w) const;

  // sum_a lambda_a |S_a w|^2 with a caller-supplied eigenbasis (used by the
  // degenerate-eigenspace rotation tests).
  double eigen_term(const std::vector<SymTensor>& basis, const std::vector<double>& vals,
                    const PForm& w) const;

 private:
  void check_degree(const PForm& w) const;

  int n_;
  RicciData ricci_;
  EighSystem second_;
  EighSystem first_;
  std::vector<SymTensor> sym_eigs_;
  std::vector<SkewTensor> skew_eigs_;
};

BochnerBreakdown second_kind_quadratic(const CurvatureTensor& r, const PForm& w);
double first_kind_quadratic(const CurvatureTensor& r, const PForm& w);

// Calibration of the oracle constant on the unit sphere with a coordinate
// 1-form: c = first_kind_quadratic / (n-1).
double weitzenboeck_calibration(int n = 5);

struct EinsteinBoundReport {
  double lhs = 0.0;  // sum lambda_a |S_a w|^2 + (p(n-p)/n^2) scal |w|^2
  double rhs = 0.0;  // (p(n-p)/n) * greedy min with cap (n+4)/(n+2), total 3n/2
  double margin = 0.0;
  bool holds = false;
};

// Requires an Einstein tensor; throws std::invalid_argument otherwise.
EinsteinBoundReport einstein_lower_bound_check(const CurvatureTensor& r, const PForm& w);
EinsteinBoundReport einstein_lower_bound_check(const BochnerEvaluator& ev, const PForm& w);

struct ParallelCandidate {
  PForm form;
  std::string description;
};

// Known parallel forms of a spec, restricted to degrees 1 <= p <= n/2:
// per-factor volume pullbacks for products, Kaehler powers w^q, q <= m/2,
// for cpn(m).  Empty for specs without known parallel forms in range.
std::vector<ParallelCandidate> parallel_candidates(const SpaceSpec& spec);

// The Kaehler 2-form e^1^e^2 + ... + e^{2m-1}^e^{2m} of the cpn frame.
PForm kahler_form(int m);

}  // namespace cosk

#endif
