#include "cosk/bochner.hpp"

#include <cmath>
#include <stdexcept>

namespace cosk {

BochnerEvaluator::BochnerEvaluator(const CurvatureTensor& r) : n_(r.dim()) {
  require_valid(r);
  ricci_ = ricci(r);
  second_ = eigh(second_kind(r).matrix);
  first_ = eigh(first_kind(r).matrix);

  const auto basis = tracefree_basis(n_);
  const int d = static_cast<int>(basis.size());
  sym_eigs_.reserve(d);
  for (int a = 0; a < d; ++a) {
    SymTensor t(n_);
    for (int b = 0; b < d; ++b) t.axpy(second_.vectors(b, a), basis[b]);
    sym_eigs_.push_back(std::move(t));
  }

  const int m = n_ * (n_ - 1) / 2;
  skew_eigs_.reserve(m);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int a = 0; a < m; ++a) {
    SkewTensor t(n_);
    int b = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j, ++b) t.add(i, j, first_.vectors(b, a) * inv_sqrt2);
    skew_eigs_.push_back(std::move(t));
  }
}

void BochnerEvaluator::check_degree(const PForm& w) const {
  if (w.dim() != n_) throw std::invalid_argument("bochner: dimension mismatch");
  const int p = w.degree();
  if (p < 1 || 2 * p > n_)
    throw std::invalid_argument("bochner: degree must satisfy 1 <= p <= n/2");
}

BochnerBreakdown BochnerEvaluator::second_kind_quadratic(const PForm& w) const {
  check_degree(w);
  const int p = w.degree();
  BochnerBreakdown br;
  br.p = p;
  br.n = n_;

  for (std::size_t a = 0; a < sym_eigs_.size(); ++a) {
    const PForm sw = sym_action(sym_eigs_[a], w);
    br.term_eig += second_.spectrum.values[a] * form_inner(sw, sw);
  }

  double ric_pairing = 0.0;
  std::vector<double> ej(n_, 0.0), ric_row(n_);
  for (int j = 0; j < n_; ++j) {
    ej[j] = 1.0;
    for (int i = 0; i < n_; ++i) ric_row[i] = ricci_.ric(j, i);
    ric_pairing += form_inner(interior(ric_row, w), interior(ej, w));
    ej[j] = 0.0;
  }
  ric_pairing /= p;  // normalization: sum_j |i_{e_j} w|^2 = |w|^2
  br.term_ric = (static_cast<double>(p) * (n_ - 2 * p) / n_) * ric_pairing;

  br.term_scal = (static_cast<double>(p) * p / (static_cast<double>(n_) * n_)) * ricci_.scal *
                 form_inner(w, w);
  br.total = br.term_eig + br.term_ric + br.term_scal;
  return br;
}

double BochnerEvaluator::first_kind_quadratic(const PForm& w) const {
  check_degree(w);
  double s = 0.0;
  for (std::size_t a = 0; a < skew_eigs_.size(); ++a) {
    const PForm tw = skew_action(skew_eigs_[a], w);
    s += first_.spectrum.values[a] * form_inner(tw, tw);
  }
  return s;
}

double BochnerEvaluator::eigen_term(const std::vector<SymTensor>& basis,
                                    const std::vector<double>& vals, const PForm& w) const {
  double s = 0.0;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const PForm sw = sym_action(basis[a], w);
    s += vals[a] * form_inner(sw, sw);
  }
  return s;
}

BochnerBreakdown second_kind_quadratic(const CurvatureTensor& r, const PForm& w) {
  return BochnerEvaluator(r).second_kind_quadratic(w);
}

double first_kind_quadratic(const CurvatureTensor& r, const PForm& w) {
  return BochnerEvaluator(r).first_kind_quadratic(w);
}

double weitzenboeck_calibration(int n) {
  const CurvatureTensor r = build(SpaceSpec::sphere(n, 1.0));
  const int idx[1] = {0};
  const PForm w = PForm::basis_monomial(n, idx);
  return first_kind_quadratic(r, w) / (n - 1);
}

EinsteinBoundReport einstein_lower_bound_check(const BochnerEvaluator& ev, const PForm& w) {
  if (!ev.ricci_data().einstein)
    throw std::invalid_argument("einstein_lower_bound_check: tensor is not Einstein");
  const int n = ev.dim();
  const int p = w.degree();
  const BochnerBreakdown br = ev.second_kind_quadratic(w);
  const double norm2 = form_inner(w, w);
  const double pn = static_cast<double>(p) * (n - p);

  EinsteinBoundReport rep;
  rep.lhs = br.term_eig + pn / (static_cast<double>(n) * n) * ev.ricci_data().scal * norm2;
  const WeightBound wb = greedy_weighted_min(ev.second_kind_spectrum(),
                                             static_cast<double>(n + 4) / (n + 2), 1.5 * n);
  rep.rhs = pn / n * wb.minimum * norm2;
  rep.margin = rep.lhs - rep.rhs;
  rep.holds = rep.margin >= -1e-9 * std::max({1.0, std::abs(rep.lhs), std::abs(rep.rhs)});
  return rep;
}

EinsteinBoundReport einstein_lower_bound_check(const CurvatureTensor& r, const PForm& w) {
  return einstein_lower_bound_check(BochnerEvaluator(r), w);
}

PForm kahler_form(int m) {
  const int n = 2 * m;
  PForm w(n, 2);
  for (int k = 0; k < m; ++k) {
    const int idx[2] = {2 * k, 2 * k + 1};
    w[comb_rank(n, idx)] = 1.0;
  }
  return w;
}

std::vector<ParallelCandidate> parallel_candidates(const SpaceSpec& spec) {
  std::vector<ParallelCandidate> out;
  if (spec.kind == SpaceSpec::Kind::Product) {
    const int n = spec.dimension();
    int factor_no = 0;
    for (auto [off, d] : factor_blocks(spec)) {
      ++factor_no;
      if (d < 1 || 2 * d > n) continue;  // Bochner forms need p <= n/2
      std::vector<int> idx(d);
      for (int t = 0; t < d; ++t) idx[t] = off + t;
      out.push_back({PForm::basis_monomial(n, idx),
                     "volume pullback of factor " + std::to_string(factor_no)});
    }
  } else if (spec.kind == SpaceSpec::Kind::FubiniStudy) {
    const int m = spec.m;
    const PForm omega = kahler_form(m);
    PForm power = omega;
    for (int q = 1; 2 * q <= m; ++q) {
      if (q > 1) power = wedge(power, omega);
      out.push_back({power, "kahler power " + std::to_string(q)});
    }
  }
  return out;
}

}  // namespace cosk
