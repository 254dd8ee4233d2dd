#include "cosk/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cosk {

double CurvatureTensor::max_abs() const {
  double s = 0.0;
  for (double v : r_) s = std::max(s, std::abs(v));
  return s;
}

CurvatureTensor& CurvatureTensor::operator*=(double s) {
  for (double& v : r_) v *= s;
  return *this;
}

ValidationReport validate(const CurvatureTensor& r) {
  const int n = r.dim();
  ValidationReport rep;
  rep.scale = r.max_abs();
  rep.tolerance = 1e-10 * rep.scale;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double v = r(i, j, k, l);
          rep.antisym_ij = std::max(rep.antisym_ij, std::abs(v + r(j, i, k, l)));
          rep.antisym_kl = std::max(rep.antisym_kl, std::abs(v + r(i, j, l, k)));
          rep.pair_sym = std::max(rep.pair_sym, std::abs(v - r(k, l, i, j)));
          rep.bianchi = std::max(rep.bianchi, std::abs(v + r(j, k, i, l) + r(k, i, j, l)));
        }
  if (rep.antisym_ij > rep.tolerance)
    rep.violated = "antisymmetry in (i,j)";
  else if (rep.antisym_kl > rep.tolerance)
    rep.violated = "antisymmetry in (k,l)";
  else if (rep.pair_sym > rep.tolerance)
    rep.violated = "pair symmetry";
  else if (rep.bianchi > rep.tolerance)
    rep.violated = "first Bianchi identity";
  rep.accepted = rep.violated.empty();
  return rep;
}

void require_valid(const CurvatureTensor& r) {
  const ValidationReport rep = validate(r);
  if (!rep.accepted)
    throw std::invalid_argument("curvature tensor rejected: " + rep.violated + " violated");
}

RicciData ricci(const CurvatureTensor& r) {
  const int n = r.dim();
  RicciData rd{SymTensor(n)};
  for (int j = 0; j < n; ++j)
    for (int k = j; k < n; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += r(i, j, i, k);
      rd.ric.set(j, k, s);
    }
  rd.scal = rd.ric.trace();
  SymTensor dev = rd.ric;
  for (int i = 0; i < n; ++i) dev.add(i, i, -rd.scal / n);
  rd.einstein_deviation = dev.norm();
  rd.einstein = rd.einstein_deviation <= 1e-9 * std::max(1.0, rd.ric.norm());
  return rd;
}

EinsteinCheck einstein_check(const CurvatureTensor& r) {
  const RicciData rd = ricci(r);
  EinsteinCheck c;
  c.deviation = rd.einstein_deviation;
  c.tolerance = 1e-9 * std::max(1.0, rd.ric.norm());
  c.einstein = rd.einstein;
  return c;
}

std::vector<SymTensor> tracefree_basis(int n) {
  std::vector<SymTensor> basis;
  basis.reserve(static_cast<std::size_t>(n - 1) * (n + 2) / 2);
  for (int k = 1; k < n; ++k) {
    SymTensor t(n);
    const double c = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    for (int i = 0; i < k; ++i) t.set(i, i, c);
    t.set(k, k, -k * c);
    basis.push_back(std::move(t));
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      SymTensor t(n);
      t.set(i, j, inv_sqrt2);
      basis.push_back(std::move(t));
    }
  return basis;
}

SymTensor rbar_apply(const CurvatureTensor& r, const SymTensor& h) {
  const int n = r.dim();
  if (h.dim() != n) throw std::invalid_argument("rbar_apply: dimension mismatch");
  SymTensor out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s += r(i, k, l, j) * h(k, l);
      out.set(i, j, s);
    }
  return out;
}

SymTensor second_kind_apply(const CurvatureTensor& r, const RicciData& rd, const SymTensor& h) {
  const int n = r.dim();
  SymTensor out = rbar_apply(r, h);
  const double c = rd.ric.inner(h) / n;
  for (int i = 0; i < n; ++i) out.add(i, i, c);
  return out;
}

SecondKindOperator second_kind(const CurvatureTensor& r) {
  const int n = r.dim();
  const auto basis = tracefree_basis(n);
  const int d = static_cast<int>(basis.size());
  SecondKindOperator op{n, Matrix(d, d)};
  std::vector<SymTensor> images;
  images.reserve(d);
  for (const auto& b : basis) images.push_back(rbar_apply(r, b));
  // <Rbar b, g> drops against trace-free test tensors, so no projection
  // term is needed when both sides run over the trace-free basis.
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) op.matrix(a, b) = basis[a].inner(images[b]);
  return op;
}

FirstKindOperator first_kind(const CurvatureTensor& r) {
  const int n = r.dim();
  const int m = n * (n - 1) / 2;
  FirstKindOperator op{n, Matrix(m, m)};
  // (frak r w)_{ij} = sum_{kl} R_{ijkl} w_{kl}; over the orthonormal basis
  // F^{ij} this contracts to 2 R_{ijkl}.
  int a = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++a) {
      int b = 0;
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l, ++b) op.matrix(a, b) = 2.0 * r(i, j, k, l);
    }
  return op;
}

CurvatureTensor rotate_frame(const CurvatureTensor& r, const Matrix& q) {
  const int n = r.dim();
  if (q.rows() != n || q.cols() != n) throw std::invalid_argument("rotate_frame: size mismatch");
  // contract one slot at a time: R'(a,b,c,d) = R(Qe_a, Qe_b, Qe_c, Qe_d)
  auto contract_first = [n](const CurvatureTensor& t, const Matrix& m) {
    // out_{a j k l} = sum_i m(i, a) t_{i j k l}, then rotate slots left
    CurvatureTensor out(n);
    for (int a = 0; a < n; ++a)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += m(i, a) * t(i, j, k, l);
            // cycle slots so four applications restore the order
            out.at(j, k, l, a) = s;
          }
    return out;
  };
  CurvatureTensor cur = r;
  for (int step = 0; step < 4; ++step) cur = contract_first(cur, q);
  return cur;
}

std::vector<Matrix> curvature_operators(const CurvatureTensor& r) {
  const int n = r.dim();
  std::vector<Matrix> ops;
  ops.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Matrix g(n, n);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) g(k, l) = r(i, j, k, l);
      ops.push_back(std::move(g));
    }
  return ops;
}

double derivation_residual(const CurvatureTensor& r, const Matrix& a) {
  const int n = r.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double s = 0.0;
          for (int m = 0; m < n; ++m)
            s += a(m, i) * r(m, j, k, l) + a(m, j) * r(i, m, k, l) + a(m, k) * r(i, j, m, l) +
                 a(m, l) * r(i, j, k, m);
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

}  // namespace cosk
