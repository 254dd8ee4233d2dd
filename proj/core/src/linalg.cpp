#include "cosk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cosk {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double Matrix::max_abs() const {
  double s = 0.0;
  for (double v : a_) s = std::max(s, std::abs(v));
  return s;
}

double Matrix::asymmetry() const {
  double s = 0.0;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j) s = std::max(s, std::abs((*this)(i, j) - (*this)(j, i)));
  return s;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(double s) {
  for (double& v : a_) v *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::vector<double> Matrix::col(int j) const {
  std::vector<double> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

EighResult jacobi_eigh(const Matrix& m) {
  const int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("jacobi_eigh: matrix not square");

  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + m(j, i));
  Matrix v = Matrix::identity(n);

  if (n <= 1) {
    EighResult r;
    r.eigenvectors = v;
    if (n == 1) r.eigenvalues = {a(0, 0)};
    return r;
  }

  auto off_norm = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
  };

  const double scale = std::max(a.max_abs(), 1e-300);
  const double stop = 1e-15 * scale * n;

  for (int sweep = 0; sweep < 100 && off_norm() > stop; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= 1e-18 * scale) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

  EighResult r;
  r.eigenvalues.resize(n);
  r.eigenvectors = Matrix(n, n);
  for (int j = 0; j < n; ++j) {
    r.eigenvalues[j] = a(order[j], order[j]);
    for (int i = 0; i < n; ++i) r.eigenvectors(i, j) = v(i, order[j]);
  }
  return r;
}

Matrix nullspace(const Matrix& a, double tol_rel) {
  const int cols = a.cols();
  // Gram matrix keeps the eigen problem symmetric; sizes here are small
  // enough that the squared condition number is harmless at tol 1e-9.
  Matrix g = a.transposed() * a;
  EighResult eg = jacobi_eigh(g);
  const double sig_max = std::sqrt(std::max(0.0, eg.eigenvalues.empty() ? 0.0 : eg.eigenvalues.back()));
  const double thresh = tol_rel * std::max(1.0, sig_max);

  std::vector<int> keep;
  for (int j = 0; j < cols; ++j) {
    const double sigma = std::sqrt(std::max(0.0, eg.eigenvalues[j]));
    if (sigma <= thresh) keep.push_back(j);
  }
  Matrix basis(cols, static_cast<int>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c)
    for (int i = 0; i < cols; ++i) basis(i, static_cast<int>(c)) = eg.eigenvectors(i, keep[c]);
  return basis;
}

Matrix random_orthogonal(int n, Rng& rng) {
  Matrix q(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q(i, j) = rng.normal();
  // modified Gram-Schmidt with one re-orthogonalization pass
  for (int j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        double d = 0.0;
        for (int i = 0; i < n; ++i) d += q(i, j) * q(i, k);
        for (int i = 0; i < n; ++i) q(i, j) -= d * q(i, k);
      }
    }
    double nn = 0.0;
    for (int i = 0; i < n; ++i) nn += q(i, j) * q(i, j);
    nn = std::sqrt(nn);
    if (nn < 1e-12) throw std::runtime_error("random_orthogonal: degenerate draw");
    for (int i = 0; i < n; ++i) q(i, j) /= nn;
  }
  return q;
}

}  // namespace cosk
