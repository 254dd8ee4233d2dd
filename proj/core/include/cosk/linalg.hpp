#ifndef COSK_LINALG_HPP
#define COSK_LINALG_HPP

#include <cstddef>
#include <vector>

#include "cosk/rng.hpp"

namespace cosk {

// Dense row-major matrix. Sized for the problems in this library
// (dimensions by the dozens, not thousands).
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0.0) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  Matrix transposed() const;
  double frobenius_norm() const;
  double max_abs() const;
  // residual |A - A^T|_max
  double asymmetry() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(double s);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, double s) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }

  std::vector<double> col(int j) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm(const std::vector<double>& a);

struct EighResult {
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // columns, same order
};

// Cyclic Jacobi diagonalization of a symmetric matrix.  Uses the lower/upper
// average of the input, so callers must check symmetry themselves if the
// contract requires rejecting asymmetric input.
EighResult jacobi_eigh(const Matrix& m);

// Orthonormal basis (columns) of the nullspace of a, i.e. vectors with
// |a x| <= tol_rel * max(1, sigma_max) * |x|.
Matrix nullspace(const Matrix& a, double tol_rel = 1e-9);

// Haar-ish random orthogonal matrix (Gaussian + modified Gram-Schmidt).
Matrix random_orthogonal(int n, Rng& rng);

}  // namespace cosk

#endif
