#ifndef COSK_MULTILINEAR_HPP
#define COSK_MULTILINEAR_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "cosk/linalg.hpp"

namespace cosk {

// Exterior and symmetric multilinear algebra over R^n with a fixed
// orthonormal frame e_1, ..., e_n (0-based indices in code).
//
// Conventions:
//   * <h, k> on symmetric/antisymmetric 2-tensors is the full component sum
//     sum_{ij} h_ij k_ij.
//   * Basis p-form monomials e^{i1} ^ ... ^ e^{ip}, i1 < ... < ip, are
//     orthonormal.

std::size_t binomial(int n, int k);

// Lexicographic rank of a strictly increasing index tuple among all
// p-subsets of {0, ..., n-1}.
std::size_t comb_rank(int n, std::span<const int> idx);
void comb_unrank(int n, int p, std::size_t rank, std::span<int> out);

// Symmetric 2-tensor; only the upper triangle is stored, so symmetry is
// exact by construction.
class SymTensor {
 public:
  SymTensor() = default;
  explicit SymTensor(int n) : n_(n), a_(static_cast<std::size_t>(n) * (n + 1) / 2, 0.0) {}

  int dim() const { return n_; }
  double operator()(int i, int j) const { return a_[pack(i, j)]; }
  void set(int i, int j, double v) { a_[pack(i, j)] = v; }
  void add(int i, int j, double v) { a_[pack(i, j)] += v; }

  double trace() const;
  double inner(const SymTensor& o) const;  // sum_{ij} h_ij k_ij
  double norm() const;
  double max_abs() const;

  SymTensor& operator+=(const SymTensor& o);
  SymTensor& operator*=(double s);
  void axpy(double s, const SymTensor& o);  // *this += s * o

  Matrix to_matrix() const;
  static SymTensor identity(int n);

 private:
  std::size_t pack(int i, int j) const {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(i) * n_ - static_cast<std::size_t>(i) * (i - 1) / 2 + (j - i);
  }
  int n_ = 0;
  std::vector<double> a_;
};

// Antisymmetric 2-tensor; strict upper triangle stored.
class SkewTensor {
 public:
  explicit SkewTensor(int n) : n_(n), a_(static_cast<std::size_t>(n) * (n - 1) / 2, 0.0) {}

  int dim() const { return n_; }
  double operator()(int i, int j) const {
    if (i == j) return 0.0;
    return i < j ? a_[pack(i, j)] : -a_[pack(j, i)];
  }
  void set(int i, int j, double v);
  void add(int i, int j, double v);

  double inner(const SkewTensor& o) const;  // sum_{ij} a_ij b_ij
  double norm() const;
  void axpy(double s, const SkewTensor& o);

  Matrix to_matrix() const;

 private:
  std::size_t pack(int i, int j) const {
    return static_cast<std::size_t>(i) * (2 * n_ - i - 1) / 2 + (j - i - 1);
  }
  int n_;
  std::vector<double> a_;
};

// Alternating p-form stored on strictly increasing multi-indices in
// lexicographic order.
class PForm {
 public:
  PForm(int n, int p);

  static PForm basis_monomial(int n, std::span<const int> increasing_idx);

  int dim() const { return n_; }
  int degree() const { return p_; }
  std::size_t size() const { return c_.size(); }

  double& operator[](std::size_t r) { return c_[r]; }
  double operator[](std::size_t r) const { return c_[r]; }

  // Evaluation on an arbitrary index tuple, with full antisymmetry
  // (repeated indices give 0).
  double eval(std::span<const int> idx) const;

  PForm& operator+=(const PForm& o);
  PForm& operator-=(const PForm& o);
  PForm& operator*=(double s);
  void axpy(double s, const PForm& o);
  double max_abs() const;

 private:
  int n_, p_;
  std::vector<double> c_;
};

struct SymBasisElement {
  int i, j;  // i <= j, 0-based
  SymTensor tensor;
};

// Orthonormal basis of S^2(R^n): diagonal e^i o e^i first, then
// (e^i o e^j + e^j o e^i)/sqrt(2) in lexicographic order.
std::vector<SymBasisElement> sym_basis(int n);

// h - (tr h / n) g
SymTensor tracefree_project(const SymTensor& h);

// (S w)(X_1, ..., X_p) = sum_i w(X_1, ..., S X_i, ..., X_p)
PForm sym_action(const SymTensor& s, const PForm& w);
PForm skew_action(const SkewTensor& a, const PForm& w);

// (i_v w)(X_2, ..., X_p) = w(v, X_2, ..., X_p)
PForm interior(std::span<const double> v, const PForm& w);

PForm wedge(const PForm& a, const PForm& b);

double form_inner(const PForm& a, const PForm& b);

}  // namespace cosk

#endif
