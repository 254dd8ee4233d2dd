#include "cosk/multilinear.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace cosk {
namespace {

constexpr int kMaxN = 33;

const std::array<std::array<std::size_t, kMaxN>, kMaxN>& pascal() {
  static const auto table = [] {
    std::array<std::array<std::size_t, kMaxN>, kMaxN> t{};
    for (int n = 0; n < kMaxN; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k)
        t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

}  // namespace

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (n >= kMaxN) throw std::invalid_argument("binomial: n too large");
  return pascal()[n][k];
}

std::size_t comb_rank(int n, std::span<const int> idx) {
  const int p = static_cast<int>(idx.size());
  std::size_t rank = 0;
  int prev = -1;
  for (int t = 0; t < p; ++t) {
    for (int j = prev + 1; j < idx[t]; ++j) rank += binomial(n - 1 - j, p - 1 - t);
    prev = idx[t];
  }
  return rank;
}

void comb_unrank(int n, int p, std::size_t rank, std::span<int> out) {
  int prev = -1;
  for (int t = 0; t < p; ++t) {
    int j = prev + 1;
    while (true) {
      const std::size_t block = binomial(n - 1 - j, p - 1 - t);
      if (rank < block) break;
      rank -= block;
      ++j;
    }
    out[t] = j;
    prev = j;
  }
}

double SymTensor::trace() const {
  double s = 0.0;
  for (int i = 0; i < n_; ++i) s += (*this)(i, i);
  return s;
}

double SymTensor::inner(const SymTensor& o) const {
  double s = 0.0;
  for (int i = 0; i < n_; ++i) {
    s += (*this)(i, i) * o(i, i);
    for (int j = i + 1; j < n_; ++j) s += 2.0 * (*this)(i, j) * o(i, j);
  }
  return s;
}

double SymTensor::norm() const { return std::sqrt(inner(*this)); }

double SymTensor::max_abs() const {
  double s = 0.0;
  for (double v : a_) s = std::max(s, std::abs(v));
  return s;
}

SymTensor& SymTensor::operator+=(const SymTensor& o) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

SymTensor& SymTensor::operator*=(double s) {
  for (double& v : a_) v *= s;
  return *this;
}

void SymTensor::axpy(double s, const SymTensor& o) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += s * o.a_[i];
}

Matrix SymTensor::to_matrix() const {
  Matrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

SymTensor SymTensor::identity(int n) {
  SymTensor g(n);
  for (int i = 0; i < n; ++i) g.set(i, i, 1.0);
  return g;
}

void SkewTensor::set(int i, int j, double v) {
  if (i == j) {
    if (v != 0.0) throw std::invalid_argument("SkewTensor: nonzero diagonal");
    return;
  }
  if (i < j)
    a_[pack(i, j)] = v;
  else
    a_[pack(j, i)] = -v;
}

void SkewTensor::add(int i, int j, double v) {
  if (i == j) return;
  if (i < j)
    a_[pack(i, j)] += v;
  else
    a_[pack(j, i)] -= v;
}

double SkewTensor::inner(const SkewTensor& o) const {
  double s = 0.0;
  for (std::size_t i = 0; i < a_.size(); ++i) s += 2.0 * a_[i] * o.a_[i];
  return s;
}

double SkewTensor::norm() const { return std::sqrt(inner(*this)); }

void SkewTensor::axpy(double s, const SkewTensor& o) {
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += s * o.a_[i];
}

Matrix SkewTensor::to_matrix() const {
  Matrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

PForm::PForm(int n, int p) : n_(n), p_(p) {
  if (n < 0 || p < 0 || p > n) throw std::invalid_argument("PForm: invalid degree");
  c_.assign(binomial(n, p), 0.0);
}

PForm PForm::basis_monomial(int n, std::span<const int> idx) {
  PForm w(n, static_cast<int>(idx.size()));
  for (std::size_t t = 0; t + 1 < idx.size(); ++t)
    if (idx[t] >= idx[t + 1]) throw std::invalid_argument("basis_monomial: indices not increasing");
  if (!idx.empty() && (idx.front() < 0 || idx.back() >= n))
    throw std::invalid_argument("basis_monomial: index out of range");
  w.c_[comb_rank(n, idx)] = 1.0;
  return w;
}

double PForm::eval(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != p_) throw std::invalid_argument("PForm::eval: wrong arity");
  std::array<int, 16> buf;
  if (p_ > 16) throw std::invalid_argument("PForm::eval: degree too large");
  std::copy(idx.begin(), idx.end(), buf.begin());
  // insertion sort, counting swaps
  int sign = 1;
  for (int t = 1; t < p_; ++t) {
    int v = buf[t];
    int j = t - 1;
    while (j >= 0 && buf[j] > v) {
      buf[j + 1] = buf[j];
      --j;
      sign = -sign;
    }
    buf[j + 1] = v;
  }
  for (int t = 0; t + 1 < p_; ++t)
    if (buf[t] == buf[t + 1]) return 0.0;
  return sign * c_[comb_rank(n_, std::span<const int>(buf.data(), p_))];
}

PForm& PForm::operator+=(const PForm& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

PForm& PForm::operator-=(const PForm& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

PForm& PForm::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

void PForm::axpy(double s, const PForm& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += s * o.c_[i];
}

double PForm::max_abs() const {
  double s = 0.0;
  for (double v : c_) s = std::max(s, std::abs(v));
  return s;
}

std::vector<SymBasisElement> sym_basis(int n) {
  if (n < 1) throw std::invalid_argument("sym_basis: n must be >= 1");
  std::vector<SymBasisElement> basis;
  basis.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < n; ++i) {
    SymTensor t(n);
    t.set(i, i, 1.0);
    basis.push_back({i, i, std::move(t)});
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      SymTensor t(n);
      t.set(i, j, inv_sqrt2);
      basis.push_back({i, j, std::move(t)});
    }
  return basis;
}

SymTensor tracefree_project(const SymTensor& h) {
  const int n = h.dim();
  SymTensor out = h;
  const double t = h.trace() / n;
  for (int i = 0; i < n; ++i) out.add(i, i, -t);
  return out;
}

namespace {

// Shared slot-replacement loop for sym_action / skew_action:
// (S w)(e_{i1}, ..., e_{ip}) = sum_t w(e_{i1}, ..., S e_{it}, ..., e_{ip})
// with S e_i = sum_m S_{mi} e_m.  On 1-forms this is the action of S^T on
// components (equal to the matrix action for symmetric S).
template <typename Tensor2>
PForm endo_action(const Tensor2& s, const PForm& w) {
  const int n = w.dim();
  const int p = w.degree();
  if (s.dim() != n) throw std::invalid_argument("action: dimension mismatch");
  PForm out(n, p);
  if (p == 0) return out;  // empty sum
  std::array<int, 16> idx, probe;
  for (std::size_t r = 0; r < out.size(); ++r) {
    comb_unrank(n, p, r, std::span<int>(idx.data(), p));
    double acc = 0.0;
    for (int t = 0; t < p; ++t) {
      std::copy(idx.begin(), idx.begin() + p, probe.begin());
      for (int m = 0; m < n; ++m) {
        const double smt = s(m, idx[t]);
        if (smt == 0.0) continue;
        probe[t] = m;
        acc += smt * w.eval(std::span<const int>(probe.data(), p));
      }
      probe[t] = idx[t];
    }
    out[r] = acc;
  }
  return out;
}

}  // namespace

PForm sym_action(const SymTensor& s, const PForm& w) { return endo_action(s, w); }

PForm skew_action(const SkewTensor& a, const PForm& w) { return endo_action(a, w); }

PForm interior(std::span<const double> v, const PForm& w) {
  const int n = w.dim();
  const int p = w.degree();
  if (static_cast<int>(v.size()) != n) throw std::invalid_argument("interior: dimension mismatch");
  if (p < 1) throw std::invalid_argument("interior: invalid degree");
  PForm out(n, p - 1);
  std::array<int, 16> tuple;
  for (std::size_t r = 0; r < out.size(); ++r) {
    comb_unrank(n, p - 1, r, std::span<int>(tuple.data() + 1, p - 1));
    double acc = 0.0;
    for (int m = 0; m < n; ++m) {
      if (v[m] == 0.0) continue;
      tuple[0] = m;
      acc += v[m] * w.eval(std::span<const int>(tuple.data(), p));
    }
    out[r] = acc;
  }
  return out;
}

PForm wedge(const PForm& a, const PForm& b) {
  const int n = a.dim();
  if (b.dim() != n) throw std::invalid_argument("wedge: dimension mismatch");
  const int p = a.degree(), q = b.degree();
  if (p + q > n) throw std::invalid_argument("wedge: invalid degree");
  PForm out(n, p + q);
  std::array<int, 16> idx, ja, jb;
  std::array<int, 16> pos;
  for (std::size_t r = 0; r < out.size(); ++r) {
    comb_unrank(n, p + q, r, std::span<int>(idx.data(), p + q));
    double acc = 0.0;
    // iterate position subsets of size p; shuffle sign is
    // (-1)^(sum pos_t - t)
    for (int t = 0; t < p; ++t) pos[t] = t;
    while (true) {
      int sgn_exp = 0;
      {
        int ai = 0, bi = 0;
        for (int t = 0; t < p; ++t) sgn_exp += pos[t] - t;
        for (int t = 0; t < p + q; ++t) {
          if (ai < p && pos[ai] == t)
            ja[ai++] = idx[t];
          else
            jb[bi++] = idx[t];
        }
      }
      const double av = a[comb_rank(n, std::span<const int>(ja.data(), p))];
      if (av != 0.0) {
        const double bv = b[comb_rank(n, std::span<const int>(jb.data(), q))];
        acc += ((sgn_exp & 1) ? -1.0 : 1.0) * av * bv;
      }
      // next combination of positions
      int t = p - 1;
      while (t >= 0 && pos[t] == q + t) --t;
      if (t < 0) break;
      ++pos[t];
      for (int u = t + 1; u < p; ++u) pos[u] = pos[u - 1] + 1;
    }
    out[r] = acc;
  }
  return out;
}

double form_inner(const PForm& a, const PForm& b) {
  if (a.dim() != b.dim() || a.degree() != b.degree())
    throw std::invalid_argument("form_inner: degree mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace cosk
