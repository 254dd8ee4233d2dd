#include "cosk/spectral.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace cosk {

Spectrum Spectrum::of(std::vector<double> v) {
  for (double x : v)
    if (!std::isfinite(x)) throw std::invalid_argument("Spectrum: non-finite eigenvalue");
  std::sort(v.begin(), v.end());
  return Spectrum{std::move(v)};
}

double Spectrum::scale() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return std::max(1.0, m);
}

Spectrum negate(const Spectrum& s) {
  std::vector<double> v(s.values.rbegin(), s.values.rend());
  for (double& x : v) x = -x;
  return Spectrum{std::move(v)};
}

EighSystem eigh(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigh: matrix not square");
  const double scale = std::max(1.0, m.max_abs());
  if (m.asymmetry() > 1e-10 * scale) throw std::invalid_argument("eigh: input not symmetric");

  EighResult r = jacobi_eigh(m);
  const int n = m.rows();

  // postcondition checks (cheap at these sizes)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double recon = 0.0, ortho = 0.0;
      for (int k = 0; k < n; ++k) {
        recon += r.eigenvectors(i, k) * r.eigenvalues[k] * r.eigenvectors(j, k);
        ortho += r.eigenvectors(k, i) * r.eigenvectors(k, j);
      }
      if (std::abs(recon - 0.5 * (m(i, j) + m(j, i))) > 1e-9 * scale)
        throw std::runtime_error("eigh: reconstruction residual too large");
      if (std::abs(ortho - (i == j ? 1.0 : 0.0)) > 1e-10)
        throw std::runtime_error("eigh: eigenvectors not orthonormal");
    }

  return EighSystem{Spectrum{std::move(r.eigenvalues)}, std::move(r.eigenvectors)};
}

double partial_sum(const Spectrum& s, double k) {
  const int d = static_cast<int>(s.size());
  if (!(k >= 0.0) || k > d + 1e-12) throw std::invalid_argument("partial_sum: k out of range");
  k = std::min(k, static_cast<double>(d));
  const int fl = std::min(static_cast<int>(std::floor(k)), d);
  double sum = 0.0;
  for (int i = 0; i < fl; ++i) sum += s.values[i];
  const double frac = k - fl;
  if (frac > 0.0 && fl < d) sum += frac * s.values[fl];
  return sum;
}

bool is_k_nonneg(const Spectrum& s, double k) { return partial_sum(s, k) >= -s.tol(); }

bool is_k_nonpos(const Spectrum& s, double k) { return is_k_nonneg(negate(s), k); }

bool is_k_positive(const Spectrum& s, double k) { return partial_sum(s, k) > s.tol(); }

std::optional<double> nonneg_threshold(const Spectrum& s) {
  const int d = static_cast<int>(s.size());
  if (d == 0) return 0.0;
  const double tol = s.tol();
  if (s.values.front() >= -tol) return 0.0;
  double prev = 0.0;  // S(0)
  for (int j = 1; j <= d; ++j) {
    const double cur = prev + s.values[j - 1];
    if (cur >= 0.0) {
      // piecewise-linear root inside (j-1, j]; slope is lambda_j > 0 here
      return (j - 1) + (-prev) / s.values[j - 1];
    }
    prev = cur;
  }
  if (prev >= -tol) return static_cast<double>(d);
  return std::nullopt;
}

int kernel_dim(const Spectrum& s) {
  const double tol = s.tol();
  int c = 0;
  for (double v : s.values)
    if (std::abs(v) <= tol) ++c;
  return c;
}

WeightBound greedy_weighted_min(const Spectrum& s, double cap, double total) {
  const int d = static_cast<int>(s.size());
  if (!(cap > 0.0)) throw std::invalid_argument("greedy_weighted_min: cap must be positive");
  if (total < 0.0 || total > cap * d + 1e-12 * std::max(1.0, cap * d))
    throw std::invalid_argument("greedy_weighted_min: infeasible budget");
  WeightBound wb{cap, total, 0.0};
  // cap the smallest eigenvalues first, fractional remainder on the next
  double remaining = total;
  for (int i = 0; i < d && remaining > 0.0; ++i) {
    const double w = std::min(cap, remaining);
    wb.minimum += w * s.values[i];
    remaining -= w;
  }
  return wb;
}

bool weight_principle_check(const Spectrum& s, double cap, double total, double k_prime) {
  const double ratio = total / cap;
  if (!(k_prime < ratio)) throw std::invalid_argument("weight_principle_check: requires k' < total/cap");
  if (!is_k_nonneg(s, k_prime)) return true;  // premise fails
  if (s.values.empty() || s.values.front() >= -s.tol()) return true;
  return partial_sum(s, std::min(ratio, static_cast<double>(s.size()))) > 0.0;
}

namespace {

Rational n_threshold_raw(long long n) {
  // 3n/2 * (n+2)/(n+4)
  return Rational(3 * n * (n + 2), 2 * (n + 4));
}

}  // namespace

Rational threshold_N(long long n) {
  if (n < 2) throw std::domain_error("threshold_N: n must be >= 2");
  return n_threshold_raw(n);
}

Rational threshold_Cp(long long n, long long p) {
  if (n < 2 || p < 1 || 2 * p > n) throw std::domain_error("threshold_Cp: need 1 <= p <= n/2");
  const long long den = n * n * p - n * p * p - 2 * n * p + 2 * n * n + 2 * n - 4 * p;
  return Rational(3 * n * (n + 2) * p * (n - p), 2 * den);
}

Rational threshold_kahler(long long m) {
  if (m < 1) throw std::domain_error("threshold_kahler: m must be >= 1");
  if (m % 2 == 0) return Rational(3 * m * (m + 1), m + 2);
  return Rational(3 * m * (m + 1) * (m * m - 1), (m + 2) * (m * m + 1));
}

std::vector<long long> integrality_scan(long long max_n) {
  if (max_n < 2) throw std::domain_error("integrality_scan: max_n must be >= 2");
  std::vector<long long> hits;
  for (long long n = 1; n <= max_n; ++n)
    if (n_threshold_raw(n).is_integer()) hits.push_back(n);
  return hits;
}

KReport make_k_report(const Spectrum& s, const std::vector<double>& ks) {
  KReport rep;
  rep.tol = s.tol();
  rep.scale = s.scale();
  rep.kernel_dim = kernel_dim(s);
  rep.nonneg_threshold = nonneg_threshold(s);
  for (double k : ks)
    rep.entries.push_back({k, partial_sum(s, k), is_k_nonneg(s, k), is_k_nonpos(s, k)});

  // monotonicity of the exact predicate: S(k) >= 0 implies S(k') >= 0 for
  // k' > k (ascending eigenvalues make S convex)
  for (std::size_t a = 0; a < rep.entries.size(); ++a)
    for (std::size_t b = 0; b < rep.entries.size(); ++b)
      if (rep.entries[a].k < rep.entries[b].k && rep.entries[a].partial_sum >= 0.0)
        assert(rep.entries[b].partial_sum >= -1e-12 * rep.scale);
  return rep;
}

}  // namespace cosk
