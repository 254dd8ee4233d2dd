#ifndef COSK_SPECTRAL_HPP
#define COSK_SPECTRAL_HPP

#include <optional>
#include <vector>

#include "cosk/linalg.hpp"
#include "cosk/rational.hpp"

namespace cosk {

// Ascending eigenvalue list.  All sign decisions use the tolerance
// tol() = 1e-9 * scale(); raw partial sums are always reported alongside so
// borderline calls stay auditable.
struct Spectrum {
  std::vector<double> values;  // ascending

  static Spectrum of(std::vector<double> v);  // sorts
  std::size_t size() const { return values.size(); }
  double scale() const;  // max(1, max |lambda|)
  double tol() const { return 1e-9 * scale(); }
};

Spectrum negate(const Spectrum& s);

struct EighSystem {
  Spectrum spectrum;
  Matrix vectors;  // orthonormal columns, ascending eigenvalue order
};

// Symmetric eigensolver with a checked contract: rejects input with
// asymmetry residual > 1e-10 * scale; verifies |M - Q L Q^T| <= 1e-9 * scale
// and orthonormality of Q to 1e-10.
EighSystem eigh(const Matrix& m);

// S(k) = lambda_1 + ... + lambda_floor(k) + (k - floor(k)) lambda_{floor(k)+1};
// piecewise linear and convex in k for ascending eigenvalues.
double partial_sum(const Spectrum& s, double k);

bool is_k_nonneg(const Spectrum& s, double k);   // S(k) >= -tol
bool is_k_nonpos(const Spectrum& s, double k);   // negated spectrum test
bool is_k_positive(const Spectrum& s, double k); // S(k) > +tol

// 0 when lambda_1 >= -tol; otherwise the root k* of S(k) = 0 (S >= 0 on
// [k*, D] by convexity); nullopt when S(D) < -tol.
std::optional<double> nonneg_threshold(const Spectrum& s);

int kernel_dim(const Spectrum& s);  // # of |lambda| <= tol

struct WeightBound {
  double cap = 0.0;
  double total = 0.0;
  double minimum = 0.0;  // min of sum w_a lambda_a, 0 <= w_a <= cap, sum w_a = total
};

// Greedy optimum: cap on the smallest eigenvalues, fractional remainder on
// the next.  Equals cap * S(total/cap).
WeightBound greedy_weighted_min(const Spectrum& s, double cap, double total);

// Weight principle: if the spectrum is k'-nonnegative for k' < N = total/cap,
// then S(N) > 0 or lambda_1 >= -tol.  Returns whether the implication holds
// for this spectrum (vacuously true when the premise fails).
bool weight_principle_check(const Spectrum& s, double cap, double total, double k_prime);

// Threshold constants, exact rational arithmetic.
Rational threshold_N(long long n);                  // 3n/2 * (n+2)/(n+4), n >= 2
Rational threshold_Cp(long long n, long long p);    // 1 <= p <= n/2
Rational threshold_kahler(long long m);             // m >= 1

// All n in [1, max_n] with integral N(n).
std::vector<long long> integrality_scan(long long max_n);

// Per-k summary used by reports.
struct KEntry {
  double k = 0.0;
  double partial_sum = 0.0;
  bool nonneg = false;
  bool nonpos = false;
};

struct KReport {
  std::vector<KEntry> entries;
  std::optional<double> nonneg_threshold;
  int kernel_dim = 0;
  double tol = 0.0;
  double scale = 0.0;
};

KReport make_k_report(const Spectrum& s, const std::vector<double>& ks);

}  // namespace cosk

#endif
