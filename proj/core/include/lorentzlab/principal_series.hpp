#pragma once

#include <Eigen/Dense>

#include "lorentzlab/mobius.hpp"
#include "lorentzlab/rational.hpp"

#include <complex>
#include <vector>

namespace lorentzlab {

// Finite Fourier window: coefficients c_n for n = -K..K of a function on the
// circle, f(theta) = sum c_n e^{i n theta}.  Storage index is n + K.
struct CoeffVector {
  int K = 0;
  Eigen::VectorXcd c;

  static CoeffVector zero(int K);
  Complex at(int n) const { return c[n + K]; }
  Complex& at(int n) { return c[n + K]; }
};

// Eigenvalue of the standard intertwiner on e_n:
//   lambda_0 = 1,  lambda_n = prod_{i=0}^{|n|-1} (i + 1/2 - s)/(i + 1/2 + s),
// exact over the rationals.  Requires s > 0.
Rational lambda_product(const Rational& s, int n);

// Same value in floating point via the recursion
//   lambda_{k+1} = ((k + 1/2 - s)/(k + 1/2 + s)) lambda_k.
double lambda_value(double s, int n);

// lambda_k as the integral  int_R ((i-u)/sqrt(1+u^2))^{2k} (1+u^2)^{-1/2-s} du,
// evaluated after the substitution u = tan(phi) on (-pi/2, pi/2) with a
// Q-node rule; the imaginary part of the result is a numerical zero.
// Note the integral normalization carries a factor lambda_0 = B(1/2, s)
// relative to the product; ratios lambda_k/lambda_0 are convention-free.
Complex lambda_integral(double s, int k, int Q);

// Diagonal intertwiner data on the window n = -K..K (floating point).
struct Intertwiner {
  double s = 1.0;
  int K = 0;
  Eigen::VectorXd lam;  // lam[n + K] = lambda_n, lambda_{-n} = lambda_n

  static Intertwiner build(double s, int K);
  double at(int n) const { return lam[n + K]; }
};

// Matrix of pi_s(g) f = Jac(g^{-1})^{1/2+s} f o g^{-1} on the window n = -K..K,
// assembled column-by-column from the Q-point uniform circle rule (fixed
// per-column summation order; worker count does not affect the result).
struct RepMatrix {
  double s = 1.0;
  int K = 0;
  int Q = 0;
  Eigen::MatrixXcd m;  // (2K+1) x (2K+1), row m, column n, index shift +K
  double disc_displacement = 0.0;  // |g . 0|, the geometric column decay rate
  double est_tail = 0.0;           // |g.0|^{K+1}/(1 - |g.0|): truncation estimate
};

// Requires Q >= 8K (anti-aliasing) and s > 0.
RepMatrix rep_matrix(double s, const MobiusElement& g, int K, int Q, int threads = 0);

// Single column n of the same matrix (rows m = -K..K), bit-identical to the
// corresponding column of rep_matrix but without assembling the rest; the
// column of the basepoint n = 0 is the workhorse of the equivariant map.
Eigen::VectorXcd rep_column(double s, const MobiusElement& g, int K, int Q, int n);

CoeffVector apply(const RepMatrix& M, const CoeffVector& f);

// Invariant pairing <f1, f2> = 2 pi sum_n f1_n conj(f2_n) lambda_n.
Complex inner_s(const CoeffVector& f1, const CoeffVector& f2, const Intertwiner& A);

// max over the central half-window |m|, |n| <= K/2 of
//   | lambda_m M_s[m,n] - M_{-s}[m,n] lambda_n |
// (the windowed image of A_s pi_s(g) - pi_{-s}(g) A_s; edge rows/columns are
// excluded because truncation pollutes them first).
double intertwine_residual(double s, const MobiusElement& g, int K, int Q);

// max over |m|, |n| <= K/2 of | <M e_n, M e_m> - <e_n, e_m> |  for M = pi_s(g).
double invariance_residual(double s, const MobiusElement& g, int K, int Q);

// max over |m|, |n| <= K/2 of | M(gh) - M(g) M(h) |[m,n].
double homomorphism_residual(double s, const MobiusElement& g, const MobiusElement& h,
                             int K, int Q);

// Exact sign census of the eigenvalues on the window |n| <= K.
// p is the integer with s in (p - 1/2, p + 1/2); the exceptional signs are
// the p coefficients lambda_0 (positive) and company:
//   p odd  -> exactly p positive eigenvalues, all others negative;
//   p even -> exactly p negative eigenvalues, all others positive
// (p = 0: positive definite).  Counts are over n = -K..K, requires K >= p,
// s > 0, s not a half-integer.
struct IndexSignature {
  int p = 0;
  int positives = 0;      // count over n = -K..K
  int negatives = 0;
  bool pattern_ok = false;
};

IndexSignature index_signature(const Rational& s, int K);

// Lorentzian norm of a real-valued window function for s in (1/2, 3/2):
//   norm^2 = mean^2 - <f0, f0>,   mean = integral f dtheta = 2 pi c_0,
// where f0 = f - c_0 is the centered part (on which the pairing is negative
// definite).  Requires Hermitian symmetry c_{-n} = conj(c_n) within 1e-10.
struct CompletionData {
  double mean = 0.0;              // integral of f over the circle
  double centered_pairing = 0.0;  // <f0, f0>  (<= 0)
  double norm = 0.0;              // sqrt(mean^2 - centered_pairing)
};

CompletionData completion_norm(const CoeffVector& f, const Intertwiner& A);

}  // namespace lorentzlab
