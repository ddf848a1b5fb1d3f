#include "lorentzlab/principal_series.hpp"

#include "lorentzlab/quadrature.hpp"
#include "lorentzlab/run_config.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace lorentzlab {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

bool is_half_integer(const Rational& s) {
  const Rational twice = 2 * s;
  return boost::multiprecision::denominator(twice) == 1 &&
         boost::multiprecision::numerator(twice) % 2 != 0;
}
}  // namespace

CoeffVector CoeffVector::zero(int K) {
  if (K < 0) throw std::invalid_argument("CoeffVector: K must be >= 0");
  CoeffVector v;
  v.K = K;
  v.c = Eigen::VectorXcd::Zero(2 * K + 1);
  return v;
}

Rational lambda_product(const Rational& s, int n) {
  if (!(s > 0)) throw std::domain_error("lambda_product: s must be positive");
  Rational lam = 1;
  const int k = std::abs(n);
  for (int i = 0; i < k; ++i) {
    const Rational half = Rational(2 * i + 1, 2);  // i + 1/2
    lam *= (half - s) / (half + s);
  }
  return lam;
}

double lambda_value(double s, int n) {
  if (!(s > 0)) throw std::domain_error("lambda_value: s must be positive");
  double lam = 1.0;
  const int k = std::abs(n);
  for (int i = 0; i < k; ++i) lam *= (i + 0.5 - s) / (i + 0.5 + s);
  return lam;
}

Complex lambda_integral(double s, int k, int Q) {
  if (!(s > 0)) throw std::domain_error("lambda_integral: divergent for s <= 0");
  if (k < 0) throw std::invalid_argument("lambda_integral: k must be >= 0");
  if (Q < 64) throw std::invalid_argument("lambda_integral: Q must be >= 64");
  // After u = tan(phi):  lambda_k = int_{-pi/2}^{pi/2} (i cos phi - sin phi)^{2k}
  //                                  cos(phi)^{2s-1} dphi.
  const double expo = 2.0 * s - 1.0;
  return kPi / 2.0 *
         tanh_sinh_m11(Q, [&](double x, double delta) -> Complex {
           const double phi = 0.5 * kPi * x;
           // Near the endpoints cos(phi) = sin((pi/2) delta), formed from the
           // exactly-known endpoint distance instead of a cancelling subtraction.
           const double c = std::abs(x) <= 0.5 ? std::cos(phi) : std::sin(0.5 * kPi * delta);
           const double si = std::sin(phi);
           const Complex base(-si, c);  // i cos - sin
           Complex p = 1.0;
           for (int i = 0; i < 2 * k; ++i) p *= base;
           return p * std::pow(c, expo);
         });
}

Intertwiner Intertwiner::build(double s, int K) {
  if (!(s > 0)) throw std::domain_error("Intertwiner: s must be positive");
  if (K < 0) throw std::invalid_argument("Intertwiner: K must be >= 0");
  const double twice = 2.0 * s;
  if (twice == std::floor(twice) && std::llabs(static_cast<long long>(twice)) % 2 == 1)
    throw std::domain_error("Intertwiner: singular at half-integer s");
  Intertwiner a;
  a.s = s;
  a.K = K;
  a.lam = Eigen::VectorXd::Zero(2 * K + 1);
  double lam = 1.0;
  a.lam[K] = lam;
  for (int n = 1; n <= K; ++n) {
    lam *= (n - 0.5 - s) / (n - 0.5 + s);
    a.lam[K + n] = lam;
    a.lam[K - n] = lam;
  }
  return a;
}

namespace {

// Boundary data of g^{-1}: weight w_q = Jac(g^{-1})(theta_q)^{1/2+s} and
// pulled-back node z_q = g^{-1} . e^{i theta_q}.
void boundary_data(double s, const MobiusElement& g, int Q, std::vector<double>& w,
                   std::vector<Complex>& z) {
  const MobiusElement gi = g.inverse();
  const auto [al, be] = gi.to_su11();
  const double expo = 0.5 + s;
  w.resize(Q);
  z.resize(Q);
  for (int q = 0; q < Q; ++q) {
    const Complex eq = std::polar(1.0, kTwoPi * q / Q);
    const Complex den = std::conj(be) * eq + std::conj(al);
    const Complex num = al * eq + be;
    w[q] = std::pow(1.0 / std::norm(den), expo);
    const Complex zz = num / den;
    z[q] = zz / std::abs(zz);  // boundary points stay on the circle
  }
}

}  // namespace

RepMatrix rep_matrix(double s, const MobiusElement& g, int K, int Q, int threads) {
  if (K < 0) throw std::invalid_argument("rep_matrix: K must be >= 0");
  if (Q < 8 * K || Q < 8)
    throw std::invalid_argument("rep_matrix: Q must be at least 8K (aliasing)");
  const int dim = 2 * K + 1;
  RepMatrix out;
  out.s = s;
  out.K = K;
  out.Q = Q;
  out.m = Eigen::MatrixXcd::Zero(dim, dim);
  out.disc_displacement = g.disc_displacement();
  out.est_tail = out.disc_displacement > 0.0
                     ? std::pow(out.disc_displacement, K + 1) / (1.0 - out.disc_displacement)
                     : 0.0;

  std::vector<double> w;
  std::vector<Complex> z;
  boundary_data(s, g, Q, w, z);

  // Powers z^n and the analysis phases e^{-im theta} are precomputed; each
  // matrix entry is one serial length-Q sum in fixed order, so the assembly
  // is reproducible for any worker count.
  std::vector<std::vector<Complex>> zpow(dim, std::vector<Complex>(Q));
  for (int q = 0; q < Q; ++q) zpow[K][q] = 1.0;
  for (int n = 1; n <= K; ++n)
    for (int q = 0; q < Q; ++q) {
      zpow[K + n][q] = zpow[K + n - 1][q] * z[q];
      zpow[K - n][q] = std::conj(zpow[K + n][q]);
    }
  std::vector<std::vector<Complex>> phase(dim, std::vector<Complex>(Q));
  for (int row = 0; row < dim; ++row)
    for (int q = 0; q < Q; ++q)
      phase[row][q] = std::polar(1.0, -(row - K) * (kTwoPi * q / Q));

  Eigen::MatrixXcd& M = out.m;
  parallel_for(dim, [&](int col) {
    std::vector<Complex> sample(Q);
    for (int q = 0; q < Q; ++q) sample[q] = w[q] * zpow[col][q];
    for (int row = 0; row < dim; ++row) {
      const Complex* ph = phase[row].data();
      Complex acc = 0.0;
      for (int q = 0; q < Q; ++q) acc += sample[q] * ph[q];
      M(row, col) = acc / static_cast<double>(Q);
    }
  }, threads);
  return out;
}

Eigen::VectorXcd rep_column(double s, const MobiusElement& g, int K, int Q, int n) {
  if (K < 0) throw std::invalid_argument("rep_column: K must be >= 0");
  if (Q < 8 * K || Q < 8)
    throw std::invalid_argument("rep_column: Q must be at least 8K (aliasing)");
  if (std::abs(n) > K) throw std::invalid_argument("rep_column: |n| must be <= K");
  std::vector<double> w;
  std::vector<Complex> z;
  boundary_data(s, g, Q, w, z);
  // Same per-entry serial sums as the full assembly: powers by iterated
  // multiplication (conjugated for n < 0) and directly evaluated phases.
  std::vector<Complex> sample(Q);
  for (int q = 0; q < Q; ++q) {
    Complex p = 1.0;
    for (int i = 0; i < std::abs(n); ++i) p *= z[q];
    if (n < 0) p = std::conj(p);
    sample[q] = w[q] * p;
  }
  Eigen::VectorXcd col(2 * K + 1);
  for (int row = 0; row < 2 * K + 1; ++row) {
    Complex acc = 0.0;
    for (int q = 0; q < Q; ++q) acc += sample[q] * std::polar(1.0, -(row - K) * (kTwoPi * q / Q));
    col[row] = acc / static_cast<double>(Q);
  }
  return col;
}

CoeffVector apply(const RepMatrix& M, const CoeffVector& f) {
  if (M.K != f.K) throw std::invalid_argument("apply: window mismatch");
  CoeffVector out = CoeffVector::zero(f.K);
  out.c = M.m * f.c;
  return out;
}

Complex inner_s(const CoeffVector& f1, const CoeffVector& f2, const Intertwiner& A) {
  if (f1.K != f2.K || f1.K != A.K) throw std::invalid_argument("inner_s: window mismatch");
  Complex acc = 0.0;
  for (int i = 0; i < 2 * A.K + 1; ++i) acc += f1.c[i] * std::conj(f2.c[i]) * A.lam[i];
  return kTwoPi * acc;
}

double intertwine_residual(double s, const MobiusElement& g, int K, int Q) {
  const Intertwiner A = Intertwiner::build(s, K);
  const RepMatrix Mp = rep_matrix(s, g, K, Q);
  const RepMatrix Mm = rep_matrix(-s, g, K, Q);
  const int half = K / 2;
  double worst = 0.0;
  for (int m = -half; m <= half; ++m)
    for (int n = -half; n <= half; ++n) {
      const Complex r = A.at(m) * Mp.m(m + K, n + K) - Mm.m(m + K, n + K) * A.at(n);
      worst = std::max(worst, std::abs(r));
    }
  return worst;
}

double invariance_residual(double s, const MobiusElement& g, int K, int Q) {
  const Intertwiner A = Intertwiner::build(s, K);
  const RepMatrix M = rep_matrix(s, g, K, Q);
  const int half = K / 2;
  double worst = 0.0;
  for (int n = -half; n <= half; ++n)
    for (int m = -half; m <= half; ++m) {
      Complex acc = 0.0;
      for (int k = 0; k < 2 * K + 1; ++k)
        acc += M.m(k, n + K) * std::conj(M.m(k, m + K)) * A.lam[k];
      acc *= kTwoPi;
      const Complex expect = (m == n) ? Complex(kTwoPi * A.at(n), 0.0) : Complex(0.0, 0.0);
      worst = std::max(worst, std::abs(acc - expect));
    }
  return worst;
}

double homomorphism_residual(double s, const MobiusElement& g, const MobiusElement& h,
                             int K, int Q) {
  const RepMatrix Mg = rep_matrix(s, g, K, Q);
  const RepMatrix Mh = rep_matrix(s, h, K, Q);
  const RepMatrix Mgh = rep_matrix(s, g * h, K, Q);
  const Eigen::MatrixXcd prod = Mg.m * Mh.m;
  const int half = K / 2;
  double worst = 0.0;
  for (int m = -half; m <= half; ++m)
    for (int n = -half; n <= half; ++n)
      worst = std::max(worst, std::abs(prod(m + K, n + K) - Mgh.m(m + K, n + K)));
  return worst;
}

IndexSignature index_signature(const Rational& s, int K) {
  if (!(s > 0)) throw std::domain_error("index_signature: s must be positive");
  if (is_half_integer(s)) throw std::domain_error("index_signature: undefined at half-integer s");
  // p is the integer with s in (p - 1/2, p + 1/2), i.e. floor(s + 1/2).
  const Rational shifted = s + Rational(1, 2);
  const BigInt p_big = boost::multiprecision::numerator(shifted) /
                       boost::multiprecision::denominator(shifted);
  const int p = p_big.convert_to<int>();
  if (K < p) throw std::invalid_argument("index_signature: window too small to exhibit the pattern");

  IndexSignature out;
  out.p = p;
  // sign(lambda_n): the factor (i + 1/2 - s) is negative exactly for i < s - 1/2,
  // so lambda_n carries min(|n|, p) negative factors.
  out.pattern_ok = true;
  for (int n = -K; n <= K; ++n) {
    const int negs = std::min(std::abs(n), p);
    const int sign = (negs % 2 == 0) ? 1 : -1;
    // Exact cross-check of the counting argument against the rational product.
    const Rational lam = lambda_product(s, n);
    const int actual = lam > 0 ? 1 : (lam < 0 ? -1 : 0);
    if (actual != sign) out.pattern_ok = false;
    if (actual > 0) ++out.positives;
    else ++out.negatives;
  }
  const int expected = p;
  if (p % 2 == 1 && out.positives != expected) out.pattern_ok = false;
  if (p % 2 == 0 && out.negatives != expected) out.pattern_ok = false;
  return out;
}

CompletionData completion_norm(const CoeffVector& f, const Intertwiner& A) {
  if (f.K != A.K) throw std::invalid_argument("completion_norm: window mismatch");
  if (!(A.s > 0.5 && A.s < 1.5))
    throw std::domain_error("completion_norm: needs s in (1/2, 3/2)");
  for (int n = 0; n <= f.K; ++n)
    if (std::abs(f.at(-n) - std::conj(f.at(n))) > 1e-10)
      throw std::domain_error("completion_norm: coefficients are not Hermitian-symmetric");
  CompletionData out;
  out.mean = kTwoPi * f.at(0).real();
  double pairing = 0.0;
  for (int n = -f.K; n <= f.K; ++n)
    if (n != 0) pairing += std::norm(f.at(n)) * A.at(n);
  out.centered_pairing = kTwoPi * pairing;                  // <= 0 on this range
  out.norm = std::sqrt(out.mean * out.mean - out.centered_pairing);
  return out;
}

}  // namespace lorentzlab
