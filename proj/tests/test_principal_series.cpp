#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <lorentzlab/mobius.hpp>
#include <lorentzlab/principal_series.hpp>
#include <lorentzlab/rational.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace lorentzlab;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

TEST_CASE("eigenvalue ladder: frozen exact values") {
  CHECK(lambda_product(Rational(1), 0) == Rational(1));
  CHECK(lambda_product(Rational(1), 1) == Rational(-1, 3));
  CHECK(lambda_product(Rational(1), 2) == Rational(-1, 15));
  CHECK(lambda_product(Rational(3, 4), 1) == Rational(-1, 5));
  // Even symmetry in the index.
  CHECK(lambda_product(Rational(5, 4), -3) == lambda_product(Rational(5, 4), 3));
  // At s = 3/2 the second rung is an exact zero (half-integer degeneracy).
  CHECK(lambda_product(Rational(3, 2), 1) == Rational(-1, 2));
  CHECK(lambda_product(Rational(3, 2), 2) == Rational(0));
  CHECK_THROWS_AS(lambda_product(Rational(-1, 2), 1), std::domain_error);
}

TEST_CASE("eigenvalue ladder: exact recursion and reciprocal product") {
  const Rational svals[] = {Rational(3, 4), Rational(1), Rational(5, 4), Rational(2),
                            Rational(7, 3), Rational(113, 100)};
  for (const Rational& s : svals) {
    for (int k = 0; k < 60; ++k) {
      // lambda_{k+1} (k + 1/2 + s) = lambda_k (k + 1/2 - s), cross-multiplied
      // so the check is exact rational arithmetic.
      const Rational half(2 * k + 1, 2);
      const Rational lhs = lambda_product(s, k + 1) * Rational(half + s);
      const Rational rhs = lambda_product(s, k) * Rational(half - s);
      CHECK(lhs == rhs);
    }
    // Multiplying by the reciprocal factors recovers exactly 1: the ladder at
    // parameter -s inverts the ladder at +s.
    for (int n : {1, 5, 23}) {
      Rational inv = 1;
      for (int i = 0; i < n; ++i) {
        const Rational half(2 * i + 1, 2);
        inv *= Rational(half + s) / Rational(half - s);
      }
      CHECK(Rational(lambda_product(s, n) * inv) == Rational(1));
    }
  }
}

TEST_CASE("eigenvalue ladder: floating path matches the exact one and decays") {
  const std::pair<double, Rational> params[] = {{0.6, Rational(3, 5)},
                                                {0.75, Rational(3, 4)},
                                                {1.0, Rational(1)},
                                                {1.25, Rational(5, 4)},
                                                {1.4, Rational(7, 5)}};
  for (const auto& [s, sr] : params) {
    double prev = 2.0;
    for (int n = 0; n <= 50; ++n) {
      const double exact = to_double(lambda_product(sr, n));
      CHECK(lambda_value(s, n) == doctest::Approx(exact).epsilon(1e-13));
      const double mag = std::abs(exact);
      if (n > 0) CHECK(mag < prev);  // strict decay in |n| on this range
      prev = mag;
    }
  }
}

TEST_CASE("oscillatory integral representation of the ladder") {
  // k = 0 carries only the beta-function factor: integral of (1+u^2)^{-3/2} = 2.
  const Complex base = lambda_integral(1.0, 0, 4096);
  CHECK(std::abs(base - Complex(2.0, 0.0)) < 1e-10);

  for (double s : {0.75, 1.0, 1.25}) {
    const Complex denom = lambda_integral(s, 0, 4096);
    for (int k = 1; k <= 10; ++k) {
      const Complex ratio = lambda_integral(s, k, 4096) / denom;
      CHECK(std::abs(ratio.imag()) < 1e-9);
      CHECK(std::abs(ratio.real() - lambda_value(s, k)) < 1e-8);
    }
  }
  CHECK_THROWS_AS(lambda_integral(-0.2, 0, 4096), std::domain_error);
  CHECK_THROWS_AS(lambda_integral(1.0, -1, 4096), std::invalid_argument);
  CHECK_THROWS_AS(lambda_integral(1.0, 0, 32), std::invalid_argument);
}

TEST_CASE("operator matrix: identity, rotations, validation") {
  const int K = 16, Q = 256;

  const RepMatrix mi = rep_matrix(1.0, MobiusElement(1, 0, 0, 1), K, Q);
  CHECK((mi.m - Eigen::MatrixXcd::Identity(2 * K + 1, 2 * K + 1)).cwiseAbs().maxCoeff() < 1e-12);

  // A disc rotation by theta acts diagonally with phases e^{-i n theta}.
  const double theta = 0.9;
  const RepMatrix mk = rep_matrix(1.0, k_theta(theta), K, Q);
  for (int n = -K; n <= K; ++n) {
    for (int m = -K; m <= K; ++m) {
      const Complex want =
          (m == n) ? std::polar(1.0, -static_cast<double>(n) * theta) : Complex(0, 0);
      CHECK(std::abs(mk.m(m + K, n + K) - want) < 1e-12);
    }
  }

  CHECK_THROWS_AS(rep_matrix(1.0, g_t(0.1), K, 8 * K - 1), std::invalid_argument);
  CHECK_THROWS_AS(rep_matrix(1.0, g_t(0.1), -1, Q), std::invalid_argument);
}

TEST_CASE("operator matrix: columns decay at the geometric displacement rate") {
  for (double s : {0.75, 1.0}) {
    for (double t : {0.15, 0.3, 0.5}) {
      const MobiusElement g = g_t(t);
      const RepMatrix M = rep_matrix(s, g, 64, 1024);
      CHECK(M.disc_displacement == doctest::Approx(std::tanh(t)).epsilon(1e-12));

      // Least-squares slope of log|entry| against row index, restricted to
      // the clean geometric regime (past the polynomial prefactor, above the
      // quadrature noise floor).
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      int cnt = 0;
      for (int m = 4; m <= 32; ++m) {
        const double v = std::abs(M.m(m + M.K, M.K));
        if (v < 1e-9) break;
        const double y = std::log(v);
        sx += m;
        sy += y;
        sxx += static_cast<double>(m) * m;
        sxy += m * y;
        ++cnt;
      }
      REQUIRE(cnt >= 5);
      const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
      const double rate = std::log(M.disc_displacement);
      CHECK(slope / rate > 0.9);
      CHECK(slope / rate < 1.1);
    }
  }
}

TEST_CASE("rep_column reproduces single matrix columns bit for bit") {
  const MobiusElement g = so2(0.4) * g_t(0.25);
  const int K = 24, Q = 256;
  const RepMatrix M = rep_matrix(1.25, g, K, Q);
  for (int n : {-24, -7, 0, 13, 24}) {
    const Eigen::VectorXcd col = rep_column(1.25, g, K, Q, n);
    REQUIRE(col.size() == 2 * K + 1);
    for (int m = -K; m <= K; ++m) {
      CHECK(col[m + K] == M.m(m + K, n + K));  // bitwise: same code path
    }
  }
  CHECK_THROWS_AS(rep_column(1.25, g, K, Q, K + 1), std::invalid_argument);
}

TEST_CASE("group law holds numerically in the truncated operator picture") {
  std::mt19937 rng(51);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  std::uniform_real_distribution<double> tt(0.05, 0.31);
  // The product of two truncated operators leaks through the cut at |n| = K,
  // and the composed element can displace ~0.55, so the window must be wide
  // enough for the leak to sit below the gate.
  for (int it = 0; it < 4; ++it) {
    const MobiusElement g = so2(ang(rng)) * g_t(tt(rng)) * so2(ang(rng));
    const MobiusElement h = so2(ang(rng)) * g_t(tt(rng)) * so2(ang(rng));
    CHECK(homomorphism_residual(1.0, g, h, 48, 384) < 1e-6);
  }
}

TEST_CASE("intertwining relation and invariant pairing at reference points") {
  CHECK(intertwine_residual(0.8, MobiusElement(1, 0, 0, 1), 32, 256) < 1e-14);
  CHECK(intertwine_residual(0.8, g_t(0.2), 64, 1024) < 1e-6);
  CHECK(invariance_residual(1.0, k_theta(0.7), 32, 256) < 1e-12);
  CHECK(invariance_residual(1.0, g_t(0.3), 64, 2048) < 1e-6);
}

TEST_CASE("invariant pairing: normalized constants and frozen rung values") {
  const int K = 16;
  const auto A = Intertwiner::build(1.0, K);

  CoeffVector c0 = CoeffVector::zero(K);
  c0.c[K] = 1.0 / std::sqrt(kTwoPi);
  CHECK(std::abs(inner_s(c0, c0, A) - Complex(1, 0)) < 1e-14);

  CoeffVector e1 = CoeffVector::zero(K), e2 = CoeffVector::zero(K);
  e1.c[K + 1] = 1.0;
  e2.c[K + 2] = 1.0;
  // Distinct modes are orthogonal; equal modes pick up 2 pi lambda_n.
  CHECK(std::abs(inner_s(e1, e2, A)) < 1e-15);
  CHECK(std::abs(inner_s(e1, e1, A) - Complex(kTwoPi * (-1.0 / 3.0), 0)) < 1e-12);

  CHECK_THROWS_AS(Intertwiner::build(1.5, K), std::domain_error);
}

TEST_CASE("index signature: sign pattern over the first four bands") {
  // Independent combinatorial oracle: lambda_n < 0 iff min(n, p) is odd,
  // where p counts the half-integers below s.
  for (int p = 1; p <= 4; ++p) {
    for (int j = 0; j < 5; ++j) {
      const Rational s =
          Rational(2 * p - 1, 2) + Rational(1 + j, 6);  // five points strictly inside the band
      const int K = 64;
      const IndexSignature sig = index_signature(s, K);
      CHECK(sig.p == p);
      int neg = 0;
      for (int n = 1; n <= K; ++n)
        if (std::min(n, p) % 2 == 1) neg += 2;  // +-n both count
      CHECK(sig.negatives == neg);
      CHECK(sig.positives == 2 * K + 1 - neg);
      CHECK(sig.pattern_ok);
    }
  }
  // Below the first band everything is positive.
  const IndexSignature low = index_signature(Rational(1, 4), 32);
  CHECK(low.p == 0);
  CHECK(low.negatives == 0);
  CHECK(low.pattern_ok);

  CHECK_THROWS_AS(index_signature(Rational(3, 2), 32), std::domain_error);
  CHECK_THROWS_AS(index_signature(Rational(5), 2), std::invalid_argument);
}

TEST_CASE("completion norm: constants, the cosine line, rotation invariance") {
  const int K = 8;
  const auto A = Intertwiner::build(1.0, K);

  // A constant c has mean 2 pi c, no centered part, and norm |mean|.
  CoeffVector cst = CoeffVector::zero(K);
  cst.c[K] = 0.3;
  const CompletionData dc = completion_norm(cst, A);
  CHECK(dc.mean == doctest::Approx(kTwoPi * 0.3).epsilon(1e-14));
  CHECK(dc.centered_pairing == doctest::Approx(0.0));
  CHECK(dc.norm == doctest::Approx(kTwoPi * 0.3).epsilon(1e-14));

  // f = cos(theta): centered pairing 2 pi (1/4 + 1/4) lambda_1 = -pi/3, so the
  // completion norm is sqrt(pi/3).
  CoeffVector cos_f = CoeffVector::zero(K);
  cos_f.c[K + 1] = 0.5;
  cos_f.c[K - 1] = 0.5;
  const CompletionData dcos = completion_norm(cos_f, A);
  CHECK(dcos.mean == doctest::Approx(0.0));
  CHECK(dcos.centered_pairing == doctest::Approx(-std::numbers::pi / 3.0).epsilon(1e-14));
  CHECK(dcos.norm == doctest::Approx(std::sqrt(std::numbers::pi / 3.0)).epsilon(1e-14));

  // Rotating the circle leaves the norm unchanged.
  const double alpha = 1.234;
  CoeffVector rot = CoeffVector::zero(K);
  for (int n = -K; n <= K; ++n)
    rot.c[n + K] = cos_f.at(n) * std::polar(1.0, -static_cast<double>(n) * alpha);
  CHECK(completion_norm(rot, A).norm == doctest::Approx(dcos.norm).epsilon(1e-12));

  // Out-of-band parameters and asymmetric inputs are rejected.
  const auto A2 = Intertwiner::build(1.15, K);
  CHECK_NOTHROW(completion_norm(cos_f, A2));
  CoeffVector asym = CoeffVector::zero(K);
  asym.c[K + 1] = Complex(0.5, 0.5);
  CHECK_THROWS_AS(completion_norm(asym, A), std::domain_error);
}

TEST_CASE("apply: truncated operator action is linear and windowed") {
  const MobiusElement g = g_t(0.2);
  const int K = 16, Q = 256;
  const RepMatrix M = rep_matrix(1.0, g, K, Q);

  CoeffVector f = CoeffVector::zero(K);
  f.c[K] = Complex(1.0, 0.0);
  f.c[K + 3] = Complex(0.0, 2.0);
  const CoeffVector out = apply(M, f);
  REQUIRE(out.K == K);
  for (int m = -K; m <= K; ++m) {
    const Complex want = M.m(m + K, K) * f.at(0) + M.m(m + K, K + 3) * f.at(3);
    CHECK(std::abs(out.at(m) - want) < 1e-14);
  }

  CoeffVector wrong = CoeffVector::zero(K + 1);
  CHECK_THROWS_AS(apply(M, wrong), std::invalid_argument);
}
