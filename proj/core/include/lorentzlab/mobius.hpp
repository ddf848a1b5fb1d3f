#pragma once

#include <complex>
#include <utility>

namespace lorentzlab {

using Complex = std::complex<double>;

// Element of PSL2(R) stored as a real 2x2 unit-determinant matrix with the
// sign fixed so the first nonzero entry (scan order a, b, c, d) is positive.
// Acts on the unit disc through the Cayley conjugation z -> (z - i)/(z + i),
// under which the element becomes the SU(1,1) matrix
//   alpha = ((a+d) + i(b-c))/2,  beta = ((a-d) - i(b+c))/2,
// acting by z -> (alpha z + beta) / (conj(beta) z + conj(alpha)).
struct MobiusElement {
  double a = 1, b = 0, c = 0, d = 1;

  MobiusElement() = default;
  // Throws std::invalid_argument unless det = 1 within 1e-12 (small positive
  // drift is renormalized away).
  MobiusElement(double a_, double b_, double c_, double d_);

  MobiusElement inverse() const;

  std::pair<Complex, Complex> to_su11() const;  // (alpha, beta)

  // Mobius action on the closed unit disc.
  Complex disc_action(Complex z) const;
  // Modulus of the disc displacement of the origin, |g . 0| = |beta/alpha|.
  double disc_displacement() const;
  // Boundary circle map theta -> arg(g . e^{i theta}).
  double boundary_action(double theta) const;
  // Derivative d theta' / d theta of the boundary map,
  //   Jac(g)(theta) = 1 / |conj(beta) e^{i theta} + conj(alpha)|^2
  //                 = (1 - |g.0|^2) / |1 + conj(beta/alpha) e^{i theta}|^2  (up to rotation).
  double boundary_jacobian(double theta) const;
};

MobiusElement operator*(const MobiusElement& g, const MobiusElement& h);
bool approx_equal(const MobiusElement& g, const MobiusElement& h, double tol = 1e-10);

MobiusElement from_su11(Complex alpha, Complex beta);

// Iwasawa factorization g = k(theta) a(lambda) n(t) with theta in [0, pi),
// lambda > 0; reconstruction equals +-g (the PSL2 representative).
struct KAN {
  double theta = 0;   // SO(2) angle of k = (cos, -sin; sin, cos)
  double lambda = 1;  // diag(lambda, 1/lambda)
  double t = 0;       // upper unipotent parameter
};

KAN kan_decompose(const MobiusElement& g);

// One-parameter families.
// Raw SO(2) rotation matrix of angle phi (disc action: z -> e^{-2 i phi} z).
MobiusElement so2(double phi);
// Disc rotation by theta: z -> e^{i theta} z (the SO(2) matrix of angle -theta/2).
MobiusElement k_theta(double theta);
MobiusElement a_lambda(double lambda);  // diag(lambda, 1/lambda), lambda > 0
MobiusElement n_t(double t);            // (1, t; 0, 1)
MobiusElement nbar_u(double u);         // (1, 0; u, 1)
MobiusElement weyl_w();                 // (0, -1; 1, 0)
// Transvection moving the disc origin to tanh(t) along the positive real axis;
// the disc distance from o to g_t . o is 2t in the metric 4|dz|^2/(1-|z|^2)^2.
MobiusElement g_t(double t);
// Transvection moving the disc origin to the point z0 (|z0| < 1), no rotation part.
MobiusElement transvection_to(Complex z0);

}  // namespace lorentzlab
