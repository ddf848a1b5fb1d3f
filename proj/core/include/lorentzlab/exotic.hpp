#pragma once

#include "lorentzlab/mobius.hpp"
#include "lorentzlab/principal_series.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace lorentzlab {

// Equivariant map of the disc into the unit pseudo-sphere of the pairing
// <.,.>_s for s in (1/2, 3/2): the orbit of the constant (2 pi)^{-1/2} under
// pi_s, windowed to |n| <= K.
struct ExoticConfig {
  double s = 1.0;
  int K = 64;
  int Q = 2048;
};

// Constant function with <b, b>_s = 1: coefficient (2 pi)^{-1/2} at n = 0.
CoeffVector exotic_basepoint(int K);

// pi_s(g) . basepoint, renormalized to <v, v>_s = 1.  Throws if the windowed
// pairing is not positive (truncation has destroyed the timelike component).
CoeffVector map_point(const ExoticConfig& cfg, const MobiusElement& g);

// arccosh of the pairing of two unit-pairing points.
double pairing_distance(const CoeffVector& x, const CoeffVector& y, const Intertwiner& A);

// u(s, t) = (1/2pi) int_0^{2pi} |sinh(t) e^{i theta} + cosh(t)|^{-1-2s} dtheta
//         = (1/2pi) int (cosh 2t + sinh 2t cos theta)^{-(1/2+s)} dtheta,
// the pairing of the basepoint with its g_t-translate: u = cosh(distance).
double u_st(double s, double t, int Q = 2048);

// Quadratic Taylor coefficient of u at t = 0 is 2 c(s); this returns the
// deviation  (u(s,t) - 1)/t^2 - (1 + 2s)(s/2 - 1/4),  which is O(t).
double u_taylor_deviation(double s, double t, int Q = 2048);

// c(s) = (1 + 2s)(s - 1/2)/4, the squared metric dilation of the map
// (disc distance 2t maps to pseudo-sphere distance 2t sqrt(c)).
double c_formula(double s);
Rational c_formula_exact(const Rational& s);

// Image curvature -1/c(s); with t = s - 1/2 this equals -2/(t(t+1)) exactly.
double curvature_theorem(double s);

// Finite-difference estimate of c(s): c_hat(h) = arccosh(u(s,h))^2 / (2h)^2,
// Richardson-extrapolated over steps h and h/2 (kills the h^2 term).
struct CurvatureReport {
  double s = 0;
  double c_hat = 0;
  double c_formula = 0;
  double curvature_hat = 0;       // -1 / c_hat
  double curvature_theorem = 0;   // -2 / (t (t + 1)),  t = s - 1/2
  double rel_err = 0;             // |c_hat - c_formula| / c_formula
};

CurvatureReport curvature_estimate(double s, double h = 1e-2, int Q = 2048);

// CSV with header "s,c_hat,c_formula,curvature_hat,curvature_theorem,rel_err".
std::string curvature_csv(const std::vector<CurvatureReport>& rows,
                          const std::vector<std::string>& config_comments = {});

// Isometric change of coordinates from a Hermitian-symmetric unit-pairing
// window vector to the standard form diag(1, -1, ..., -1) on R^{1+2K}:
//   x_0 = sqrt(2 pi) c_0,
//   x_{2n-1} + i x_{2n} = sqrt(4 pi |lambda_n|) c_n   (n = 1..K).
// Requires s in (1/2, 3/2) so that lambda_n < 0 for all n != 0.
Eigen::VectorXd coeffs_to_lorentz(const CoeffVector& v, const Intertwiner& A);

}  // namespace lorentzlab
