#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace lorentzlab {

// Bilinear form of signature (1, N) on R^{1+N}: B(x, y) = x0 y0 - sum_i xi yi.
// Coordinate 0 is the timelike direction spanned by the distinguished vector u = e0.
struct LorentzForm {
  int spatial_dim = 2;  // N

  int ambient_dim() const { return spatial_dim + 1; }
  Eigen::MatrixXd gram() const;  // diag(1, -1, ..., -1)
};

double lorentz_dot(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

// Complex-bilinear extension (no conjugation) to the complexified space.
std::complex<double> lorentz_dot_c(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y);

// Point on the upper sheet {B(x, x) = 1, x0 > 0}, the hyperboloid model of H^N.
struct HPoint {
  Eigen::VectorXd v;

  int spatial_dim() const { return static_cast<int>(v.size()) - 1; }
};

// Scales a timelike vector with positive time coordinate onto the sheet;
// throws std::domain_error for causal-character violations.
HPoint project_to_sheet(const Eigen::VectorXd& x);

HPoint base_vertex(int spatial_dim);  // e0

// cosh(distance) = B(x, y) >= 1 for sheet points.
double distance(const HPoint& x, const HPoint& y);

// exp_x(v) = cosh|v| x + sinh|v| v/|v| for tangent v (B(x,v) = 0, B(v,v) <= 0,
// |v| = sqrt(-B(v,v))).  A drift |B(x,v)| <= 1e-8 is projected out
// (v <- v - B(x,v) x); larger drift is rejected.
HPoint exp_map(const HPoint& x, const Eigen::VectorXd& v);

// Inverse of exp_map: tangent vector at x pointing to y with |v| = distance(x, y).
Eigen::VectorXd log_map(const HPoint& x, const HPoint& y);

// Constant-speed geodesic with gamma(0) = x, gamma(1) = y.
HPoint geodesic_point(const HPoint& x, const HPoint& y, double t);

// Isometry of the form: M^T J M = J, preserving the upper sheet.
struct LIsometry {
  Eigen::MatrixXd m;

  LIsometry inverse() const;
  HPoint apply(const HPoint& x) const;
};

// Verifies the two isometry conditions within tol; throws otherwise.
LIsometry make_isometry(const Eigen::MatrixXd& m, double tol = 1e-10);

// Hyperbolic rotation by t in the plane (e0, e_axis), axis in [1, N].
LIsometry boost(int spatial_dim, int axis, double t);
// Euclidean rotation by theta in the spatial plane (e_i, e_j), 1 <= i < j <= N.
LIsometry spatial_rotation(int spatial_dim, int i, int j, double theta);
// Unipotent translation fixing the null vector e0 + e1 (needs N >= 2).
LIsometry parabolic_translation(int spatial_dim, double u);
// Seeded word in boosts and rotations; deterministic for a fixed seed.
LIsometry random_isometry(int spatial_dim, std::uint64_t seed, int word_length = 6);

enum class IsometryType { Elliptic, Parabolic, Hyperbolic };

std::string to_string(IsometryType t);

// Orbit-growth classification report.  d_n = distance(base, M^n base); the
// stable translation length is L = lim d_n / n.
struct IsometryClass {
  IsometryType type = IsometryType::Elliptic;
  double translation_length = 0.0;  // slope estimate; 0 for elliptic/parabolic
  std::vector<double> orbit_distances;  // d_1 .. d_{n_iter}
  // Heuristic diagnostics: residuals of the linear and logarithmic growth fits
  // over the tail window, and the orbit range test outcome.
  double linear_fit_residual = 0.0;
  double log_fit_residual = 0.0;
  bool orbit_bounded = false;
};

// Classifies by orbit growth.  Heuristic windows: the orbit is "bounded" when
// the max over the second half does not exceed the max over the first half by
// more than tau_bounded; otherwise the tail (second half) is fitted against
// d ~ a + L n and d ~ a + b log n and the better model decides, requiring
// L > tau_hyperbolic for the hyperbolic verdict.  Exact parabolicity is not
// decidable numerically; parabolic is the exclusion branch.
IsometryClass classify_isometry(const LIsometry& M, const HPoint& base, int n_iter = 64,
                                double tau_hyperbolic = 1e-6, double tau_bounded = 1e-6);

// Curvature tensor of the complexified tangent space w.r.t. the complex
// bilinear extension:  R(X, Y, Z, W) = <Y,Z><X,W> - <X,Z><Y,W>.
std::complex<double> hermitian_curvature(const Eigen::VectorXcd& X, const Eigen::VectorXcd& Y,
                                         const Eigen::VectorXcd& Z, const Eigen::VectorXcd& W);

// R(X, Y, conj X, conj Y); vanishes iff X, Y are complex-linearly dependent
// when both lie in a complexified (negative definite) tangent space.
std::complex<double> hermitian_sectional_numerator(const Eigen::VectorXcd& X,
                                                   const Eigen::VectorXcd& Y);

}  // namespace lorentzlab
