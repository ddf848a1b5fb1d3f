#include "lorentzlab/exotic.hpp"

#include "lorentzlab/quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace lorentzlab {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double arccosh_near_one(double u) {
  return std::acosh(std::max(1.0, u));
}
}  // namespace

CoeffVector exotic_basepoint(int K) {
  CoeffVector v = CoeffVector::zero(K);
  v.at(0) = 1.0 / std::sqrt(kTwoPi);
  return v;
}

CoeffVector map_point(const ExoticConfig& cfg, const MobiusElement& g) {
  if (!(cfg.s > 0.5 && cfg.s < 1.5))
    throw std::domain_error("map_point: needs s in (1/2, 3/2)");
  // The basepoint is supported on n = 0, so its image is the single matrix
  // column n = 0 (scaled); no full assembly needed.
  CoeffVector v = CoeffVector::zero(cfg.K);
  v.c = rep_column(cfg.s, g, cfg.K, cfg.Q, 0) / std::sqrt(kTwoPi);
  const Intertwiner A = Intertwiner::build(cfg.s, cfg.K);
  const double p = inner_s(v, v, A).real();
  if (!(p > 0.0))
    throw std::domain_error("map_point: truncated image lost its timelike component");
  v.c /= std::sqrt(p);
  return v;
}

double pairing_distance(const CoeffVector& x, const CoeffVector& y, const Intertwiner& A) {
  return arccosh_near_one(inner_s(x, y, A).real());
}

double u_st(double s, double t, int Q) {
  if (!(s > 0)) throw std::domain_error("u_st: s must be positive");
  // |sinh t e^{i theta} + cosh t|^2 = cosh 2t + sinh 2t cos theta.
  const double c2 = std::cosh(2.0 * t), s2 = std::sinh(2.0 * t);
  const double expo = -(0.5 + s);
  return circle_mean(Q, [&](double theta) { return std::pow(c2 + s2 * std::cos(theta), expo); });
}

double u_taylor_deviation(double s, double t, int Q) {
  if (t == 0.0) throw std::invalid_argument("u_taylor_deviation: t must be nonzero");
  const double u = u_st(s, t, Q);
  return (u - 1.0) / (t * t) - (1.0 + 2.0 * s) * (0.5 * s - 0.25);
}

double c_formula(double s) { return (1.0 + 2.0 * s) * (s - 0.5) / 4.0; }

Rational c_formula_exact(const Rational& s) {
  return (1 + 2 * s) * (s - Rational(1, 2)) / 4;
}

double curvature_theorem(double s) {
  const double t = s - 0.5;
  return -2.0 / (t * (t + 1.0));
}

CurvatureReport curvature_estimate(double s, double h, int Q) {
  if (!(s > 0.5 && s < 1.5)) throw std::domain_error("curvature_estimate: needs s in (1/2, 3/2)");
  if (!(h > 0)) throw std::invalid_argument("curvature_estimate: h must be positive");
  // Disc distance from o to g_h . o is 2h, so c_hat(h) = d_image^2 / (2h)^2;
  // the expansion c_hat(h) = c + a h^2 + O(h^4) makes one Richardson step exact
  // through h^2.
  auto c_hat_at = [&](double step) {
    const double d = arccosh_near_one(u_st(s, step, Q));
    return d * d / (4.0 * step * step);
  };
  const double c1 = c_hat_at(h);
  const double c2 = c_hat_at(0.5 * h);
  CurvatureReport r;
  r.s = s;
  r.c_hat = (4.0 * c2 - c1) / 3.0;
  r.c_formula = c_formula(s);
  r.curvature_hat = -1.0 / r.c_hat;
  r.curvature_theorem = curvature_theorem(s);
  r.rel_err = std::abs(r.c_hat - r.c_formula) / r.c_formula;
  return r;
}

std::string curvature_csv(const std::vector<CurvatureReport>& rows,
                          const std::vector<std::string>& config_comments) {
  std::string out;
  for (const auto& line : config_comments) out += "# " + line + "\n";
  out += "s,c_hat,c_formula,curvature_hat,curvature_theorem,rel_err\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.s, r.c_hat,
                  r.c_formula, r.curvature_hat, r.curvature_theorem, r.rel_err);
    out += buf;
  }
  return out;
}

Eigen::VectorXd coeffs_to_lorentz(const CoeffVector& v, const Intertwiner& A) {
  if (v.K != A.K) throw std::invalid_argument("coeffs_to_lorentz: window mismatch");
  if (!(A.s > 0.5 && A.s < 1.5))
    throw std::domain_error("coeffs_to_lorentz: needs s in (1/2, 3/2)");
  for (int n = 0; n <= v.K; ++n)
    if (std::abs(v.at(-n) - std::conj(v.at(n))) > 1e-8)
      throw std::domain_error("coeffs_to_lorentz: coefficients are not Hermitian-symmetric");
  Eigen::VectorXd x(2 * v.K + 1);
  x[0] = std::sqrt(kTwoPi) * v.at(0).real();
  for (int n = 1; n <= v.K; ++n) {
    const double scale = std::sqrt(2.0 * kTwoPi * std::abs(A.at(n)));
    x[2 * n - 1] = scale * v.at(n).real();
    x[2 * n] = scale * v.at(n).imag();
  }
  return x;
}

}  // namespace lorentzlab
