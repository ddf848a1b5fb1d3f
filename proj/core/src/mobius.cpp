#include "lorentzlab/mobius.hpp"

#include <cmath>
#include <stdexcept>

namespace lorentzlab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

MobiusElement::MobiusElement(double a_, double b_, double c_, double d_)
    : a(a_), b(b_), c(c_), d(d_) {
  const double dd = a * d - b * c;
  if (!(dd > 0.0) || std::abs(dd - 1.0) > 1e-9)
    throw std::invalid_argument("MobiusElement: determinant must be 1");
  if (dd != 1.0) {  // renormalize accumulated drift
    const double r = 1.0 / std::sqrt(dd);
    a *= r; b *= r; c *= r; d *= r;
  }
  // Projective sign: first nonzero of (a, b, c, d) positive.
  const double probe[4] = {a, b, c, d};
  for (double e : probe) {
    if (e != 0.0) {
      if (e < 0.0) { a = -a; b = -b; c = -c; d = -d; }
      break;
    }
  }
}

MobiusElement MobiusElement::inverse() const { return MobiusElement(d, -b, -c, a); }

std::pair<Complex, Complex> MobiusElement::to_su11() const {
  // Cayley conjugation of (a b; c d) by z -> (z - i)/(z + i).
  return {Complex(0.5 * (a + d), 0.5 * (b - c)), Complex(0.5 * (a - d), -0.5 * (b + c))};
}

Complex MobiusElement::disc_action(Complex z) const {
  const auto [al, be] = to_su11();
  return (al * z + be) / (std::conj(be) * z + std::conj(al));
}

double MobiusElement::disc_displacement() const {
  const auto [al, be] = to_su11();
  return std::abs(be) / std::abs(al);
}

double MobiusElement::boundary_action(double theta) const {
  const auto [al, be] = to_su11();
  const Complex z = std::polar(1.0, theta);
  const Complex num = al * z + be;
  const Complex den = std::conj(be) * z + std::conj(al);
  return std::arg(num * std::conj(den));
}

double MobiusElement::boundary_jacobian(double theta) const {
  const auto [al, be] = to_su11();
  const Complex den = std::conj(be) * std::polar(1.0, theta) + std::conj(al);
  return 1.0 / std::norm(den);
}

MobiusElement operator*(const MobiusElement& g, const MobiusElement& h) {
  return MobiusElement(g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
                       g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d);
}

bool approx_equal(const MobiusElement& g, const MobiusElement& h, double tol) {
  return std::abs(g.a - h.a) <= tol && std::abs(g.b - h.b) <= tol &&
         std::abs(g.c - h.c) <= tol && std::abs(g.d - h.d) <= tol;
}

MobiusElement from_su11(Complex alpha, Complex beta) {
  const double det = std::norm(alpha) - std::norm(beta);
  if (!(det > 0.0) || std::abs(det - 1.0) > 1e-9)
    throw std::invalid_argument("from_su11: |alpha|^2 - |beta|^2 must be 1");
  return MobiusElement(alpha.real() + beta.real(), alpha.imag() - beta.imag(),
                       -alpha.imag() - beta.imag(), alpha.real() - beta.real());
}

KAN kan_decompose(const MobiusElement& g) {
  KAN out;
  // First column of k(theta) a(lambda) n(t) is lambda (cos theta, sin theta).
  out.lambda = std::hypot(g.a, g.c);
  double theta = std::atan2(g.c, g.a);
  if (theta < 0.0) theta += kPi;   // PSL2: k(theta - pi) a n = -(k(theta) a n)
  if (theta >= kPi) theta -= kPi;
  out.theta = theta;
  out.t = (g.a * g.b + g.c * g.d) / (out.lambda * out.lambda);
  return out;
}

MobiusElement so2(double phi) {
  return MobiusElement(std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi));
}

MobiusElement k_theta(double theta) { return so2(-0.5 * theta); }

MobiusElement a_lambda(double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("a_lambda: lambda must be positive");
  return MobiusElement(lambda, 0.0, 0.0, 1.0 / lambda);
}

MobiusElement n_t(double t) { return MobiusElement(1.0, t, 0.0, 1.0); }

MobiusElement nbar_u(double u) { return MobiusElement(1.0, 0.0, u, 1.0); }

MobiusElement weyl_w() { return MobiusElement(0.0, -1.0, 1.0, 0.0); }

MobiusElement g_t(double t) { return a_lambda(std::exp(t)); }

MobiusElement transvection_to(Complex z0) {
  const double r = std::abs(z0);
  if (r >= 1.0) throw std::invalid_argument("transvection_to: target must be inside the disc");
  const double al = 1.0 / std::sqrt(1.0 - r * r);
  return from_su11(Complex(al, 0.0), z0 * al);
}

}  // namespace lorentzlab
