#include "lorentzlab/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace lorentzlab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double circle_mean(int Q, const std::function<double(double)>& f) {
  if (Q < 2) throw std::invalid_argument("circle_mean: Q must be >= 2");
  double acc = 0.0;
  for (int q = 0; q < Q; ++q) acc += f(2.0 * kPi * q / Q);
  return acc / Q;
}

std::complex<double> circle_mean_c(int Q,
                                   const std::function<std::complex<double>(double)>& f) {
  if (Q < 2) throw std::invalid_argument("circle_mean: Q must be >= 2");
  std::complex<double> acc = 0.0;
  for (int q = 0; q < Q; ++q) acc += f(2.0 * kPi * q / Q);
  return acc / static_cast<double>(Q);
}

// Nodes x_j = tanh((pi/2) sinh(t_j)) on a uniform t-grid truncated at |t| = 4.5,
// where the node weight has decayed to ~1e-30 even against an endpoint
// singularity of exponent -1/2.  delta = 1 - |x| is computed as 2/(e^{2y} + 1)
// (y = (pi/2) sinh t), exact to full precision near the endpoints.
std::complex<double> tanh_sinh_m11(
    int Q, const std::function<std::complex<double>(double, double)>& f) {
  if (Q < 16) throw std::invalid_argument("tanh_sinh_m11: Q must be >= 16");
  const double t_max = 4.5;
  const int half = Q / 2;
  const double h = t_max / half;

  // Outermost pairs first: contributions grow toward the center, so the
  // running sum stays accurate, and the symmetric pair is added as a unit.
  std::complex<double> acc = 0.0;
  for (int j = half; j >= 1; --j) {
    const double t = j * h;
    const double y = 0.5 * kPi * std::sinh(t);
    const double x = std::tanh(y);
    const double delta = 2.0 / (std::exp(2.0 * y) + 1.0);
    const double w = h * 0.5 * kPi * std::cosh(t) / (std::cosh(y) * std::cosh(y));
    acc += w * (f(x, delta) + f(-x, delta));
  }
  acc += h * 0.5 * kPi * f(0.0, 1.0);
  return acc;
}

}  // namespace lorentzlab
