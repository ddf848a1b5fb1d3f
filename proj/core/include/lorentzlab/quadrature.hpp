#pragma once

#include <complex>
#include <functional>

namespace lorentzlab {

// Mean value (1/2pi) * integral f(theta) dtheta over one period, by the
// uniform trapezoid rule on theta_q = 2 pi q / Q.  For periodic integrands
// analytic in a strip the error decays geometrically in Q.
double circle_mean(int Q, const std::function<double(double)>& f);
std::complex<double> circle_mean_c(int Q, const std::function<std::complex<double>(double)>& f);

// Fixed-grid tanh-sinh rule for integral over (-1, 1) with Q nodes.
// The integrand receives (x, delta) where delta = 1 - |x| is the distance to
// the nearest endpoint, computed without cancellation; endpoint singularities
// x -> (1 - |x|)^alpha, alpha > -1, are integrated to near machine precision.
std::complex<double> tanh_sinh_m11(
    int Q, const std::function<std::complex<double>(double, double)>& f);

}  // namespace lorentzlab
