#include "lorentzlab/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace lorentzlab {

namespace {

void check_same_dim(const Eigen::Index a, const Eigen::Index b, const char* who) {
  if (a != b) throw std::invalid_argument(std::string(who) + ": dimension mismatch");
  if (a < 2) throw std::invalid_argument(std::string(who) + ": ambient dimension must be >= 2");
}

// log(x + sqrt(x^2 - 1)) without overflow in x^2 for large arguments.
double arccosh_stable(double x) {
  if (x < 1.0) x = 1.0;  // clamp roundoff below the sheet bound
  if (x > 1e8) return std::log(2.0 * x);
  return std::acosh(x);
}

}  // namespace

Eigen::MatrixXd LorentzForm::gram() const {
  Eigen::MatrixXd j = -Eigen::MatrixXd::Identity(ambient_dim(), ambient_dim());
  j(0, 0) = 1.0;
  return j;
}

double lorentz_dot(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  check_same_dim(x.size(), y.size(), "lorentz_dot");
  return 2.0 * x[0] * y[0] - x.dot(y);
}

std::complex<double> lorentz_dot_c(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) {
  check_same_dim(x.size(), y.size(), "lorentz_dot_c");
  // Bilinear, not sesquilinear: no conjugation on either slot.
  std::complex<double> acc = x[0] * y[0];
  for (Eigen::Index i = 1; i < x.size(); ++i) acc -= x[i] * y[i];
  return acc;
}

HPoint project_to_sheet(const Eigen::VectorXd& x) {
  if (x.size() < 2) throw std::invalid_argument("project_to_sheet: ambient dimension must be >= 2");
  const double q = lorentz_dot(x, x);
  if (q <= 0.0) throw std::domain_error("project_to_sheet: vector is not timelike");
  if (x[0] <= 0.0) throw std::domain_error("project_to_sheet: vector points off the upper sheet");
  HPoint p;
  p.v = x / std::sqrt(q);
  return p;
}

HPoint base_vertex(int spatial_dim) {
  if (spatial_dim < 1) throw std::invalid_argument("base_vertex: need at least one spatial dimension");
  HPoint p;
  p.v = Eigen::VectorXd::Zero(spatial_dim + 1);
  p.v[0] = 1.0;
  return p;
}

double distance(const HPoint& x, const HPoint& y) {
  const double b = lorentz_dot(x.v, y.v);
  if (b < 1.0 - 1e-10)
    throw std::domain_error("distance: inputs are off the hyperboloid model");
  // Near-coincident points: the arccosh form loses half the digits to the
  // b - 1 cancellation (absolute floor ~ |coords| * sqrt(eps)); the chord
  // identity B(x - y, x - y) = -4 sinh^2(d/2) evaluates the same distance
  // with relative accuracy from the coordinate differences.
  if (b < 1.5) {
    const Eigen::VectorXd diff = x.v - y.v;
    const double chord2 = std::max(0.0, -lorentz_dot(diff, diff));
    return 2.0 * std::asinh(0.5 * std::sqrt(chord2));
  }
  return arccosh_stable(b);
}

HPoint exp_map(const HPoint& x, const Eigen::VectorXd& v_in) {
  check_same_dim(x.v.size(), v_in.size(), "exp_map");
  Eigen::VectorXd v = v_in;
  const double drift = lorentz_dot(x.v, v);
  if (std::abs(drift) > 1e-8)
    throw std::domain_error("exp_map: direction is not tangent at the base point");
  if (drift != 0.0) v -= drift * x.v;  // re-project small drift
  const double q = lorentz_dot(v, v);
  if (q > 1e-10) throw std::domain_error("exp_map: tangent vector is not spacelike");
  const double r = std::sqrt(std::max(0.0, -q));
  if (r < 1e-300) return x;
  HPoint out;
  out.v = std::cosh(r) * x.v + (std::sinh(r) / r) * v;
  return out;
}

Eigen::VectorXd log_map(const HPoint& x, const HPoint& y) {
  check_same_dim(x.v.size(), y.v.size(), "log_map");
  const double b = std::max(1.0, lorentz_dot(x.v, y.v));
  const double d = arccosh_stable(b);
  Eigen::VectorXd w = y.v - b * x.v;  // B(x, w) = 0, |w| = sinh(d)
  if (d < 1e-8) return w;             // sinh(d)/d = 1 to double precision
  return w * (d / std::sinh(d));
}

HPoint geodesic_point(const HPoint& x, const HPoint& y, double t) {
  return exp_map(x, t * log_map(x, y));
}

LIsometry LIsometry::inverse() const {
  LorentzForm form{static_cast<int>(m.rows()) - 1};
  const Eigen::MatrixXd j = form.gram();
  LIsometry inv;
  inv.m = j * m.transpose() * j;  // M^{-1} = J M^T J
  return inv;
}

HPoint LIsometry::apply(const HPoint& x) const {
  check_same_dim(m.cols(), x.v.size(), "LIsometry::apply");
  return project_to_sheet(m * x.v);
}

LIsometry make_isometry(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols() || m.rows() < 2)
    throw std::invalid_argument("make_isometry: need a square matrix of size >= 2");
  LorentzForm form{static_cast<int>(m.rows()) - 1};
  const Eigen::MatrixXd j = form.gram();
  const double defect = (m.transpose() * j * m - j).cwiseAbs().maxCoeff();
  if (defect > tol) throw std::domain_error("make_isometry: matrix does not preserve the form");
  if (m(0, 0) <= 0.0) throw std::domain_error("make_isometry: matrix swaps the sheets");
  return LIsometry{m};
}

LIsometry boost(int spatial_dim, int axis, double t) {
  if (axis < 1 || axis > spatial_dim) throw std::invalid_argument("boost: axis out of range");
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(spatial_dim + 1, spatial_dim + 1);
  m(0, 0) = std::cosh(t);
  m(0, axis) = std::sinh(t);
  m(axis, 0) = std::sinh(t);
  m(axis, axis) = std::cosh(t);
  return LIsometry{m};
}

LIsometry spatial_rotation(int spatial_dim, int i, int j, double theta) {
  if (i < 1 || j < 1 || i > spatial_dim || j > spatial_dim || i == j)
    throw std::invalid_argument("spatial_rotation: bad plane");
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(spatial_dim + 1, spatial_dim + 1);
  m(i, i) = std::cos(theta);
  m(j, j) = std::cos(theta);
  m(i, j) = -std::sin(theta);
  m(j, i) = std::sin(theta);
  return LIsometry{m};
}

LIsometry parabolic_translation(int spatial_dim, double u) {
  if (spatial_dim < 2) throw std::invalid_argument("parabolic_translation: need N >= 2");
  // exp(u N) for the nilpotent N fixing the null vector e0 + e1; N^3 = 0.
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(spatial_dim + 1, spatial_dim + 1);
  const double h = 0.5 * u * u;
  m(0, 0) = 1.0 + h;
  m(0, 1) = -h;
  m(0, 2) = u;
  m(1, 0) = h;
  m(1, 1) = 1.0 - h;
  m(1, 2) = u;
  m(2, 0) = u;
  m(2, 1) = -u;
  return LIsometry{m};
}

LIsometry random_isometry(int spatial_dim, std::uint64_t seed, int word_length) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
  std::uniform_real_distribution<double> rapidity(-0.5, 0.5);
  std::uniform_int_distribution<int> axis(1, spatial_dim);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(spatial_dim + 1, spatial_dim + 1);
  for (int k = 0; k < word_length; ++k) {
    if (k % 2 == 0 && spatial_dim >= 2) {
      int i = axis(rng), j = axis(rng);
      if (i == j) j = (j % spatial_dim) + 1;
      m = spatial_rotation(spatial_dim, std::min(i, j), std::max(i, j), angle(rng)).m * m;
    } else {
      m = boost(spatial_dim, axis(rng), rapidity(rng)).m * m;
    }
  }
  return make_isometry(m, 1e-9);
}

std::string to_string(IsometryType t) {
  switch (t) {
    case IsometryType::Elliptic: return "elliptic";
    case IsometryType::Parabolic: return "parabolic";
    case IsometryType::Hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

namespace {

// Least-squares fit d ~ a + L * g(n) over the tail window; returns (L, rms residual).
std::pair<double, double> fit_tail(const std::vector<double>& d, int lo,
                                   const std::function<double(int)>& g) {
  const int n = static_cast<int>(d.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int m = n - lo;
  for (int i = lo; i < n; ++i) {
    const double x = g(i + 1);
    sx += x;
    sy += d[i];
    sxx += x * x;
    sxy += x * d[i];
  }
  const double det = m * sxx - sx * sx;
  if (std::abs(det) < 1e-300) return {0.0, 0.0};
  const double slope = (m * sxy - sx * sy) / det;
  const double icept = (sy - slope * sx) / m;
  double rss = 0;
  for (int i = lo; i < n; ++i) {
    const double r = d[i] - icept - slope * g(i + 1);
    rss += r * r;
  }
  return {slope, std::sqrt(rss / m)};
}

}  // namespace

IsometryClass classify_isometry(const LIsometry& M, const HPoint& base, int n_iter,
                                double tau_hyperbolic, double tau_bounded) {
  if (n_iter < 8) throw std::invalid_argument("classify_isometry: n_iter must be >= 8");
  check_same_dim(M.m.cols(), base.v.size(), "classify_isometry");

  IsometryClass out;
  out.orbit_distances.reserve(n_iter);
  // Raw vector iteration with a tracked scale factor: hyperbolic orbits grow
  // like e^{nL} and overflow long before n_iter, so the iterate is rescaled
  // whenever it gets large and the distance is assembled in log space.
  // (B(x, x) = 1 is not recoverable at that magnitude, so no sheet
  // projection; the multiplicative drift is harmless for the distance.)
  Eigen::VectorXd y = base.v;
  double log_scale = 0.0;
  for (int n = 1; n <= n_iter; ++n) {
    y = M.m * y;
    const double big = y.cwiseAbs().maxCoeff();
    if (big > 1e100) {
      y /= big;
      log_scale += std::log(big);
    }
    const double b = lorentz_dot(base.v, y);
    double dist_n;
    if (log_scale > 0.0 || b > 1e8) {
      // b e^{log_scale} >> 1: arccosh(x) = log(2x) exactly to double precision.
      dist_n = std::log(2.0 * std::max(b, 1e-300)) + log_scale;
    } else {
      dist_n = arccosh_stable(b);
    }
    out.orbit_distances.push_back(dist_n);
  }
  const auto& d = out.orbit_distances;
  const int half = n_iter / 2;
  const double max1 = *std::max_element(d.begin(), d.begin() + half);
  const double max2 = *std::max_element(d.begin() + half, d.end());
  const double dmax = std::max(max1, max2);
  const double range = dmax - *std::min_element(d.begin(), d.end());

  // Fixed base point or tiny orbit: elliptic outright.
  if (dmax <= 1e-9) {
    out.type = IsometryType::Elliptic;
    out.orbit_bounded = true;
    return out;
  }

  // Bounded-orbit window: a quasi-periodic orbit's running max creeps up by at
  // most a fraction of its oscillation range, while any escaping orbit gains
  // at least ~range/2 across the window halves.
  out.orbit_bounded = (max2 - max1) <= std::max(tau_bounded * std::max(1.0, dmax), 0.05 * range);

  auto [lin_slope, lin_res] = fit_tail(d, half, [](int n) { return double(n); });
  auto [log_slope, log_res] = fit_tail(d, half, [](int n) { return std::log(double(n)); });
  (void)log_slope;
  out.linear_fit_residual = lin_res;
  out.log_fit_residual = log_res;

  if (out.orbit_bounded) {
    out.type = IsometryType::Elliptic;
    return out;
  }
  const double tau = tau_hyperbolic * std::max(1.0, dmax);
  if (lin_slope > tau && lin_res <= log_res) {
    out.type = IsometryType::Hyperbolic;
    out.translation_length = lin_slope;
  } else {
    out.type = IsometryType::Parabolic;  // unbounded with sublinear growth
  }
  return out;
}

std::complex<double> hermitian_curvature(const Eigen::VectorXcd& X, const Eigen::VectorXcd& Y,
                                         const Eigen::VectorXcd& Z, const Eigen::VectorXcd& W) {
  return lorentz_dot_c(Y, Z) * lorentz_dot_c(X, W) - lorentz_dot_c(X, Z) * lorentz_dot_c(Y, W);
}

std::complex<double> hermitian_sectional_numerator(const Eigen::VectorXcd& X,
                                                   const Eigen::VectorXcd& Y) {
  return hermitian_curvature(X, Y, X.conjugate(), Y.conjugate());
}

}  // namespace lorentzlab
