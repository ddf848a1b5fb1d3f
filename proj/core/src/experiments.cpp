#include "lorentzlab/experiments.hpp"

#include <cmath>
#include <stdexcept>

namespace lorentzlab {

std::vector<HPoint> geodesic_boundary_values(const DiscMesh& mesh, int spatial_dim,
                                             double radius) {
  if (spatial_dim < 1)
    throw std::invalid_argument("geodesic_boundary_values: spatial_dim must be >= 1");
  const HPoint base = base_vertex(spatial_dim);
  std::vector<HPoint> out;
  out.reserve(mesh.boundary.size());
  for (int idx : mesh.boundary) {
    const Eigen::Vector2d& p = mesh.vertices[idx];
    const double theta = std::atan2(p.y(), p.x());
    Eigen::VectorXd v = Eigen::VectorXd::Zero(spatial_dim + 1);
    v[1] = std::cos(theta) * radius;
    out.push_back(exp_map(base, v));
  }
  return out;
}

HPoint exotic_vertex_value(const ExoticConfig& cfg, const Intertwiner& A, Complex z) {
  const CoeffVector v = map_point(cfg, transvection_to(z));
  return project_to_sheet(coeffs_to_lorentz(v, A));
}

std::vector<HPoint> exotic_boundary_values(const DiscMesh& mesh, const ExoticConfig& cfg,
                                           double r) {
  if (!(r > 0.0 && r < 1.0))
    throw std::invalid_argument("exotic_boundary_values: r must be in (0, 1)");
  const Intertwiner A = Intertwiner::build(cfg.s, cfg.K);
  std::vector<HPoint> out;
  out.reserve(mesh.boundary.size());
  for (int idx : mesh.boundary) {
    const Eigen::Vector2d& p = mesh.vertices[idx];
    const double theta = std::atan2(p.y(), p.x());
    out.push_back(exotic_vertex_value(cfg, A, std::polar(r, theta)));
  }
  return out;
}

double geodesic_plane_deviation(const HPoint& p) {
  Eigen::VectorXd q = Eigen::VectorXd::Zero(p.v.size());
  q[0] = p.v[0];
  q[1] = p.v[1];
  return distance(p, project_to_sheet(q));
}

}  // namespace lorentzlab
