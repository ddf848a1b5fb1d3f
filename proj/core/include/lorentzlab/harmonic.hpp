#pragma once

#include "lorentzlab/lorentz.hpp"

#include <Eigen/Dense>

#include <array>
#include <vector>

namespace lorentzlab {

// Triangulated concentric unit disc: a center vertex plus `rings` rings of
// `sectors` vertices each; the outermost ring is the boundary.  Every interior
// vertex has a full triangle fan, and V - E + F = 1 (outer face excluded).
struct DiscMesh {
  struct Edge {
    int i = 0, j = 0;
    double w = 1.0;  // > 0
  };

  std::vector<Eigen::Vector2d> vertices;
  std::vector<Edge> edges;
  std::vector<std::array<int, 3>> triangles;
  std::vector<int> boundary;             // indices of the outer ring
  std::vector<std::vector<int>> adjacency;  // neighbor edge ids per vertex

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  bool is_boundary(int i) const;
};

enum class WeightScheme {
  Uniform,    // w = 1 on every edge (default)
  Cotangent,  // P1 stiffness weights (cot a + cot b)/2, clamped at a small
              // positive floor; consistent with the flat Dirichlet energy
};

DiscMesh build_disc_mesh(int rings, int sectors, WeightScheme scheme = WeightScheme::Uniform);

// Vertex-indexed map into the hyperboloid sheet; boundary entries are data,
// interior entries are unknowns.
struct MapState {
  std::vector<HPoint> points;
};

// E(f) = 1/2 sum_{edges} w_ij d(f_i, f_j)^2.
double dirichlet_energy(const DiscMesh& mesh, const MapState& f);

// tau_i = sum_{j ~ i} w_ij log_{f_i}(f_j);  the energy gradient at an interior
// vertex is -tau_i, so tau is the steepest-descent direction.
Eigen::VectorXd tension(const DiscMesh& mesh, const MapState& f, int i);

struct SolveOptions {
  double tol = 1e-8;       // max_i |tau_i| stopping threshold
  int max_iter = 200000;
  double armijo_c = 1e-4;  // sufficient-decrease constant
  int center_init_steps = 50;
};

struct SolveResult {
  MapState state;
  std::vector<double> energy_trace;  // strictly non-increasing over accepted steps
  double residual = 0.0;             // final max_i |tau_i|
  int iterations = 0;
  bool converged = false;
};

// Dirichlet problem: minimizes the energy over interior vertices with the
// boundary vertices frozen at `boundary_values` (indexed like mesh.boundary).
// Geodesic gradient descent with Armijo backtracking from the Riemannian
// center of the boundary data (fixed-point averaging, deterministic).
SolveResult solve_dirichlet(const DiscMesh& mesh, const std::vector<HPoint>& boundary_values,
                            const SolveOptions& opts = {});

double sup_distance(const MapState& f, const MapState& g);

}  // namespace lorentzlab
