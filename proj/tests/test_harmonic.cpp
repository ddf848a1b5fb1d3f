#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <lorentzlab/experiments.hpp>
#include <lorentzlab/harmonic.hpp>
#include <lorentzlab/lorentz.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

using namespace lorentzlab;

namespace {

double tangent_norm(const Eigen::VectorXd& v) { return std::sqrt(-lorentz_dot(v, v)); }

Eigen::VectorXd tangent3(double a) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(4);
  v[1] = a;
  return v;
}

// Two vertices joined by one unit-weight edge; both frozen.
DiscMesh segment_mesh() {
  DiscMesh m;
  m.vertices = {Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0)};
  m.edges = {DiscMesh::Edge{0, 1, 1.0}};
  m.boundary = {0, 1};
  m.adjacency = {{0}, {0}};
  return m;
}

// Three collinear vertices, two unit edges, middle vertex free.
DiscMesh path_mesh() {
  DiscMesh m;
  m.vertices = {Eigen::Vector2d(-1, 0), Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0)};
  m.edges = {DiscMesh::Edge{0, 1, 1.0}, DiscMesh::Edge{1, 2, 1.0}};
  m.boundary = {0, 2};
  m.adjacency = {{0}, {0, 1}, {1}};
  return m;
}

}  // namespace

TEST_CASE("disc mesh: counts, Euler characteristic, interior fans") {
  const DiscMesh small = build_disc_mesh(1, 3);
  CHECK(small.vertex_count() == 4);
  CHECK(small.boundary.size() == 3);

  const DiscMesh mesh = build_disc_mesh(8, 32);
  CHECK(mesh.vertex_count() == 1 + 8 * 32);
  CHECK(mesh.boundary.size() == 32);

  // Disc topology: V - E + F = 1 with the outer face excluded.
  const int V = mesh.vertex_count();
  const int E = static_cast<int>(mesh.edges.size());
  const int F = static_cast<int>(mesh.triangles.size());
  CHECK(V - E + F == 1);

  // Interior vertices carry closed fans: incident triangles = incident edges.
  std::vector<int> tri_count(V, 0), edge_count(V, 0);
  for (const auto& t : mesh.triangles)
    for (int v : t) ++tri_count[v];
  for (const auto& e : mesh.edges) {
    ++edge_count[e.i];
    ++edge_count[e.j];
    CHECK(e.w > 0.0);
  }
  for (int v = 0; v < V; ++v) {
    if (!mesh.is_boundary(v)) CHECK(tri_count[v] == edge_count[v]);
  }

  // Adjacency lists the incident edge ids consistently.
  for (int v = 0; v < V; ++v) {
    CHECK(static_cast<int>(mesh.adjacency[v].size()) == edge_count[v]);
    for (int eid : mesh.adjacency[v]) {
      CHECK((mesh.edges[eid].i == v || mesh.edges[eid].j == v));
    }
  }

  CHECK_THROWS_AS(build_disc_mesh(0, 8), std::invalid_argument);
  CHECK_THROWS_AS(build_disc_mesh(3, 2), std::invalid_argument);
}

TEST_CASE("cotangent weights on the uniform fan are positive and symmetric") {
  const DiscMesh mesh = build_disc_mesh(6, 24, WeightScheme::Cotangent);
  // Quad diagonals on this fan are nearly cocircular, so their cotangent sums
  // cancel toward zero; the builder clamps those at a positive floor rather
  // than handing the solver a sign flip.
  for (const auto& e : mesh.edges) CHECK(e.w >= 1e-8);

  // Rotating the mesh by one sector permutes the weights: spot-check that
  // all edges between consecutive boundary vertices share one weight.
  std::set<long long> ring;
  for (int b : mesh.boundary) ring.insert(b);
  double w0 = -1.0;
  for (const auto& e : mesh.edges) {
    if (ring.count(e.i) && ring.count(e.j)) {
      if (w0 < 0) w0 = e.w;
      CHECK(e.w == doctest::Approx(w0).epsilon(1e-12));
    }
  }
}

TEST_CASE("energy: single edge carries half the squared distance") {
  const DiscMesh m = segment_mesh();
  const HPoint base = base_vertex(3);
  for (double t : {0.0, 0.3, 1.7}) {
    MapState f;
    f.points = {base, exp_map(base, tangent3(t))};
    CHECK(dirichlet_energy(m, f) == doctest::Approx(0.5 * t * t).epsilon(1e-12));
  }

  MapState bad;
  bad.points = {base};
  CHECK_THROWS_AS(dirichlet_energy(m, bad), std::invalid_argument);
}

TEST_CASE("energy is invariant under ambient isometries") {
  const DiscMesh mesh = build_disc_mesh(3, 9);
  std::mt19937 rng(61);
  std::uniform_real_distribution<double> unif(-0.6, 0.6);
  MapState f;
  const HPoint base = base_vertex(3);
  for (int v = 0; v < mesh.vertex_count(); ++v) {
    Eigen::VectorXd t = Eigen::VectorXd::Zero(4);
    t[1] = unif(rng);
    t[2] = unif(rng);
    t[3] = unif(rng);
    f.points.push_back(exp_map(base, t));
  }
  const double e0 = dirichlet_energy(mesh, f);

  for (int seed : {5, 6, 7}) {
    const LIsometry g = random_isometry(3, seed);
    MapState moved;
    for (const HPoint& p : f.points) moved.points.push_back(g.apply(p));
    CHECK(dirichlet_energy(mesh, moved) == doctest::Approx(e0).epsilon(1e-9));
  }
}

TEST_CASE("tension: zero at constants and at geodesic midpoints") {
  const DiscMesh chain = path_mesh();
  const HPoint base = base_vertex(3);

  MapState cst;
  cst.points = {base, base, base};
  CHECK(tangent_norm(tension(chain, cst, 1)) < 1e-15);

  // Equally spaced points on a geodesic balance exactly.
  MapState geo;
  geo.points = {exp_map(base, tangent3(-0.4)), base, exp_map(base, tangent3(0.4))};
  CHECK(tangent_norm(tension(chain, geo, 1)) < 1e-12);

  // Off-center middle point is pulled toward the far end.
  MapState off;
  off.points = {exp_map(base, tangent3(-0.2)), base, exp_map(base, tangent3(0.6))};
  const Eigen::VectorXd tau = tension(chain, off, 1);
  CHECK(tau[1] > 0.1);  // net pull in the +e1 direction
}

TEST_CASE("tension is the negative energy gradient (finite differences)") {
  const DiscMesh mesh = build_disc_mesh(3, 9);
  const auto boundary = geodesic_boundary_values(mesh, 2, 0.5);

  // Deterministic far-from-harmonic state: boundary data frozen, every
  // interior vertex parked at the base point, so gradients are O(1).
  MapState f;
  f.points.assign(mesh.vertex_count(), base_vertex(2));
  for (size_t k = 0; k < mesh.boundary.size(); ++k) f.points[mesh.boundary[k]] = boundary[k];

  std::mt19937 rng(71);
  std::normal_distribution<double> gauss;
  const double h = 1e-5;
  int tested = 0;
  for (int i = 0; i < mesh.vertex_count() && tested < 4; ++i) {
    if (mesh.is_boundary(i)) continue;
    const Eigen::VectorXd tau = tension(mesh, f, i);
    if (tangent_norm(tau) < 1e-3) continue;

    // Two directions: along the tension and a random tangent.
    std::vector<Eigen::VectorXd> dirs;
    dirs.push_back(tau / tangent_norm(tau));
    Eigen::VectorXd w(f.points[i].v.size());
    for (Eigen::Index k = 0; k < w.size(); ++k) w[k] = gauss(rng);
    w -= lorentz_dot(w, f.points[i].v) * f.points[i].v;
    dirs.push_back(w / tangent_norm(w));

    for (const Eigen::VectorXd& v : dirs) {
      MapState up = f, dn = f;
      up.points[i] = exp_map(f.points[i], h * v);
      dn.points[i] = exp_map(f.points[i], -h * v);
      const double fd = (dirichlet_energy(mesh, up) - dirichlet_energy(mesh, dn)) / (2.0 * h);
      const double analytic = lorentz_dot(tau, v);
      CHECK(std::abs(fd - analytic) <= 1e-6 * std::max(1.0, std::abs(analytic)));
    }
    ++tested;
  }
  CHECK(tested == 4);
}

TEST_CASE("solver: constant boundary collapses to the constant map") {
  const DiscMesh mesh = build_disc_mesh(4, 12);
  const HPoint p = exp_map(base_vertex(2), [] {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(3);
    v[1] = 0.3;
    v[2] = -0.1;
    return v;
  }());
  const std::vector<HPoint> boundary(mesh.boundary.size(), p);

  const SolveResult res = solve_dirichlet(mesh, boundary);
  CHECK(res.converged);
  CHECK(res.residual <= 1e-8);
  for (const HPoint& q : res.state.points) CHECK(distance(p, q) < 1e-7);
}

TEST_CASE("solver: geodesic boundary data stays on the geodesic") {
  const DiscMesh mesh = build_disc_mesh(8, 16, WeightScheme::Cotangent);
  const auto boundary = geodesic_boundary_values(mesh, 2, 0.5);
  const SolveResult res = solve_dirichlet(mesh, boundary);

  CHECK(res.converged);
  CHECK(res.residual <= 1e-8);
  double dev = 0.0;
  for (const HPoint& p : res.state.points) dev = std::max(dev, geodesic_plane_deviation(p));
  CHECK(dev < 1e-3);

  // The recorded energies decrease monotonically, with no tolerance.
  for (size_t k = 1; k < res.energy_trace.size(); ++k) {
    CHECK(res.energy_trace[k] <= res.energy_trace[k - 1]);
  }

  // Truncating the iteration budget reports non-convergence honestly.
  SolveOptions tight;
  tight.max_iter = 2;
  CHECK_FALSE(solve_dirichlet(mesh, boundary, tight).converged);
}

TEST_CASE("solver commutes with ambient isometries") {
  const DiscMesh mesh = build_disc_mesh(6, 12, WeightScheme::Cotangent);
  const auto boundary = geodesic_boundary_values(mesh, 3, 0.4);
  const LIsometry g = random_isometry(3, 42);

  std::vector<HPoint> moved;
  for (const HPoint& b : boundary) moved.push_back(g.apply(b));

  const SolveResult direct = solve_dirichlet(mesh, moved);
  const SolveResult pushed = solve_dirichlet(mesh, boundary);
  REQUIRE(direct.converged);
  REQUIRE(pushed.converged);

  MapState pushed_moved;
  for (const HPoint& p : pushed.state.points) pushed_moved.points.push_back(g.apply(p));
  CHECK(sup_distance(direct.state, pushed_moved) <= 1e-8);
}

TEST_CASE("solver: quadratic profile converges at second order under refinement") {
  // Boundary exp(0.5 cos(2 theta) e1) has the continuum solution
  // exp(0.5 (x^2 - y^2) e1): harmonic into a geodesic.  P1 weights resolve it
  // to O(h^2), so each mesh halving shrinks the sup error by about 4.
  std::vector<double> sups;
  for (int rings : {4, 8, 16}) {
    const DiscMesh mesh = build_disc_mesh(rings, 4 * rings, WeightScheme::Cotangent);
    const HPoint base = base_vertex(3);

    std::vector<HPoint> boundary;
    for (int idx : mesh.boundary) {
      const double theta = std::atan2(mesh.vertices[idx].y(), mesh.vertices[idx].x());
      boundary.push_back(exp_map(base, tangent3(0.5 * std::cos(2.0 * theta))));
    }

    SolveOptions opts;
    opts.tol = 1e-10;
    opts.max_iter = 400000;
    const SolveResult res = solve_dirichlet(mesh, boundary, opts);
    REQUIRE(res.converged);

    double sup = 0.0;
    for (int v = 0; v < mesh.vertex_count(); ++v) {
      const Eigen::Vector2d& p = mesh.vertices[v];
      const HPoint exact =
          exp_map(base, tangent3(0.5 * (p.x() * p.x() - p.y() * p.y())));
      sup = std::max(sup, distance(res.state.points[v], exact));
    }
    sups.push_back(sup);
  }
  CHECK(sups[0] < 5e-3);
  CHECK(sups[1] < sups[0] / 3.0);
  CHECK(sups[2] < sups[1] / 3.0);
}

TEST_CASE("solver input validation") {
  const DiscMesh mesh = build_disc_mesh(2, 6);
  std::vector<HPoint> boundary = geodesic_boundary_values(mesh, 2, 0.3);

  std::vector<HPoint> short_data(boundary.begin(), boundary.end() - 1);
  CHECK_THROWS_AS(solve_dirichlet(mesh, short_data), std::invalid_argument);

  HPoint off;
  off.v = Eigen::VectorXd::Zero(3);
  off.v[0] = 0.5;
  std::vector<HPoint> bad = boundary;
  bad[0] = off;
  CHECK_THROWS_AS(solve_dirichlet(mesh, bad), std::domain_error);
}

TEST_CASE("sup_distance: metric sanity and isometry invariance") {
  const DiscMesh mesh = build_disc_mesh(2, 8);
  const auto boundary = geodesic_boundary_values(mesh, 2, 0.4);
  const MapState a = solve_dirichlet(mesh, boundary).state;

  CHECK(sup_distance(a, a) == 0.0);

  MapState b = a;
  b.points[3] = exp_map(a.points[3], [&]() -> Eigen::VectorXd {
    Eigen::VectorXd v(3);
    v << 0, 0.2, 0;
    return v - lorentz_dot(v, a.points[3].v) * a.points[3].v;
  }());
  const double d = sup_distance(a, b);
  CHECK(d > 0.1);
  CHECK(d == doctest::Approx(sup_distance(b, a)).epsilon(1e-12));

  const LIsometry g = random_isometry(2, 9);
  MapState ga, gb;
  for (const HPoint& p : a.points) ga.points.push_back(g.apply(p));
  for (const HPoint& p : b.points) gb.points.push_back(g.apply(p));
  CHECK(sup_distance(ga, gb) == doctest::Approx(d).epsilon(1e-9));

  MapState wrong;
  wrong.points = {base_vertex(2)};
  CHECK_THROWS_AS(sup_distance(a, wrong), std::invalid_argument);
}
