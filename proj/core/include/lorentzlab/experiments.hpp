#pragma once

#include "lorentzlab/exotic.hpp"
#include "lorentzlab/harmonic.hpp"

#include <vector>

namespace lorentzlab {

// Boundary data for the Dirichlet solver lying on one geodesic through the
// base vertex: the outer-ring vertex at angle theta gets
// exp_base(cos(theta) * radius * e_1).  Requires spatial_dim >= 1.
std::vector<HPoint> geodesic_boundary_values(const DiscMesh& mesh, int spatial_dim,
                                             double radius);

// Ambient hyperboloid image of a disc point z (|z| < 1) under the windowed
// equivariant map: transvection to z, image of the basepoint, isometric
// change of coordinates, projection onto the sheet of R^{1+2K}.
HPoint exotic_vertex_value(const ExoticConfig& cfg, const Intertwiner& A, Complex z);

// Boundary data sampling the equivariant map on the circle of disc radius r:
// the outer-ring vertex at angle theta gets exotic_vertex_value(r e^{i theta}).
std::vector<HPoint> exotic_boundary_values(const DiscMesh& mesh, const ExoticConfig& cfg,
                                           double r);

// Distance from p to the geodesic cut out by the coordinate plane (e_0, e_1):
// zero exactly when p lies on it.
double geodesic_plane_deviation(const HPoint& p);

}  // namespace lorentzlab
