#pragma once

#include <hyp3/triangulation.hpp>

namespace hyp3 {

// Shave open neighbourhoods of the vertices: each tetrahedron is replaced by
// 28 small ones (a cone over its truncated boundary, hexagon faces fanned
// around center points). Corner triangles become new boundary; sphere-link
// vertices are coned straight back, so exactly the ideal vertices turn into
// boundary components. The result is a finite triangulation of the same
// compact manifold.
Triangulation truncate(const Triangulation& tri);

// Cap a boundary component with a cone: one tetrahedron per boundary
// triangle, glued to the component and to its neighbours around the
// component's edges. Capping a sphere fills in a ball.
Triangulation coneBoundaryComponent(const Triangulation& tri, int boundaryComponent);

}  // namespace hyp3
