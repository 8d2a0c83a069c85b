#pragma once

#include <hyp3/triangulation.hpp>

namespace hyp3::fixtures {

// Frozen small triangulations used by the tests and the sample data set.
// Each table was found by exhaustive search or direct construction and is
// pinned down by the invariant checks in test_fixtures.

Triangulation fig8();                // 2 ideal tets, one torus cusp
Triangulation trefoil();             // 2 ideal tets, one torus cusp
Triangulation whitehead();           // 4 ideal tets, two torus cusps
Triangulation solidTorus();          // 1 tet, one torus boundary component
Triangulation ball();                // lone tetrahedron
Triangulation sphereS3();            // 1 tet, closed, trivial homology
Triangulation lensSpace();           // 1 tet, closed, H1 = Z/4
Triangulation torusCrossInterval();  // 6 tets, two torus boundary components

// Cone the tetrahedron to an interior point, replacing it by four.
Triangulation oneFourMove(const Triangulation& tri, int tet);

// Remove an open ball from the interior of tetrahedron 0. The new boundary
// component is a two-triangle sphere on the last two tetrahedra: faces
// (size-2, 3) and (size-1, 2).
Triangulation puncture(const Triangulation& tri);

// Connected sum: puncture both summands and glue the boundary spheres.
Triangulation connectedSum(const Triangulation& a, const Triangulation& b);

}  // namespace hyp3::fixtures
