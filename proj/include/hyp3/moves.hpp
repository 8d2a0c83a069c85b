#pragma once

#include <hyp3/triangulation.hpp>

#include <array>
#include <vector>

namespace hyp3 {

struct BoundaryEdgeStatus {
    bool embedded = false;    // endpoint vertex classes differ
    bool coembedded = false;  // opposite vertices of the flanking triangles differ
};

// The two boundary triangles flanking a boundary edge, with the map that
// folds side 1 onto side 2 (fixes the edge pointwise, third corner to third
// corner, face index to face index).
struct BoundaryEdgeSides {
    int tet1, face1, edge1;
    int tet2, face2, edge2;
    Perm4 cornerMap;
    bool sameTriangle() const { return tet1 == tet2 && face1 == face2; }
};

BoundaryEdgeSides boundaryEdgeSides(const Triangulation& tri, int edgeClass);
BoundaryEdgeStatus boundaryEdgeStatus(const Triangulation& tri, int edgeClass);

// Glue a fresh tetrahedron across the two triangles flanking a boundary
// edge. Homeomorphism type, boundary triangle count unchanged; the edge
// opposite the glued-on edge in the fresh tetrahedron is a new boundary edge.
Triangulation twoTwoMove(const Triangulation& tri, int edgeClass);

// Identify the two flanking triangles by the orientation-reversing map that
// fixes the edge. Preserves topology iff the edge is coembedded; on a
// one-vertex torus cusp it performs the Dehn filling used by foldFillings.
Triangulation foldAlongEdge(const Triangulation& tri, int edgeClass);

// Sufficient conditions for a fold to preserve the manifold on any boundary:
// coembedded, two distinct flanking triangles, and the four side edges of
// the two triangles pairwise distinct (so the fold is a clean collapse of an
// embedded square onto one of its halves).
bool foldIsSafe(const Triangulation& tri, int edgeClass);

// two-two / fold until every boundary component has one vertex, three edges
// and two triangles. Requires a finite triangulation with all boundary tori.
Triangulation simplifyCusps(const Triangulation& tri);

// The three Dehn fillings of a minimal (1,3,2) torus boundary component,
// obtained by folding along each of its edges in edge-class order.
std::vector<Triangulation> foldFillings(const Triangulation& tri, int boundaryComponent);

struct EdgeClassTriple {
    std::array<int, 3> edgeClasses;                    // classes of v, w, x
    std::array<std::array<long long, 2>, 3> classes;   // H1(B) coordinates, v + w = x
};

// Homology classes of the three edges of a minimal torus boundary component
// in a fixed basis of H1(B) = Z^2, oriented so that v + w = x.
EdgeClassTriple boundaryEdgeClasses(const Triangulation& tri, int boundaryComponent);

}  // namespace hyp3
