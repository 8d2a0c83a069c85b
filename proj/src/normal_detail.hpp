#pragma once

#include <hyp3/normal.hpp>
#include <hyp3/perm4.hpp>
#include <hyp3/triangulation.hpp>

#include <vector>

// Shared bookkeeping for the two modules that realize a standard solution
// geometrically (surface assembly and complement cutting).
//
// Piece layout inside one tetrahedron with triangle counts T0..T3 and Q
// copies of the single active quad type k (admissibility allows only one):
//   - triangle copies of corner v are stacked from v outward, copy 0 nearest;
//   - quad copies are stacked from the kEdgeVerts[k] edge toward the
//     kEdgeVerts[5-k] edge, copy 0 nearest the former.
// Consequences used throughout:
//   - on edge (x,y) the surface points from x are: T_x triangle points, then
//     Q quad points (when the quad crosses the edge), then T_y points;
//   - on face f the arcs cutting corner v, ordered by depth from v, are the
//     T_v triangle arcs followed by the Q quad arcs, and the arc at depth d
//     meets both of its edges at the d-th point from v.
namespace hyp3::detail {

struct TetCounts {
    long tri[4] = {0, 0, 0, 0};
    long quad = 0;
    int quadType = -1;  // -1 when quad == 0
};

// Arcs cutting corner v on face f.
inline long arcCount(const TetCounts& c, int f, int v) {
    long n = c.tri[v];
    if (c.quadType >= 0 && kQuadSep[f][v] == c.quadType) n += c.quad;
    return n;
}

// Surface points interior to edge e.
inline long crossCount(const TetCounts& c, int e) {
    long n = c.tri[kEdgeVerts[e][0]] + c.tri[kEdgeVerts[e][1]];
    if (c.quadType >= 0 && quadPair(e) != c.quadType) n += c.quad;
    return n;
}

// Position from the smaller-labelled endpoint of edge (v,x) of the point at
// distance d from v.
inline long posFromMin(const TetCounts& c, int v, int x, long d) {
    return v < x ? d : crossCount(c, kEdgeNum[v][x]) - 1 - d;
}

// Validates that vec is an admissible standard solution on tri and converts
// it to per-tetrahedron piece counts. Throws TriError on a bad vector and
// ResourceError when the total piece count exceeds maxPieces.
std::vector<TetCounts> pieceCounts(const Triangulation& tri, const NormalVector& vec,
                                   long maxPieces);

struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) {
        while (p[x] != x) {
            p[x] = p[p[x]];
            x = p[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[b] = a;
    }
};

}  // namespace hyp3::detail
