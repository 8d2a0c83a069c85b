#pragma once

#include <hyp3/snf.hpp>
#include <hyp3/triangulation.hpp>

#include <string>
#include <vector>

namespace hyp3 {

// Normal coordinates per tetrahedron. Standard: 7 entries laid out as
// [t0 t1 t2 t3 q0 q1 q2] where tv counts triangles cutting off vertex v
// and qk counts quadrilaterals separating the endpoints of edge k from
// those of edge 5-k (opposite pairs {01|23}, {02|13}, {03|12}).
// Quad coordinates keep only [q0 q1 q2].
enum class CoordSystem { standard, quad };

inline int coordsPerTet(CoordSystem s) { return s == CoordSystem::standard ? 7 : 3; }

// Quad type whose discs have a corner on edge e (two types per edge) are
// the two types other than quadPair(e); quadPair(e) is the type that
// separates e from its opposite edge.
inline int quadPair(int edge) { return edge < 3 ? edge : 5 - edge; }

struct NormalVector {
    CoordSystem system = CoordSystem::standard;
    std::vector<Int> coords;

    int tets() const { return int(coords.size()) / coordsPerTet(system); }
    bool operator==(const NormalVector& o) const {
        return system == o.system && coords == o.coords;
    }
};

struct MatchingSystem {
    CoordSystem system = CoordSystem::standard;
    int tets = 0;
    IMat rows;  // homogeneous equations over the coordinates

    int coordCount() const { return tets * coordsPerTet(system); }
    // Quad entries of tetrahedron t occupy [quadBase(t), quadBase(t)+3).
    int quadBase(int t) const {
        return system == CoordSystem::standard ? 7 * t + 4 : 3 * t;
    }
};

bool admissible(CoordSystem system, const std::vector<Int>& x);
inline bool admissible(const MatchingSystem& sys, const std::vector<Int>& x) {
    return admissible(sys.system, x);
}
inline bool admissible(const NormalVector& v) { return admissible(v.system, v.coords); }
bool satisfies(const MatchingSystem& sys, const std::vector<Int>& x);

// One equation per interior triangle face and corner of that face, in
// 7t coordinates: arc counts agree across the gluing.
MatchingSystem standardMatchingSystem(const Triangulation& tri);

// One Q-matching equation per interior edge, in 3t coordinates. Finite
// triangulations only.
MatchingSystem quadMatchingSystem(const Triangulation& tri);

struct EnumLimits {
    long long maxSolutions = 0;     // 0 = unlimited; exceeding throws ResourceError
    long long maxNodes = 10000000;  // search-node cap for Hilbert completion
};

// Admissible extreme rays of the projectivized solution cone, each scaled
// to its smallest integer representative, in lexicographic order.
std::vector<NormalVector> enumerateVertexSolutions(const MatchingSystem& sys,
                                                   const EnumLimits& limits = {});

// Same result built from the triangulation. Standard coordinates on a
// finite triangulation are enumerated in quad space and lifted, which is
// far smaller than double description over all 7t coordinates.
std::vector<NormalVector> enumerateVertexSolutions(const Triangulation& tri,
                                                   CoordSystem system,
                                                   const EnumLimits& limits = {});

// Hilbert basis of the admissible solution monoid: admissible solutions
// that are not sums of two nonzero admissible solutions. Lexicographic.
std::vector<NormalVector> enumerateFundamentalSolutions(const MatchingSystem& sys,
                                                        const EnumLimits& limits = {});

// Unique standard solution with the given quads and no vertex-linking
// component (triangle coordinates are the minimal nonnegative completion).
NormalVector quadToStandard(const Triangulation& tri, const NormalVector& quads);

// Projection onto quad coordinates.
NormalVector standardToQuad(const NormalVector& v);

// All triangle types of one vertex class set to 1 (the vertex link).
NormalVector vertexLinkVector(const Triangulation& tri, int vertexClass);

// Stable hash of the gluing table, for certificate provenance.
std::string triangulationHash(const Triangulation& tri);

// "system|hash|c0,c1,..." with decimal coordinates.
std::string serializeNormalVector(const Triangulation& tri, const NormalVector& v);

}  // namespace hyp3
