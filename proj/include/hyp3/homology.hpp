#pragma once

#include <hyp3/snf.hpp>
#include <hyp3/triangulation.hpp>

#include <string>
#include <vector>

namespace hyp3 {

struct HomologyGroup {
    int rank = 0;
    std::vector<Int> torsion;  // entries >= 2, each dividing the next
    bool operator==(const HomologyGroup& o) const { return rank == o.rank && torsion == o.torsion; }
    bool trivial() const { return rank == 0 && torsion.empty(); }
    std::string str() const;
};

HomologyGroup groupZ(int rank);

// H1 of a chain complex  C2 --d2--> C1 --d1--> C0  with classes of 1-cycles.
struct ChainH1 {
    HomologyGroup group;
    // Normalized coordinates of a 1-cycle's class: one entry per kernel
    // generator, torsion coordinates reduced into [0, d). Two cycles are
    // homologous iff their coordinate vectors are equal. Throws if the input
    // is not a cycle.
    std::vector<Int> classOf(const std::vector<Int>& cycle) const;

    IMat kernel;        // c1 x k saturated basis of ker d1
    SNFResult kernelSnf;  // SNF of kernel, for solving kernel * y = cycle
    IMat uQuot;         // k x k
    std::vector<Int> dQuot;  // k entries: invariant factors then zeros
    int rankQuot = 0;
};

ChainH1 chainH1(const IMat& d1, const IMat& d2);

// H1 of the manifold, computed from the complex dual to the triangulation
// (vertex neighbourhoods removed, which changes nothing for H1). Works for
// finite, ideal and mixed triangulations.
HomologyGroup homologyH1(const Triangulation& t);

// Simplicial chain complex of the triangulation itself (vertices included).
// For finite triangulations this is H1 of the manifold; used as an oracle.
struct SimplicialH1 {
    ChainH1 h1;
    // 1-chain coordinates are indexed by edge class, with the class's
    // reference orientation.
    std::vector<Int> classOfEdgeCycle(const Triangulation& t,
                                      const std::vector<std::pair<int, int>>& signedEdges) const;
};
SimplicialH1 simplicialH1(const Triangulation& t);

// H1(boundary surface; Z/2) with explicit basis cycles (edge-class supports).
struct BoundaryZ2 {
    int dim = 0;
    std::vector<std::vector<int>> cycles;  // each a list of boundary edge classes
};
BoundaryZ2 boundaryH1Z2(const Triangulation& t);

// n-fold cyclic cover defined by a 1-cocycle on interior triangle classes
// (values mod n, relations around interior edges must vanish mod n).
Triangulation cyclicCover(const Triangulation& t, int n, const std::vector<int>& cocycle);

// Find a cocycle whose induced map H1 -> Z/n is surjective; throws if the
// small search fails.
std::vector<int> cyclicCocycle(const Triangulation& t, int n);

}  // namespace hyp3
