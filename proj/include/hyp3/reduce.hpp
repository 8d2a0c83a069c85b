#pragma once

#include <hyp3/triangulation.hpp>

#include <optional>

namespace hyp3 {

struct ReduceOptions {
    bool boundaryFolds = true;  // close-the-book folds on coembedded boundary edges
    bool uphill = true;         // 2-3 excursions to escape local minima
    int uphillAttempts = 48;    // consecutive non-improving excursions tolerated
    int maxRounds = 100000;
};

// Local simplification moves. Each returns the moved triangulation, or
// nullopt when its preconditions fail; every successful move preserves the
// underlying manifold.
std::optional<Triangulation> tryThreeTwo(const Triangulation& tri, int edgeClass);
std::optional<Triangulation> tryTwoZeroEdge(const Triangulation& tri, int edgeClass);
std::optional<Triangulation> tryTwoZeroVertex(const Triangulation& tri, int vertexClass);
std::optional<Triangulation> tryShellTetrahedron(const Triangulation& tri, int tet);
std::optional<Triangulation> tryTwoThree(const Triangulation& tri, int triangleClass);

// Greedy deterministic reduction using the moves above, plus coembedded
// boundary folds when enabled.
Triangulation reduceTriangulation(const Triangulation& tri, const ReduceOptions& opt = {});

}  // namespace hyp3
