#pragma once

#include <hyp3/normal.hpp>
#include <hyp3/triangulation.hpp>

#include <optional>
#include <vector>

namespace hyp3 {

enum class SurfaceType {
    none,  // empty, disconnected, or chi < 0
    sphere,
    disc,
    torus,
    annulus,
    projectivePlane,
    kleinBottle,
    moebiusBand,
};

const char* surfaceTypeName(SurfaceType t);

struct SurfaceReport {
    long long chi = 0;
    bool orientable = true;
    bool connected = false;
    int components = 0;
    int boundaryCurveCount = 0;
    // One entry per boundary curve: mod-2 intersection parities with the
    // boundaryH1Z2 basis cycles of the ambient triangulation. The pairing is
    // nondegenerate on a closed surface, so this pins the class in
    // H1(boundary; Z/2).
    std::vector<std::vector<int>> boundaryClasses;
    // Filled when the cheap criterion applies: a connected surface whose
    // total boundary class is nonzero cannot separate. isSeparating settles
    // the remaining cases by cutting.
    std::optional<bool> separating;
    bool vertexLinking = false;
    // Set for connected surfaces with chi >= 0, otherwise none.
    SurfaceType type = SurfaceType::none;
};

// Assembles the embedded surface described by an admissible standard
// solution: one triangle piece per unit of each triangle coordinate, one
// quad piece per unit of the quad coordinate, glued along matching arcs in
// shared faces.
SurfaceReport reconstructSurface(const Triangulation& tri, const NormalVector& vec);

// Connected components of the surface as separate standard vectors, sorted
// lexicographically by coordinates.
std::vector<NormalVector> splitComponents(const Triangulation& tri, const NormalVector& vec);

// Path-metric completions of the complement components. The boundary of the
// result carries two copies of the surface.
std::vector<Triangulation> cutAlong(const Triangulation& tri, const NormalVector& vec);

// True iff cutting along the surface disconnects the manifold. The vector
// must describe a connected surface; split components first.
bool isSeparating(const Triangulation& tri, const NormalVector& vec);

}  // namespace hyp3
