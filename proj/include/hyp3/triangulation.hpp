#pragma once

#include <hyp3/perm4.hpp>

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyp3 {

struct TriError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a computation exceeds its configured budget. Callers that
// return verdicts catch this and report RESOURCE_EXCEEDED, never a bool.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Gluing {
    int tet = -1;
    int face = -1;
    Perm4 perm;
    bool glued() const { return tet >= 0; }
};

enum class LinkType { sphere, disc, torus, closedOther };

struct VertexClassInfo {
    std::vector<std::pair<int, int>> inc;  // (tet, vertex) slots
    LinkType link = LinkType::sphere;
    int linkChi = 2;
    bool linkClosed = true;
    bool ideal() const { return linkClosed && linkChi != 2; }
};

// One step of the rotation around an edge: enter the tetrahedron through
// face fin, leave through face fout (both faces contain the edge).
struct EdgeStep {
    int tet;
    int edge;
    int fin;
    int fout;
};

struct EdgeClassInfo {
    std::vector<std::pair<int, int>> inc;  // (tet, edge) slots in walk order
    std::vector<EdgeStep> walk;
    bool boundary = false;  // walk is an open chain ending on unglued faces
    int degree() const { return int(inc.size()); }
};

struct TriangleClassInfo {
    int tet = -1, face = -1;    // representative
    int tet2 = -1, face2 = -1;  // partner, -1 if boundary
    bool boundary() const { return tet2 < 0; }
};

struct BoundaryComponentInfo {
    std::vector<std::pair<int, int>> faces;  // (tet, face)
    std::vector<int> edges;                  // edge class ids on this component
    std::vector<int> verts;                  // vertex class ids on this component
    int V = 0, E = 0, F = 0;                 // surface cell counts
    bool orientableSurface = false;
    int chi() const { return V - E + F; }
    bool torus() const { return chi() == 0 && orientableSurface; }
    bool sphere() const { return chi() == 2; }
};

// Result of rotating around a boundary edge from one boundary face to the
// next. cornerMap sends the source tetrahedron's vertex labels to the
// target's so that shared edge endpoints and the two triangle corners
// correspond; cornerMap(face) == targetFace.
struct PivotResult {
    int tet;
    int face;
    Perm4 cornerMap;
};

class Triangulation {
public:
    Triangulation() = default;
    explicit Triangulation(std::vector<std::array<Gluing, 4>> gluings);

    int size() const { return int(glu_.size()); }
    const Gluing& gluing(int t, int f) const { return glu_[t][f]; }
    bool boundaryFace(int t, int f) const { return !glu_[t][f].glued(); }
    std::vector<std::array<Gluing, 4>> gluingTable() const { return glu_; }

    int vertexClassCount() const { return int(verts_.size()); }
    int edgeClassCount() const { return int(edges_.size()); }
    int triangleClassCount() const { return int(tris_.size()); }
    int vertexClass(int t, int v) const { return vertClass_[t][v]; }
    int edgeClass(int t, int e) const { return edgeClass_[t][e]; }
    int triangleClass(int t, int f) const { return triClass_[t][f]; }
    const VertexClassInfo& vertexInfo(int vc) const { return verts_[vc]; }
    const EdgeClassInfo& edgeInfo(int ec) const { return edges_[ec]; }
    const TriangleClassInfo& triangleInfo(int fc) const { return tris_[fc]; }
    // +1 if the directed edge (lo,hi) of this slot agrees with the class
    // reference direction, -1 otherwise.
    int edgeOrient(int t, int e) const { return edgeOrient_[t][e]; }

    bool orientable() const { return orientable_; }
    bool connected() const { return connected_; }
    int tetOrientation(int t) const { return tetOrient_[t]; }  // +-1 when orientable

    int idealVertexCount() const { return idealVertexCount_; }
    bool finiteKind() const { return idealVertexCount_ == 0; }
    bool idealKind() const { return idealVertexCount_ > 0; }

    int eulerCharacteristic() const {
        return vertexClassCount() - edgeClassCount() + triangleClassCount() - size();
    }

    int boundaryFaceCount() const { return boundaryFaceCount_; }
    int boundaryComponentCount() const { return int(bdry_.size()); }
    const BoundaryComponentInfo& boundaryComponent(int i) const { return bdry_[i]; }
    // -1 for interior faces.
    int boundaryComponentOf(int t, int f) const { return bdryOf_[t][f]; }

    // e must be an edge of the boundary face (t,f); rotates around e away
    // from (t,f) to the next boundary face.
    PivotResult boundaryPivot(int t, int f, int e) const;

private:
    std::vector<std::array<Gluing, 4>> glu_;

    std::vector<std::array<int, 4>> vertClass_;
    std::vector<std::array<int, 6>> edgeClass_;
    std::vector<std::array<int, 4>> triClass_;
    std::vector<std::array<int, 6>> edgeOrient_;
    std::vector<VertexClassInfo> verts_;
    std::vector<EdgeClassInfo> edges_;
    std::vector<TriangleClassInfo> tris_;
    std::vector<BoundaryComponentInfo> bdry_;
    std::vector<std::array<int, 4>> bdryOf_;
    std::vector<int> tetOrient_;
    bool orientable_ = false;
    bool connected_ = true;
    int idealVertexCount_ = 0;
    int boundaryFaceCount_ = 0;

    void validateStructure() const;
    void buildSkeleton();
};

// Text format: one line per tetrahedron, four whitespace-separated entries,
// each "t:f:dddd" (tet, face, permutation digits) or "-" for a boundary
// face. "#" starts a comment.
Triangulation parseGluingTable(const std::string& text);
std::string toGluingTable(const Triangulation& tri);

Triangulation disjointUnion(const Triangulation& a, const Triangulation& b);

}  // namespace hyp3
