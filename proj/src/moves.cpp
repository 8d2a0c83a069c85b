#include <hyp3/moves.hpp>

#include <hyp3/homology.hpp>

#include <algorithm>
#include <cstdlib>

namespace hyp3 {

BoundaryEdgeSides boundaryEdgeSides(const Triangulation& tri, int ec) {
    const EdgeClassInfo& info = tri.edgeInfo(ec);
    if (!info.boundary) throw TriError("edge is not a boundary edge");
    const EdgeStep& st = info.walk.front();
    PivotResult pv = tri.boundaryPivot(st.tet, st.fin, st.edge);
    BoundaryEdgeSides s;
    s.tet1 = st.tet;
    s.face1 = st.fin;
    s.edge1 = st.edge;
    s.tet2 = pv.tet;
    s.face2 = pv.face;
    int a = kEdgeVerts[st.edge][0], b = kEdgeVerts[st.edge][1];
    s.edge2 = kEdgeNum[pv.cornerMap[a]][pv.cornerMap[b]];
    s.cornerMap = pv.cornerMap;
    return s;
}

BoundaryEdgeStatus boundaryEdgeStatus(const Triangulation& tri, int ec) {
    BoundaryEdgeSides s = boundaryEdgeSides(tri, ec);
    int a = kEdgeVerts[s.edge1][0], b = kEdgeVerts[s.edge1][1];
    int c1 = 6 - a - b - s.face1;
    BoundaryEdgeStatus r;
    r.embedded = tri.vertexClass(s.tet1, a) != tri.vertexClass(s.tet1, b);
    r.coembedded =
        tri.vertexClass(s.tet1, c1) != tri.vertexClass(s.tet2, s.cornerMap[c1]);
    return r;
}

namespace {

void setGluing(std::vector<std::array<Gluing, 4>>& tbl, int t, int f, int t2, int f2,
               const Perm4& p) {
    tbl[t][f] = {t2, f2, p};
    tbl[t2][f2] = {t, f, p.inverse()};
}

}  // namespace

Triangulation twoTwoMove(const Triangulation& tri, int ec) {
    BoundaryEdgeSides s = boundaryEdgeSides(tri, ec);
    if (s.sameTriangle())
        throw TriError("two-two move needs two distinct flanking triangles");
    auto tbl = tri.gluingTable();
    int n = int(tbl.size());
    tbl.push_back({});
    int a1 = kEdgeVerts[s.edge1][0], b1 = kEdgeVerts[s.edge1][1];
    int c1 = 6 - a1 - b1 - s.face1;
    int a2 = s.cornerMap[a1], b2 = s.cornerMap[b1], c2 = s.cornerMap[c1];
    // Fresh tetrahedron sits over e with edge (0,1); its face 3 covers one
    // flank, face 2 the other; edge (2,3) becomes the new boundary edge.
    setGluing(tbl, n, 3, s.tet1, s.face1, Perm4(a1, b1, c1, s.face1));
    setGluing(tbl, n, 2, s.tet2, s.face2, Perm4(a2, b2, s.face2, c2));
    return Triangulation(tbl);
}

Triangulation foldAlongEdge(const Triangulation& tri, int ec) {
    BoundaryEdgeSides s = boundaryEdgeSides(tri, ec);
    if (s.sameTriangle())
        throw TriError("fold is degenerate: both sides of the edge lie on one triangle");
    auto tbl = tri.gluingTable();
    setGluing(tbl, s.tet1, s.face1, s.tet2, s.face2, s.cornerMap);
    try {
        return Triangulation(tbl);
    } catch (const TriError& err) {
        throw TriError(std::string("fold produced an invalid gluing: ") + err.what());
    }
}

bool foldIsSafe(const Triangulation& tri, int ec) {
    BoundaryEdgeSides s = boundaryEdgeSides(tri, ec);
    if (s.sameTriangle()) return false;
    int a = kEdgeVerts[s.edge1][0], b = kEdgeVerts[s.edge1][1];
    int c1 = 6 - a - b - s.face1;
    int a2 = s.cornerMap[a], b2 = s.cornerMap[b], c2 = s.cornerMap[c1];
    if (tri.vertexClass(s.tet1, c1) == tri.vertexClass(s.tet2, c2)) return false;
    int side[4] = {tri.edgeClass(s.tet1, kEdgeNum[c1][a]),
                   tri.edgeClass(s.tet1, kEdgeNum[c1][b]),
                   tri.edgeClass(s.tet2, kEdgeNum[c2][a2]),
                   tri.edgeClass(s.tet2, kEdgeNum[c2][b2])};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (side[i] == side[j]) return false;
    return true;
}

namespace {

int smallestCoembeddedEdge(const Triangulation& t) {
    int fallback = -1;
    for (int ec = 0; ec < t.edgeClassCount(); ++ec) {
        if (!t.edgeInfo(ec).boundary) continue;
        if (!boundaryEdgeStatus(t, ec).coembedded) continue;
        if (foldIsSafe(t, ec)) return ec;
        if (fallback < 0) fallback = ec;
    }
    return fallback;
}

}  // namespace

Triangulation simplifyCusps(const Triangulation& tri) {
    if (!tri.finiteKind()) throw TriError("simplifyCusps needs a finite triangulation");
    for (int b = 0; b < tri.boundaryComponentCount(); ++b)
        if (!tri.boundaryComponent(b).torus())
            throw TriError("simplifyCusps needs all boundary components to be tori");
    Triangulation cur = tri;
    while (true) {
        int before = cur.boundaryFaceCount();
        int pick = -1, degenerate = -1;
        for (int ec = 0; ec < cur.edgeClassCount(); ++ec) {
            if (!cur.edgeInfo(ec).boundary) continue;
            if (!boundaryEdgeStatus(cur, ec).embedded) continue;
            if (!boundaryEdgeSides(cur, ec).sameTriangle()) {
                pick = ec;
                break;
            }
            if (degenerate < 0) degenerate = ec;
        }
        if (pick < 0 && degenerate < 0) break;
        if (pick < 0) {
            // Both sides of the embedded edge lie on one triangle. A two-two
            // move on that triangle's third edge buries the triangle, after
            // which the edge has two distinct flanking triangles.
            BoundaryEdgeSides s = boundaryEdgeSides(cur, degenerate);
            int third = -1;
            for (int e = 0; e < 6; ++e) {
                int x = kEdgeVerts[e][0], y = kEdgeVerts[e][1];
                if (x == s.face1 || y == s.face1) continue;  // not in this face
                if (e == s.edge1 || e == s.edge2) continue;
                third = e;
            }
            int slotTet = s.tet1, slotEdge = s.edge1;
            cur = twoTwoMove(cur, cur.edgeClass(s.tet1, third));
            pick = cur.edgeClass(slotTet, slotEdge);
            if (boundaryEdgeSides(cur, pick).sameTriangle())
                throw TriError("cusp simplification failed to split a folded triangle");
        }
        cur = twoTwoMove(cur, pick);
        for (int f = smallestCoembeddedEdge(cur); f >= 0; f = smallestCoembeddedEdge(cur))
            cur = foldAlongEdge(cur, f);
        if (cur.boundaryFaceCount() >= before)
            throw TriError("cusp simplification failed to make progress");
    }
    if (!(homologyH1(cur) == homologyH1(tri)))
        throw TriError("cusp simplification changed homology");
    return cur;
}

namespace {

void requireMinimalTorus(const BoundaryComponentInfo& bc) {
    if (!(bc.torus() && bc.V == 1 && bc.E == 3 && bc.F == 2))
        throw TriError("boundary component is not a minimal one-vertex torus");
}

}  // namespace

std::vector<Triangulation> foldFillings(const Triangulation& tri, int boundaryComponent) {
    const BoundaryComponentInfo& bc = tri.boundaryComponent(boundaryComponent);
    requireMinimalTorus(bc);
    std::vector<int> ecs = bc.edges;
    std::sort(ecs.begin(), ecs.end());
    std::vector<Triangulation> out;
    out.reserve(3);
    for (int ec : ecs) out.push_back(foldAlongEdge(tri, ec));
    return out;
}

EdgeClassTriple boundaryEdgeClasses(const Triangulation& tri, int boundaryComponent) {
    const BoundaryComponentInfo& bc = tri.boundaryComponent(boundaryComponent);
    requireMinimalTorus(bc);
    std::vector<int> ecs = bc.edges;
    std::sort(ecs.begin(), ecs.end());

    // Chain complex of the cusp surface: one vertex (d1 = 0), three edges,
    // two triangles.
    IMat d1(1, std::vector<Int>(3, 0));
    IMat d2(3, std::vector<Int>(2, 0));
    static const int sides[3][3] = {{0, 1, 1}, {1, 2, 1}, {0, 2, -1}};
    for (int j = 0; j < 2; ++j) {
        auto [t, f] = bc.faces[j];
        int vs[3], k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != f) vs[k++] = v;
        for (const auto& sd : sides) {
            int e = kEdgeNum[vs[sd[0]]][vs[sd[1]]];
            int cls = tri.edgeClass(t, e);
            int row = int(std::find(ecs.begin(), ecs.end(), cls) - ecs.begin());
            d2[row][j] += sd[2] * tri.edgeOrient(t, e);
        }
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j)
            if (d2[i][j] != 1 && d2[i][j] != -1)
                throw TriError("unexpected cusp triangle side pattern");

    ChainH1 ch = chainH1(d1, d2);
    if (ch.group.rank != 2 || !ch.group.torsion.empty())
        throw TriError("cusp surface H1 is not Z^2");
    std::array<std::array<long long, 2>, 3> coord;
    for (int i = 0; i < 3; ++i) {
        std::vector<Int> unit(3, 0);
        unit[i] = 1;
        std::vector<Int> c = ch.classOf(unit);
        int k = 0;
        for (int j = 0; j < int(c.size()); ++j)
            if (ch.dQuot[j] == 0) coord[i][k++] = c[j].get_si();
    }
    // Read orientations off the first triangle's boundary relation
    // a*c0 + b*c1 + g*c2 = 0, giving v + w = x.
    long long a = d2[0][0].get_si(), b = d2[1][0].get_si(), g = d2[2][0].get_si();
    EdgeClassTriple out;
    out.edgeClasses = {ecs[0], ecs[1], ecs[2]};
    for (int k = 0; k < 2; ++k) {
        out.classes[0][k] = a * coord[0][k];
        out.classes[1][k] = b * coord[1][k];
        out.classes[2][k] = -g * coord[2][k];
    }
    for (int k = 0; k < 2; ++k)
        if (out.classes[0][k] + out.classes[1][k] != out.classes[2][k])
            throw TriError("cusp edge classes violate v + w = x");
    long long det = out.classes[0][0] * out.classes[1][1] - out.classes[0][1] * out.classes[1][0];
    if (det != 1 && det != -1) throw TriError("cusp edge classes do not generate H1");
    return out;
}

}  // namespace hyp3
