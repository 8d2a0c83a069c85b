#include <hyp3/truncate.hpp>

#include <hyp3/moves.hpp>

#include <array>
#include <map>
#include <utility>

namespace hyp3 {

namespace {

std::array<int, 3> faceVerts(int f) {
    std::array<int, 3> vs{};
    int k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != f) vs[k++] = v;
    return vs;
}

// The hexagon left on face f after cutting corners, as the cycle of cut
// points P(v,u) (the point near v on edge (v,u)). Even slots are the long
// sides lying on the tetrahedron's edges, odd slots the short corner sides.
std::array<std::pair<int, int>, 6> hexCycle(int f) {
    auto [x, y, z] = faceVerts(f);
    return {{{x, y}, {y, x}, {y, z}, {z, y}, {z, x}, {x, z}}};
}

int cornerIdx(int t, int v) { return 28 * t + v; }
int hexIdx(int t, int f, int k) { return 28 * t + 4 + 6 * f + k; }

// Label of P(v,u) in the corner tetrahedron at v: 0 is the center cone
// point, 1..3 run over u ascending.
int cornerLabel(int v, int u) {
    int r = 1;
    for (int w = 0; w < u; ++w)
        if (w != v) ++r;
    return r;
}

Perm4 fromImages(const std::array<int, 4>& img) {
    return Perm4(img[0], img[1], img[2], img[3]);
}

}  // namespace

Triangulation truncate(const Triangulation& tri) {
    if (!tri.idealKind()) throw TriError("truncate expects an ideal triangulation");
    int n = tri.size();
    std::vector<std::array<Gluing, 4>> tbl(28 * n);
    auto glue = [&tbl](int t, int f, int t2, int f2, const Perm4& p) {
        tbl[t][f] = {t2, f2, p};
        tbl[t2][f2] = {t, f, p.inverse()};
    };

    for (int t = 0; t < n; ++t) {
        // Fan adjacencies around each hexagon center.
        for (int f = 0; f < 4; ++f)
            for (int k = 0; k < 6; ++k)
                glue(hexIdx(t, f, k), 2, hexIdx(t, f, (k + 1) % 6), 3, Perm4(0, 1, 3, 2));

        // Long sides: the two hexagons flanking each edge of the tetrahedron.
        for (int e = 0; e < 6; ++e) {
            int a = kEdgeVerts[e][0], b = kEdgeVerts[e][1];
            int p = -1, q = -1;
            for (int f = 0; f < 4; ++f)
                if (f != a && f != b) (p < 0 ? p : q) = f;
            auto locate = [&](int f) -> std::pair<int, bool> {
                auto cyc = hexCycle(f);
                for (int k = 0; k < 6; k += 2) {
                    if (cyc[k] == std::make_pair(a, b)) return {k, false};
                    if (cyc[k] == std::make_pair(b, a)) return {k, true};
                }
                throw TriError("internal: edge not on its flanking face");
            };
            auto [kp, revp] = locate(p);
            auto [kq, revq] = locate(q);
            glue(hexIdx(t, p, kp), 1, hexIdx(t, q, kq), 1,
                 revp == revq ? Perm4(0, 1, 2, 3) : Perm4(0, 1, 3, 2));
        }

        // Short sides: hexagon to the corner triangle it abuts.
        for (int f = 0; f < 4; ++f) {
            auto cyc = hexCycle(f);
            for (int k = 1; k < 6; k += 2) {
                auto [v, s] = cyc[k];
                auto [v2, r] = cyc[(k + 1) % 6];
                if (v != v2) throw TriError("internal: short side corner mismatch");
                int ls = cornerLabel(v, s), lr = cornerLabel(v, r);
                int m = 6 - ls - lr;
                glue(hexIdx(t, f, k), 1, cornerIdx(t, v), m, Perm4(0, m, ls, lr));
            }
        }

        // Across the face pairings of the big triangulation.
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri.gluing(t, f);
            if (!g.glued()) continue;
            if (std::make_pair(g.tet, g.face) < std::make_pair(t, f)) continue;
            auto cyc = hexCycle(f);
            auto cyc2 = hexCycle(g.face);
            for (int k = 0; k < 6; ++k) {
                std::pair<int, int> A{g.perm[cyc[k].first], g.perm[cyc[k].second]};
                std::pair<int, int> B{g.perm[cyc[(k + 1) % 6].first],
                                      g.perm[cyc[(k + 1) % 6].second]};
                int k2 = -1;
                bool rev = false;
                for (int j = 0; j < 6 && k2 < 0; ++j) {
                    if (cyc2[j] == A && cyc2[(j + 1) % 6] == B) k2 = j;
                    else if (cyc2[j] == B && cyc2[(j + 1) % 6] == A) { k2 = j; rev = true; }
                }
                if (k2 < 0) throw TriError("internal: glued hexagons do not match");
                glue(hexIdx(t, f, k), 0, hexIdx(g.tet, g.face, k2), 0,
                     rev ? Perm4(0, 1, 3, 2) : Perm4(0, 1, 2, 3));
            }
        }
    }

    Triangulation small(std::move(tbl));

    // Cone back the cut corners of finite vertices: boundary components that
    // are spheres made entirely of corner triangles.
    while (true) {
        int target = -1;
        for (int b = 0; b < small.boundaryComponentCount() && target < 0; ++b) {
            const BoundaryComponentInfo& bc = small.boundaryComponent(b);
            if (!bc.sphere()) continue;
            bool cornerOnly = true;
            for (auto [tt, ff] : bc.faces)
                if (!(tt < 28 * n && tt % 28 < 4 && ff == 0)) {
                    cornerOnly = false;
                    break;
                }
            if (cornerOnly) target = b;
        }
        if (target < 0) break;
        small = coneBoundaryComponent(small, target);
    }
    return small;
}

Triangulation coneBoundaryComponent(const Triangulation& tri, int boundaryComponent) {
    const BoundaryComponentInfo& bc = tri.boundaryComponent(boundaryComponent);
    auto tbl = tri.gluingTable();
    std::map<std::pair<int, int>, int> coneOf;
    for (auto [t, f] : bc.faces) {
        coneOf[{t, f}] = int(tbl.size());
        tbl.push_back({});
    }
    // Label of a face vertex v inside the cone tetrahedron over face f: 0 is
    // the apex, 1..3 the face's vertices ascending.
    auto faceLabel = [](int f, int v) {
        int r = 1;
        for (int w = 0; w < v; ++w)
            if (w != f) ++r;
        return r;
    };
    for (auto [t, f] : bc.faces) {
        auto vs = faceVerts(f);
        Perm4 down(f, vs[0], vs[1], vs[2]);
        int c = coneOf[{t, f}];
        tbl[c][0] = {t, f, down};
        tbl[t][f] = {c, 0, down.inverse()};
    }
    for (int ec : bc.edges) {
        BoundaryEdgeSides s = boundaryEdgeSides(tri, ec);
        int i1 = coneOf.at({s.tet1, s.face1}), i2 = coneOf.at({s.tet2, s.face2});
        int a = kEdgeVerts[s.edge1][0], b = kEdgeVerts[s.edge1][1];
        int c1 = 6 - a - b - s.face1;
        int la = faceLabel(s.face1, a), lb = faceLabel(s.face1, b), lc = faceLabel(s.face1, c1);
        int la2 = faceLabel(s.face2, s.cornerMap[a]), lb2 = faceLabel(s.face2, s.cornerMap[b]),
            lc2 = faceLabel(s.face2, s.cornerMap[c1]);
        std::array<int, 4> img{};
        img[0] = 0;
        img[la] = la2;
        img[lb] = lb2;
        img[lc] = lc2;
        Perm4 p = fromImages(img);
        tbl[i1][lc] = {i2, lc2, p};
        tbl[i2][lc2] = {i1, lc, p.inverse()};
    }
    return Triangulation(std::move(tbl));
}

}  // namespace hyp3
