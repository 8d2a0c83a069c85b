#include <hyp3/fixtures.hpp>

#include <array>
#include <vector>

namespace hyp3::fixtures {

Triangulation fig8() {
    return parseGluingTable(
        "1:0:0123 1:2:1203 1:3:1032 1:1:3021\n"
        "0:0:0123 0:3:1320 0:1:2013 0:2:1032\n");
}

Triangulation trefoil() {
    return parseGluingTable(
        "1:0:0123 1:1:0123 1:3:0231 1:2:1032\n"
        "0:0:0123 0:1:0123 0:3:1032 0:2:0312\n");
}

Triangulation whitehead() {
    return parseGluingTable(
        "1:1:1023 2:1:0132 1:3:0132 3:2:0132\n"
        "3:0:0132 0:0:1023 2:3:0132 0:2:0132\n"
        "3:1:1023 0:1:0132 3:3:0132 1:2:0132\n"
        "1:0:0132 2:0:1023 0:3:0132 2:2:0132\n");
}

Triangulation solidTorus() {
    return parseGluingTable("0:1:1230 0:0:3012 - -\n");
}

Triangulation ball() {
    return parseGluingTable("- - - -\n");
}

Triangulation sphereS3() {
    return parseGluingTable("0:1:1230 0:0:3012 0:3:0132 0:2:0132\n");
}

Triangulation lensSpace() {
    return parseGluingTable("0:1:1230 0:0:3012 0:3:1230 0:2:3012\n");
}

Triangulation torusCrossInterval() {
    // three triangular prisms stacked over the two-triangle torus, each split
    // into three tetrahedra along consistent staircase diagonals
    return parseGluingTable(
        "4:3:3012 3:1:0123 1:2:0123 -\n"
        "5:3:3012 2:1:0123 0:2:0123 3:0:1230\n"
        "-        1:1:0123 5:2:0123 4:0:1230\n"
        "1:3:3012 0:1:0123 4:2:0123 -\n"
        "2:3:3012 5:1:0123 3:2:0123 0:0:1230\n"
        "-        4:1:0123 2:2:0123 1:0:1230\n");
}

Triangulation oneFourMove(const Triangulation& tri, int tet) {
    auto tbl = tri.gluingTable();
    int n = int(tbl.size());
    auto idx = [&](int f) { return f == 0 ? tet : n + f - 1; };
    std::array<Gluing, 4> oldRow = tbl[tet];
    tbl.resize(n + 3);
    tbl[tet] = {};
    // cone tet over face f keeps the labels of that face, apex at label f;
    // cone tets f and g meet along the triangle over the edge opposite {f,g}
    for (int f = 0; f < 4; ++f)
        for (int g = f + 1; g < 4; ++g) {
            Perm4 sw = Perm4::transposition(f, g);
            tbl[idx(f)][g] = {idx(g), f, sw};
            tbl[idx(g)][f] = {idx(f), g, sw};
        }
    for (int f = 0; f < 4; ++f) {
        const Gluing& gl = oldRow[f];
        if (!gl.glued()) continue;
        if (gl.tet == tet) {
            tbl[idx(f)][f] = {idx(gl.face), gl.face, gl.perm};
        } else {
            tbl[idx(f)][f] = {gl.tet, gl.face, gl.perm};
            tbl[gl.tet][gl.face] = {idx(f), f, gl.perm.inverse()};
        }
    }
    return Triangulation(tbl);
}

Triangulation puncture(const Triangulation& tri) {
    // three nested cone subdivisions of tetrahedron 0 create three interior
    // vertices spanning a face; removing that face leaves a two-triangle
    // sphere whose cells all miss the old boundary
    Triangulation a = oneFourMove(tri, 0);
    Triangulation b = oneFourMove(a, 0);
    Triangulation c = oneFourMove(b, a.size());
    int p2 = b.size() + 1, p3 = b.size() + 2;
    auto tbl = c.gluingTable();
    tbl[p2][3] = {};
    tbl[p3][2] = {};
    return Triangulation(tbl);
}

Triangulation connectedSum(const Triangulation& a, const Triangulation& b) {
    Triangulation pa = puncture(a), pb = puncture(b);
    Triangulation u = disjointUnion(pa, pb);
    int a1 = pa.size() - 2, a2 = pa.size() - 1;
    int b1 = pa.size() + pb.size() - 2, b2 = pa.size() + pb.size() - 1;
    int wantBdry = pa.boundaryComponentCount() + pb.boundaryComponentCount() - 2;
    const std::array<std::array<int, 4>, 2> pairings = {{
        {a1, b1, a2, b2},  // sphere faces matched straight
        {a1, b2, a2, b1},  // or crosswise
    }};
    for (int pr = 0; pr < 2; ++pr) {
        int fa1 = 3, fa2 = 2;
        int fb1 = pr == 0 ? 3 : 2, fb2 = pr == 0 ? 2 : 3;
        for (int i = 0; i < 24; ++i) {
            Perm4 p = Perm4::atIndex(i);
            if (p[fa1] != fb1) continue;
            for (int j = 0; j < 24; ++j) {
                Perm4 q = Perm4::atIndex(j);
                if (q[fa2] != fb2) continue;
                auto tbl = u.gluingTable();
                tbl[pairings[pr][0]][fa1] = {pairings[pr][1], fb1, p};
                tbl[pairings[pr][1]][fb1] = {pairings[pr][0], fa1, p.inverse()};
                tbl[pairings[pr][2]][fa2] = {pairings[pr][3], fb2, q};
                tbl[pairings[pr][3]][fb2] = {pairings[pr][2], fa2, q.inverse()};
                try {
                    Triangulation out(tbl);
                    if (!out.connected()) continue;
                    if (out.orientable() != (pa.orientable() && pb.orientable()))
                        continue;
                    if (out.boundaryComponentCount() != wantBdry) continue;
                    // pairwise identification of the sphere cells, nothing more
                    if (out.vertexClassCount() !=
                        pa.vertexClassCount() + pb.vertexClassCount() - 3)
                        continue;
                    if (out.edgeClassCount() !=
                        pa.edgeClassCount() + pb.edgeClassCount() - 3)
                        continue;
                    if (out.triangleClassCount() !=
                        pa.triangleClassCount() + pb.triangleClassCount() - 2)
                        continue;
                    return out;
                } catch (const TriError&) {
                }
            }
        }
    }
    throw TriError("connected sum: no valid sphere gluing found");
}

}  // namespace hyp3::fixtures
