#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hyp3/triangulation.hpp>

#include <set>

using namespace hyp3;

TEST_CASE("perm4 basics") {
    std::set<std::string> seen;
    for (int i = 0; i < 24; ++i) {
        Perm4 p = Perm4::atIndex(i);
        CHECK(p.index() == i);
        seen.insert(p.digits());
        CHECK(p.then(p.inverse()).isIdentity());
        CHECK(p.inverse().then(p).isIdentity());
        CHECK(p.sign() == p.inverse().sign());
    }
    CHECK(seen.size() == 24);
    CHECK(Perm4(1, 0, 2, 3).sign() == -1);
    CHECK(Perm4(1, 0, 3, 2).sign() == 1);
    CHECK(!Perm4::fromDigits("0124"));
    CHECK(!Perm4::fromDigits("0012"));
    CHECK(!Perm4::fromDigits("012"));
    CHECK(Perm4::fromDigits("2031")->digits() == "2031");

    // composition order: (a.then(b))[i] = b[a[i]]
    Perm4 a(1, 2, 3, 0), b(0, 2, 1, 3);
    for (int i = 0; i < 4; ++i) CHECK(a.then(b)[i] == b[a[i]]);

    // edge tables
    for (int e = 0; e < 6; ++e) CHECK(kEdgeNum[kEdgeVerts[e][0]][kEdgeVerts[e][1]] == e);
    for (int q = 0; q < 3; ++q) {
        CHECK(kQuadSep[kQuadPairA[q][0]][kQuadPairA[q][1]] == q);
        CHECK(kQuadSep[kQuadPairB[q][0]][kQuadPairB[q][1]] == q);
    }
}

TEST_CASE("lone tetrahedron skeleton") {
    Triangulation t(std::vector<std::array<Gluing, 4>>(1));
    CHECK(t.size() == 1);
    CHECK(t.vertexClassCount() == 4);
    CHECK(t.edgeClassCount() == 6);
    CHECK(t.triangleClassCount() == 4);
    CHECK(t.eulerCharacteristic() == 1);
    CHECK(t.connected());
    CHECK(t.orientable());
    CHECK(t.finiteKind());
    CHECK(t.boundaryFaceCount() == 4);
    CHECK(t.boundaryComponentCount() == 1);
    const auto& bc = t.boundaryComponent(0);
    CHECK(bc.V == 4);
    CHECK(bc.E == 6);
    CHECK(bc.F == 4);
    CHECK(bc.chi() == 2);
    CHECK(bc.sphere());
    CHECK(bc.orientableSurface);
    for (int v = 0; v < 4; ++v) {
        CHECK(t.vertexInfo(t.vertexClass(0, v)).link == LinkType::disc);
        CHECK(t.vertexInfo(t.vertexClass(0, v)).linkChi == 1);
    }
    for (int e = 0; e < 6; ++e) {
        const auto& ei = t.edgeInfo(t.edgeClass(0, e));
        CHECK(ei.degree() == 1);
        CHECK(ei.boundary);
        CHECK(ei.walk.size() == 1);
        CHECK(t.edgeOrient(0, e) == 1);
    }

    PivotResult pr = t.boundaryPivot(0, 2, kEdgeNum[0][1]);
    CHECK(pr.tet == 0);
    CHECK(pr.face == 3);
    CHECK(pr.cornerMap == Perm4(0, 1, 3, 2));
}

TEST_CASE("gluing validation errors") {
    // face glued to itself
    {
        std::vector<std::array<Gluing, 4>> g(1);
        g[0][0] = {0, 0, Perm4()};
        CHECK_THROWS_AS(Triangulation{g}, TriError);
    }
    // permutation does not carry face to face
    {
        std::vector<std::array<Gluing, 4>> g(2);
        g[0][0] = {1, 1, Perm4()};  // id maps 0 to 0, not 1
        g[1][1] = {0, 0, Perm4()};
        CHECK_THROWS_AS(Triangulation{g}, TriError);
    }
    // not involutive
    {
        std::vector<std::array<Gluing, 4>> g(2);
        g[0][0] = {1, 0, Perm4()};
        // missing back-gluing
        CHECK_THROWS_AS(Triangulation{g}, TriError);
    }
    {
        std::vector<std::array<Gluing, 4>> g(2);
        g[0][0] = {1, 1, *Perm4::fromDigits("1032")};
        g[1][1] = {0, 0, *Perm4::fromDigits("1032")};  // fine: self-inverse
        Triangulation t(g);
        CHECK(t.size() == 2);
    }
    // dangling reference
    {
        std::vector<std::array<Gluing, 4>> g(1);
        g[0][0] = {5, 0, Perm4()};
        CHECK_THROWS_AS(Triangulation{g}, TriError);
    }
}

TEST_CASE("two-tet sphere (doubled tetrahedron)") {
    std::vector<std::array<Gluing, 4>> g(2);
    for (int f = 0; f < 4; ++f) {
        g[0][f] = {1, f, Perm4()};
        g[1][f] = {0, f, Perm4()};
    }
    Triangulation t(g);
    CHECK(t.vertexClassCount() == 4);
    CHECK(t.edgeClassCount() == 6);
    CHECK(t.triangleClassCount() == 4);
    CHECK(t.eulerCharacteristic() == 0);
    CHECK(t.boundaryFaceCount() == 0);
    CHECK(t.boundaryComponentCount() == 0);
    CHECK(t.orientable());
    CHECK(t.connected());
    CHECK(t.finiteKind());
    for (int v = 0; v < 4; ++v) CHECK(t.vertexInfo(t.vertexClass(0, v)).link == LinkType::sphere);
    for (int e = 0; e < 6; ++e) {
        const auto& ei = t.edgeInfo(t.edgeClass(0, e));
        CHECK(ei.degree() == 2);
        CHECK(!ei.boundary);
    }
}

TEST_CASE("disjoint union disconnected") {
    Triangulation lone(std::vector<std::array<Gluing, 4>>(1));
    Triangulation two = disjointUnion(lone, lone);
    CHECK(two.size() == 2);
    CHECK(!two.connected());
    CHECK(two.boundaryComponentCount() == 2);
}

TEST_CASE("one-tet census: non-orientable closed-link example exists") {
    // Pair the four faces of one tetrahedron in all ways; at least one valid
    // triangulation must be non-orientable with a closed non-sphere link
    // (the classical 1-tet ideal triangulation of a Klein-bottle cusp).
    int valid = 0, nonor = 0, kleinCusp = 0;
    const int pairing[3][4] = {{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    for (int pi = 0; pi < 3; ++pi)
        for (int i1 = 0; i1 < 24; ++i1)
            for (int i2 = 0; i2 < 24; ++i2) {
                Perm4 p1 = Perm4::atIndex(i1), p2 = Perm4::atIndex(i2);
                int fA = 0, fB = pairing[pi][0];
                int fC = -1, fD = -1;
                for (int f = 1; f < 4; ++f)
                    if (f != fB) {
                        if (fC < 0)
                            fC = f;
                        else
                            fD = f;
                    }
                if (pairing[pi][fC] != fD) continue;
                if (p1[fA] != fB || p2[fC] != fD) continue;
                std::vector<std::array<Gluing, 4>> g(1);
                g[0][fA] = {0, fB, p1};
                g[0][fB] = {0, fA, p1.inverse()};
                g[0][fC] = {0, fD, p2};
                g[0][fD] = {0, fC, p2.inverse()};
                try {
                    Triangulation t(g);
                    ++valid;
                    if (!t.orientable()) {
                        ++nonor;
                        bool closedNonSphere = true;
                        for (int vc = 0; vc < t.vertexClassCount(); ++vc)
                            if (!t.vertexInfo(vc).linkClosed || t.vertexInfo(vc).link == LinkType::sphere)
                                closedNonSphere = false;
                        if (closedNonSphere && t.vertexClassCount() == 1 &&
                            t.vertexInfo(0).linkChi == 0)
                            ++kleinCusp;
                    }
                } catch (const TriError&) {
                }
            }
    CHECK(valid > 0);
    CHECK(nonor > 0);
    CHECK(kleinCusp > 0);  // Gieseking-like
}

TEST_CASE("gluing table parse and emit") {
    Triangulation lone(std::vector<std::array<Gluing, 4>>(1));
    std::string canon = toGluingTable(lone);
    CHECK(canon == "- - - -\n");
    Triangulation re = parseGluingTable(canon);
    CHECK(toGluingTable(re) == canon);

    std::string s3 =
        "# doubled tetrahedron\n"
        "\n"
        "1:0:0123 1:1:0123 1:2:0123 1:3:0123\n"
        "0:0:0123 0:1:0123 0:2:0123 0:3:0123\n";
    Triangulation t = parseGluingTable(s3);
    CHECK(t.size() == 2);
    CHECK(t.eulerCharacteristic() == 0);
    std::string emitted = toGluingTable(t);
    Triangulation t2 = parseGluingTable(emitted);
    CHECK(toGluingTable(t2) == emitted);

    CHECK_THROWS_WITH_AS(parseGluingTable("- - -\n"), doctest::Contains("line 1"), TriError);
    CHECK_THROWS_WITH_AS(parseGluingTable("- - - -\n0:1:0423 - - -\n"), doctest::Contains("line 2"),
                         TriError);
    CHECK_THROWS_WITH_AS(parseGluingTable("7:0:0123 - - -\n"), doctest::Contains("7"), TriError);
    CHECK_THROWS_AS(parseGluingTable("x:0:0123 - - -\n"), TriError);
}
