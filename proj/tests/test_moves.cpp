#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hyp3/homology.hpp>
#include <hyp3/moves.hpp>
#include <hyp3/reduce.hpp>
#include <hyp3/truncate.hpp>

#include <array>
#include <random>
#include <vector>

using namespace hyp3;

namespace {

using Table = std::vector<std::array<Gluing, 4>>;

void glue(Table& tbl, int t, int f, int t2, int f2, const Perm4& p) {
    tbl[t][f] = {t2, f2, p};
    tbl[t2][f2] = {t, f, p.inverse()};
}

Triangulation loneTet() { return Triangulation(Table(1)); }

Triangulation doubledTet() {
    Table tbl(2);
    for (int f = 0; f < 4; ++f) glue(tbl, 0, f, 1, f, Perm4());
    return Triangulation(tbl);
}

// Lone tetrahedron folded along edge (0,1): a one-tetrahedron ball whose
// boundary sphere is two triangles.
Triangulation foldedBall() { return foldAlongEdge(loneTet(), 0); }

std::vector<Perm4> permsSending(int from, int to) {
    std::vector<Perm4> out;
    for (int i = 0; i < 24; ++i) {
        Perm4 p = Perm4::atIndex(i);
        if (p[from] == to) out.push_back(p);
    }
    return out;
}

// Smallest 2-tet candidates in search order, normalized so that tet 0 face 0
// is glued to tet 1 face 0 by the identity.
template <typename Pred>
Triangulation findTwoTet(Pred&& want) {
    static const int pairings[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                       {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    for (const auto& pr : pairings) {
        auto p1 = permsSending(1, pr[0]);
        auto p2 = permsSending(2, pr[1]);
        auto p3 = permsSending(3, pr[2]);
        for (const Perm4& a : p1)
            for (const Perm4& b : p2)
                for (const Perm4& c : p3) {
                    Table tbl(2);
                    glue(tbl, 0, 0, 1, 0, Perm4());
                    glue(tbl, 0, 1, 1, pr[0], a);
                    glue(tbl, 0, 2, 1, pr[1], b);
                    glue(tbl, 0, 3, 1, pr[2], c);
                    try {
                        Triangulation t(tbl);
                        if (want(t)) return t;
                    } catch (const TriError&) {
                    }
                }
    }
    throw TriError("no two-tet triangulation matched");
}

const Triangulation& twoTetCusped() {
    static const Triangulation t = findTwoTet([](const Triangulation& c) {
        return c.orientable() && c.vertexClassCount() == 1 &&
               c.vertexInfo(0).link == LinkType::torus;
    });
    return t;
}

const Triangulation& oneTetSolidTorus() {
    static const Triangulation t = [] {
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                for (const Perm4& p : permsSending(a, b)) {
                    Table tbl(1);
                    tbl[0][a] = {0, b, p};
                    tbl[0][b] = {0, a, p.inverse()};
                    try {
                        Triangulation c(tbl);
                        if (c.orientable() && c.finiteKind() &&
                            c.boundaryComponentCount() == 1 &&
                            c.boundaryComponent(0).torus() &&
                            homologyH1(c) == groupZ(1))
                            return c;
                    } catch (const TriError&) {
                    }
                }
        throw TriError("no one-tet solid torus found");
    }();
    return t;
}

const Triangulation& truncatedTwoTet() {
    static const Triangulation t = truncate(twoTetCusped());
    return t;
}

const Triangulation& reducedTwoTet() {
    static const Triangulation t = reduceTriangulation(truncatedTwoTet());
    return t;
}

bool congruentModZg(const std::array<long long, 2>& u, const std::array<long long, 2>& v,
                    long long g0, long long g1) {
    long long d0 = u[0] - v[0], d1 = u[1] - v[1];
    if (d0 == 0 && d1 == 0) return true;
    if (g0 == 0 && g1 == 0) return false;
    if (d0 * g1 != d1 * g0) return false;
    long long k = g0 != 0 ? d0 / g0 : d1 / g1;
    return d0 == k * g0 && d1 == k * g1;
}

}  // namespace

TEST_CASE("boundary edge status on the lone tetrahedron") {
    Triangulation t = loneTet();
    for (int ec = 0; ec < 6; ++ec) {
        BoundaryEdgeStatus st = boundaryEdgeStatus(t, ec);
        CHECK(st.embedded);
        CHECK(st.coembedded);
        BoundaryEdgeSides s = boundaryEdgeSides(t, ec);
        CHECK(!s.sameTriangle());
        CHECK(s.cornerMap[s.face1] == s.face2);
        int a = kEdgeVerts[s.edge1][0], b = kEdgeVerts[s.edge1][1];
        CHECK(kEdgeNum[s.cornerMap[a]][s.cornerMap[b]] == s.edge2);
        CHECK(foldIsSafe(t, ec));
    }
    BoundaryEdgeSides s0 = boundaryEdgeSides(t, t.edgeClass(0, 0));
    CHECK(s0.cornerMap == Perm4(0, 1, 3, 2));
}

TEST_CASE("two-two move on the lone tetrahedron") {
    Triangulation t = loneTet();
    HomologyGroup h = homologyH1(t);
    for (int ec = 0; ec < 6; ++ec) {
        Triangulation r = twoTwoMove(t, ec);
        CHECK(r.size() == 2);
        CHECK(r.boundaryFaceCount() == 4);
        CHECK(r.boundaryComponentCount() == 1);
        CHECK(r.boundaryComponent(0).sphere());
        CHECK(homologyH1(r) == h);
        int nc = r.edgeClass(1, kEdgeNum[2][3]);
        CHECK(r.edgeInfo(nc).boundary);
        CHECK(boundaryEdgeStatus(r, nc).coembedded);
        CHECK(r.orientable());
    }
}

TEST_CASE("fold along a coembedded edge of the lone tetrahedron") {
    Triangulation b = foldedBall();
    CHECK(b.size() == 1);
    CHECK(b.boundaryFaceCount() == 2);
    CHECK(b.connected());
    CHECK(b.orientable());
    CHECK(b.finiteKind());
    CHECK(homologyH1(b).trivial());
    REQUIRE(b.boundaryComponentCount() == 1);
    const auto& bc = b.boundaryComponent(0);
    CHECK(bc.sphere());
    CHECK(bc.V == 3);
    CHECK(bc.E == 3);
    CHECK(bc.F == 2);
}

TEST_CASE("unsafe coembedded folds exist and are detected") {
    Triangulation b = foldedBall();
    int risky = -1;
    int embeddedOnes = 0;
    for (int ec = 0; ec < b.edgeClassCount(); ++ec) {
        if (!b.edgeInfo(ec).boundary) continue;
        BoundaryEdgeStatus st = boundaryEdgeStatus(b, ec);
        if (st.coembedded) {
            CHECK(!st.embedded);
            risky = ec;
        }
        if (st.embedded) {
            ++embeddedOnes;
            CHECK(!st.coembedded);
            CHECK(boundaryEdgeSides(b, ec).sameTriangle());
            CHECK_THROWS_AS(twoTwoMove(b, ec), TriError);
        }
    }
    REQUIRE(risky >= 0);
    CHECK(embeddedOnes == 2);
    // The fold along the risky edge is a legal gluing but closes the ball
    // into a closed manifold; foldIsSafe must reject it.
    CHECK(!foldIsSafe(b, risky));
    Triangulation closed = foldAlongEdge(b, risky);
    CHECK(closed.boundaryFaceCount() == 0);
    // The reducer must leave the ball alone rather than fold it shut.
    Triangulation r = reduceTriangulation(b);
    CHECK(toGluingTable(r) == toGluingTable(b));
}

TEST_CASE("reducer leaves minimal triangulations alone") {
    ReduceOptions noFolds;
    noFolds.boundaryFolds = false;
    Triangulation t = loneTet();
    CHECK(toGluingTable(reduceTriangulation(t, noFolds)) == toGluingTable(t));
    Triangulation d = doubledTet();
    CHECK(d.boundaryFaceCount() == 0);
    CHECK(toGluingTable(reduceTriangulation(d)) == toGluingTable(d));
}

TEST_CASE("reducer shells off a two-two stack") {
    ReduceOptions noFolds;
    noFolds.boundaryFolds = false;
    Triangulation t = loneTet();
    for (int step = 0; step < 3; ++step) {
        int pick = -1;
        for (int ec = 0; ec < t.edgeClassCount() && pick < 0; ++ec) {
            if (!t.edgeInfo(ec).boundary) continue;
            if (boundaryEdgeStatus(t, ec).embedded &&
                !boundaryEdgeSides(t, ec).sameTriangle())
                pick = ec;
        }
        REQUIRE(pick >= 0);
        t = twoTwoMove(t, pick);
    }
    CHECK(t.size() == 4);
    Triangulation r = reduceTriangulation(t, noFolds);
    CHECK(r.size() == 1);
    CHECK(homologyH1(r).trivial());
    CHECK(r.boundaryComponent(0).sphere());
}

TEST_CASE("cone a boundary sphere") {
    Triangulation x = coneBoundaryComponent(loneTet(), 0);
    CHECK(x.size() == 5);
    CHECK(x.boundaryFaceCount() == 0);
    CHECK(x.orientable());
    CHECK(homologyH1(x).trivial());
    CHECK(x.eulerCharacteristic() == 0);

    Triangulation y = coneBoundaryComponent(foldedBall(), 0);
    CHECK(y.size() == 3);
    CHECK(y.boundaryFaceCount() == 0);
    CHECK(y.orientable());
    CHECK(homologyH1(y).trivial());
    CHECK(y.eulerCharacteristic() == 0);
}

TEST_CASE("truncate a two-tet cusped triangulation") {
    const Triangulation& m = twoTetCusped();
    CHECK(m.size() == 2);
    CHECK(m.idealKind());
    CHECK(m.boundaryFaceCount() == 0);
    HomologyGroup h = homologyH1(m);

    const Triangulation& t = truncatedTwoTet();
    CHECK(t.size() == 56);
    CHECK(t.finiteKind());
    CHECK(t.connected());
    CHECK(t.orientable());
    REQUIRE(t.boundaryComponentCount() == 1);
    CHECK(t.boundaryComponent(0).torus());
    CHECK(t.boundaryComponent(0).F == 8);
    CHECK(homologyH1(t) == h);

    CHECK_THROWS_AS(truncate(loneTet()), TriError);
}

TEST_CASE("truncate keeps finite boundary pieces intact") {
    Triangulation d = disjointUnion(twoTetCusped(), loneTet());
    Triangulation t = truncate(d);
    CHECK(!t.connected());
    CHECK(t.finiteKind());
    REQUIRE(t.boundaryComponentCount() == 2);
    int tori = 0, spheres = 0;
    for (int b = 0; b < 2; ++b) {
        if (t.boundaryComponent(b).torus()) ++tori;
        if (t.boundaryComponent(b).sphere()) ++spheres;
    }
    CHECK(tori == 1);
    CHECK(spheres == 1);
    CHECK(homologyH1(t) == homologyH1(twoTetCusped()));
}

TEST_CASE("truncate cones sphere-link vertices back") {
    // A two-tet ideal triangulation with an extra internal finite vertex, if
    // one exists in the search space.
    try {
        Triangulation m = findTwoTet([](const Triangulation& c) {
            if (!c.orientable() || !c.idealKind()) return false;
            bool hasFinite = false;
            for (int v = 0; v < c.vertexClassCount(); ++v) {
                const auto& vi = c.vertexInfo(v);
                if (vi.linkClosed && vi.linkChi == 2) hasFinite = true;
            }
            return hasFinite;
        });
        Triangulation t = truncate(m);
        CHECK(t.finiteKind());
        CHECK(t.boundaryComponentCount() == m.idealVertexCount());
        CHECK(homologyH1(t) == homologyH1(m));
    } catch (const TriError&) {
        MESSAGE("no two-tet ideal triangulation with a finite vertex; skipping");
    }
}

TEST_CASE("simplify cusps to one-vertex tori") {
    const Triangulation& t = truncatedTwoTet();
    HomologyGroup h = homologyH1(t);
    Triangulation s = simplifyCusps(t);
    CHECK(s.finiteKind());
    REQUIRE(s.boundaryComponentCount() == 1);
    const auto& bc = s.boundaryComponent(0);
    CHECK(bc.V == 1);
    CHECK(bc.E == 3);
    CHECK(bc.F == 2);
    CHECK(bc.torus());
    CHECK(homologyH1(s) == h);

    Triangulation s2 = simplifyCusps(s);
    CHECK(toGluingTable(s2) == toGluingTable(s));

    CHECK_THROWS_AS(simplifyCusps(twoTetCusped()), TriError);
    CHECK_THROWS_AS(simplifyCusps(loneTet()), TriError);
}

TEST_CASE("reduce a truncated triangulation") {
    const Triangulation& t = truncatedTwoTet();
    const Triangulation& r = reducedTwoTet();
    CHECK(r.size() < t.size());
    CHECK(homologyH1(r) == homologyH1(t));
    REQUIRE(r.boundaryComponentCount() == 1);
    CHECK(r.boundaryComponent(0).torus());
    CHECK(r.orientable());
    CHECK(r.connected());
    MESSAGE("reduced from 56 to ", r.size(), " tetrahedra");
    CHECK(r.size() <= 24);

    Triangulation s = simplifyCusps(r);
    CHECK(s.boundaryComponent(0).V == 1);
    CHECK(s.boundaryComponent(0).F == 2);

    Triangulation r2 = reduceTriangulation(t);
    CHECK(toGluingTable(r2) == toGluingTable(r));
}

TEST_CASE("moves preserve homology and boundary structure") {
    std::vector<Triangulation> corpus;
    corpus.push_back(loneTet());
    corpus.push_back(foldedBall());
    corpus.push_back(oneTetSolidTorus());
    corpus.push_back(reducedTwoTet());
    for (const Triangulation& t : corpus) {
        HomologyGroup h = homologyH1(t);
        int z2 = boundaryH1Z2(t).dim;
        for (int ec = 0; ec < t.edgeClassCount(); ++ec) {
            if (!t.edgeInfo(ec).boundary) continue;
            BoundaryEdgeSides s = boundaryEdgeSides(t, ec);
            if (!s.sameTriangle()) {
                Triangulation r = twoTwoMove(t, ec);
                CHECK(r.size() == t.size() + 1);
                CHECK(r.boundaryFaceCount() == t.boundaryFaceCount());
                CHECK(homologyH1(r) == h);
                CHECK(boundaryH1Z2(r).dim == z2);
                if (boundaryEdgeStatus(t, ec).embedded) {
                    int nc = r.edgeClass(r.size() - 1, kEdgeNum[2][3]);
                    CHECK(boundaryEdgeStatus(r, nc).coembedded);
                }
            }
            if (foldIsSafe(t, ec)) {
                Triangulation f = foldAlongEdge(t, ec);
                CHECK(f.boundaryFaceCount() == t.boundaryFaceCount() - 2);
                CHECK(homologyH1(f) == h);
                CHECK(boundaryH1Z2(f).dim == z2);
                CHECK(f.boundaryComponentCount() == t.boundaryComponentCount());
            }
        }
    }
}

TEST_CASE("boundary edge classes of minimal tori") {
    std::vector<Triangulation> cusped;
    cusped.push_back(oneTetSolidTorus());
    cusped.push_back(simplifyCusps(reducedTwoTet()));
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (const Triangulation& t : cusped) {
        REQUIRE(t.boundaryComponentCount() == 1);
        EdgeClassTriple trip = boundaryEdgeClasses(t, 0);
        auto v = trip.classes[0], w = trip.classes[1], x = trip.classes[2];
        CHECK(v[0] + w[0] == x[0]);
        CHECK(v[1] + w[1] == x[1]);
        long long det = v[0] * w[1] - v[1] * w[0];
        CHECK((det == 1 || det == -1));
        for (int trial = 0; trial < 300; ++trial) {
            long long g0 = coef(rng), g1 = coef(rng);
            if (g0 == 0 && g1 == 0) continue;
            bool all = congruentModZg(v, w, g0, g1) && congruentModZg(w, x, g0, g1);
            CHECK(!all);
        }
    }
}

TEST_CASE("fold fillings of a minimal torus boundary") {
    const Triangulation& st = oneTetSolidTorus();
    auto fills = foldFillings(st, 0);
    REQUIRE(fills.size() == 3);
    for (const Triangulation& f : fills) {
        CHECK(f.boundaryFaceCount() == 0);
        CHECK(f.connected());
        CHECK(f.orientable());
        HomologyGroup h = homologyH1(f);
        // A Dehn filling of a solid torus has cyclic first homology.
        CHECK(h.rank <= 1);
        CHECK(h.torsion.size() <= 1);
        CHECK(h.rank + int(h.torsion.size()) <= 1);
    }

    Triangulation s = simplifyCusps(reducedTwoTet());
    auto fills2 = foldFillings(s, 0);
    REQUIRE(fills2.size() == 3);
    for (const Triangulation& f : fills2) {
        CHECK(f.boundaryFaceCount() == 0);
        CHECK(f.orientable());
    }

    CHECK_THROWS_AS(foldFillings(truncatedTwoTet(), 0), TriError);
    CHECK_THROWS_AS(boundaryEdgeClasses(truncatedTwoTet(), 0), TriError);
}
