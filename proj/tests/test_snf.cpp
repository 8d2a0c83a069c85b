#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hyp3/homology.hpp>
#include <hyp3/snf.hpp>

#include <random>

using namespace hyp3;

namespace {

void checkCertificate(const IMat& a, const SNFResult& s) {
    CHECK(matMul(matMul(s.U, a), s.V) == s.D);
    Int du = detBareiss(s.U), dv = detBareiss(s.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    int m = rows(s.D), n = cols(s.D);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) CHECK(s.D[i][j] == 0);
    auto d = s.diag();
    for (size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i + 1] != 0) {
            REQUIRE(d[i] != 0);
            CHECK(d[i + 1] % d[i] == 0);
        }
        CHECK(d[i] >= 0);
    }
}

}  // namespace

TEST_CASE("snf small examples") {
    IMat a = {{2, 0}, {0, 3}};
    SNFResult s = smithNormalForm(a);
    checkCertificate(a, s);
    CHECK(s.diag() == std::vector<Int>{1, 6});

    IMat z = {{0, 0}, {0, 0}};
    s = smithNormalForm(z);
    checkCertificate(z, s);
    CHECK(s.diag() == std::vector<Int>{0, 0});
    CHECK(s.rank == 0);

    IMat id3 = identityMat(3);
    s = smithNormalForm(id3);
    checkCertificate(id3, s);
    CHECK(s.diag() == std::vector<Int>{1, 1, 1});

    IMat rect = {{4, 6, 10}};
    s = smithNormalForm(rect);
    checkCertificate(rect, s);
    CHECK(s.diag() == std::vector<Int>{2});
}

TEST_CASE("snf random certificates") {
    std::mt19937_64 rng(20240901);
    std::uniform_int_distribution<int> dim(1, 6), val(-9, 9);
    for (int trial = 0; trial < 60; ++trial) {
        int m = dim(rng), n = dim(rng);
        IMat a(m, std::vector<Int>(n));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = val(rng);
        SNFResult s = smithNormalForm(a);
        checkCertificate(a, s);
    }
}

TEST_CASE("kernel and integral solve") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dim(1, 5), val(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        int m = dim(rng), n = dim(rng);
        IMat a(m, std::vector<Int>(n));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = val(rng);
        IMat k = kernelBasis(a);
        if (cols(k) > 0) {
            IMat prod = matMul(a, k);
            for (auto& row : prod)
                for (auto& x : row) CHECK(x == 0);
        }
        std::vector<Int> x0(n), b(m, 0);
        for (int j = 0; j < n; ++j) x0[j] = val(rng);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) b[i] += a[i][j] * x0[j];
        std::vector<Int> x;
        REQUIRE(solveIntegral(a, b, x));
        std::vector<Int> b2(m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) b2[i] += a[i][j] * x[j];
        CHECK(b2 == b);
    }
    IMat two = {{2}};
    std::vector<Int> x;
    CHECK(!solveIntegral(two, {Int(1)}, x));
    CHECK(solveIntegral(two, {Int(6)}, x));
    CHECK(x == std::vector<Int>{3});
}

TEST_CASE("chain H1 of hand-built complexes") {
    // circle: one vertex, one loop edge
    {
        IMat d1(1, std::vector<Int>(1, 0));
        IMat d2(1, std::vector<Int>(0));
        ChainH1 h = chainH1(d1, d2);
        CHECK(h.group == groupZ(1));
        CHECK(h.group.str() == "Z");
    }
    // one-vertex torus: three edges, two faces with boundaries +-(a+b-c)
    {
        IMat d1(1, std::vector<Int>(3, 0));
        IMat d2 = {{1, -1}, {1, -1}, {-1, 1}};
        ChainH1 h = chainH1(d1, d2);
        CHECK(h.group == groupZ(2));
        // edge classes: a ~ b + (a - b); a !~ b
        CHECK(h.classOf({1, 0, 0}) != h.classOf({0, 1, 0}));
        CHECK(h.classOf({1, 0, 0}) != h.classOf({0, -1, 0}));
        CHECK(h.classOf({1, 1, -1}) == h.classOf({0, 0, 0}));
    }
    // RP^2-ish: one edge, one face attached by degree 2
    {
        IMat d1(1, std::vector<Int>(1, 0));
        IMat d2 = {{2}};
        ChainH1 h = chainH1(d1, d2);
        CHECK(h.group.rank == 0);
        REQUIRE(h.group.torsion.size() == 1);
        CHECK(h.group.torsion[0] == 2);
        CHECK(h.group.str() == "Z/2");
    }
}

TEST_CASE("homology of simple triangulations") {
    Triangulation lone(std::vector<std::array<Gluing, 4>>(1));
    CHECK(homologyH1(lone).trivial());
    CHECK(simplicialH1(lone).h1.group.trivial());

    std::vector<std::array<Gluing, 4>> g(2);
    for (int f = 0; f < 4; ++f) {
        g[0][f] = {1, f, Perm4()};
        g[1][f] = {0, f, Perm4()};
    }
    Triangulation sphere(g);
    CHECK(homologyH1(sphere).trivial());
    CHECK(simplicialH1(sphere).h1.group.trivial());

    Triangulation two = disjointUnion(lone, lone);
    CHECK(homologyH1(two).trivial());

    BoundaryZ2 bz = boundaryH1Z2(lone);
    CHECK(bz.dim == 0);
}
