#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hyp3/fixtures.hpp>
#include <hyp3/homology.hpp>
#include <hyp3/normal.hpp>
#include <hyp3/reduce.hpp>
#include <hyp3/surface.hpp>
#include <hyp3/truncate.hpp>

#include <algorithm>
#include <vector>

using namespace hyp3;
namespace fx = hyp3::fixtures;

namespace {

NormalVector stdvec(std::vector<long> v) {
    NormalVector out;
    out.system = CoordSystem::standard;
    for (long x : v) out.coords.push_back(Int(x));
    return out;
}

long long bdryChi(const Triangulation& tri) {
    long long s = 0;
    for (int i = 0; i < tri.boundaryComponentCount(); ++i)
        s += tri.boundaryComponent(i).chi();
    return s;
}

std::vector<int> totalClass(const SurfaceReport& r, int dim) {
    std::vector<int> t(dim, 0);
    for (const auto& c : r.boundaryClasses)
        for (int i = 0; i < dim; ++i) t[i] ^= c[i];
    return t;
}

NormalVector sum(const NormalVector& a, const NormalVector& b) {
    NormalVector s = a;
    for (size_t i = 0; i < s.coords.size(); ++i) s.coords[i] += b.coords[i];
    return s;
}

}  // namespace

TEST_CASE("corner triangles and the lone quad are discs") {
    auto tri = fx::ball();
    for (int v = 0; v < 4; ++v) {
        std::vector<long> c(7, 0);
        c[v] = 1;
        auto r = reconstructSurface(tri, stdvec(c));
        CHECK(r.chi == 1);
        CHECK(r.connected);
        CHECK(r.components == 1);
        CHECK(r.orientable);
        CHECK(r.boundaryCurveCount == 1);
        CHECK(r.type == SurfaceType::disc);
        CHECK(r.vertexLinking);
    }
    for (int k = 0; k < 3; ++k) {
        std::vector<long> c(7, 0);
        c[4 + k] = 1;
        auto r = reconstructSurface(tri, stdvec(c));
        CHECK(r.chi == 1);
        CHECK(r.boundaryCurveCount == 1);
        CHECK(r.type == SurfaceType::disc);
        CHECK(!r.vertexLinking);
    }
}

TEST_CASE("vertex links reconstruct to the expected closed types") {
    auto fig8 = fx::fig8();
    auto r = reconstructSurface(fig8, vertexLinkVector(fig8, 0));
    CHECK(r.chi == 0);
    CHECK(r.orientable);
    CHECK(r.connected);
    CHECK(r.boundaryCurveCount == 0);
    CHECK(r.vertexLinking);
    CHECK(r.type == SurfaceType::torus);

    auto wh = fx::whitehead();
    for (int vc = 0; vc < wh.vertexClassCount(); ++vc) {
        auto rw = reconstructSurface(wh, vertexLinkVector(wh, vc));
        CHECK(rw.type == SurfaceType::torus);
        CHECK(rw.vertexLinking);
    }

    auto s3 = fx::sphereS3();
    auto rs = reconstructSurface(s3, vertexLinkVector(s3, 0));
    CHECK(rs.chi == 2);
    CHECK(rs.type == SurfaceType::sphere);
    CHECK(rs.vertexLinking);
}

TEST_CASE("solid torus vertex catalogue: moebius band, annulus, discs") {
    auto tri = fx::solidTorus();
    auto sols = enumerateVertexSolutions(tri, CoordSystem::standard);
    REQUIRE(sols.size() == 4);
    CHECK(sols[0] == stdvec({0, 0, 0, 0, 0, 1, 0}));
    CHECK(sols[1] == stdvec({0, 0, 1, 1, 1, 0, 0}));
    CHECK(sols[2] == stdvec({1, 1, 0, 0, 0, 0, 1}));
    CHECK(sols[3] == stdvec({1, 1, 1, 1, 0, 0, 0}));

    auto moebius = reconstructSurface(tri, sols[0]);
    CHECK(moebius.chi == 0);
    CHECK(!moebius.orientable);
    CHECK(moebius.boundaryCurveCount == 1);
    CHECK(moebius.type == SurfaceType::moebiusBand);
    CHECK(cutAlong(tri, sols[0]).size() == 1);

    auto annulus = reconstructSurface(tri, sols[1]);
    CHECK(annulus.chi == 0);
    CHECK(annulus.orientable);
    CHECK(annulus.boundaryCurveCount == 2);
    CHECK(annulus.type == SurfaceType::annulus);
    CHECK(cutAlong(tri, sols[1]).size() == 2);

    int dim = boundaryH1Z2(tri).dim;
    REQUIRE(dim == 2);

    // Meridian disc: essential boundary, does not separate.
    auto meridian = reconstructSurface(tri, sols[2]);
    CHECK(meridian.chi == 1);
    CHECK(meridian.type == SurfaceType::disc);
    CHECK(meridian.boundaryCurveCount == 1);
    CHECK(totalClass(meridian, dim) != std::vector<int>(dim, 0));
    CHECK(meridian.separating.has_value());
    CHECK(!meridian.separating.value());
    CHECK(cutAlong(tri, sols[2]).size() == 1);
    CHECK(!isSeparating(tri, sols[2]));

    // Vertex-linking disc: null boundary class, cuts off a collar ball.
    auto link = reconstructSurface(tri, sols[3]);
    CHECK(link.chi == 1);
    CHECK(link.type == SurfaceType::disc);
    CHECK(link.vertexLinking);
    CHECK(totalClass(link, dim) == std::vector<int>(dim, 0));
    CHECK(cutAlong(tri, sols[3]).size() == 2);
    CHECK(isSeparating(tri, sols[3]));
}

TEST_CASE("lens space holds a Klein bottle, trefoil a genus-two surface") {
    auto lens = fx::lensSpace();
    auto sols = enumerateVertexSolutions(lens, CoordSystem::standard);
    REQUIRE(sols.size() == 2);
    auto kb = reconstructSurface(lens, sols[0]);
    CHECK(kb.chi == 0);
    CHECK(!kb.orientable);
    CHECK(kb.boundaryCurveCount == 0);
    CHECK(kb.type == SurfaceType::kleinBottle);
    auto sph = reconstructSurface(lens, sols[1]);
    CHECK(sph.type == SurfaceType::sphere);
    CHECK(sph.vertexLinking);

    auto tref = fx::trefoil();
    auto tsols = enumerateVertexSolutions(tref, CoordSystem::standard);
    REQUIRE(tsols.size() == 2);
    CHECK(tsols[0] == stdvec({1, 1, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0}));
    auto genus2 = reconstructSurface(tref, tsols[0]);
    CHECK(genus2.chi == -2);
    CHECK(genus2.orientable);
    CHECK(genus2.connected);
    CHECK(genus2.boundaryCurveCount == 0);
    CHECK(genus2.type == SurfaceType::none);
    auto lk = reconstructSurface(tref, tsols[1]);
    CHECK(lk.type == SurfaceType::torus);
    CHECK(lk.vertexLinking);
}

TEST_CASE("cutting a ball along a corner disc yields two balls") {
    auto tri = fx::ball();
    auto pieces = cutAlong(tri, stdvec({1, 0, 0, 0, 0, 0, 0}));
    REQUIRE(pieces.size() == 2);
    for (auto& p : pieces) {
        CHECK(p.eulerCharacteristic() == 1);
        CHECK(p.boundaryComponentCount() == 1);
        CHECK(p.boundaryComponent(0).sphere());
    }
    CHECK(isSeparating(tri, stdvec({1, 0, 0, 0, 0, 0, 0})));

    auto qpieces = cutAlong(tri, stdvec({0, 0, 0, 0, 0, 1, 0}));
    REQUIRE(qpieces.size() == 2);
    for (auto& p : qpieces) {
        CHECK(p.eulerCharacteristic() == 1);
        CHECK(p.boundaryComponent(0).sphere());
    }
}

TEST_CASE("cutting along the empty surface subdivides") {
    auto tri = fx::solidTorus();
    NormalVector zero{CoordSystem::standard, std::vector<Int>(7, Int(0))};
    auto pieces = cutAlong(tri, zero);
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0].eulerCharacteristic() == 0);
    CHECK(pieces[0].boundaryComponentCount() == 1);
    CHECK(pieces[0].boundaryComponent(0).torus());

    auto ball = fx::ball();
    NormalVector zb{CoordSystem::standard, std::vector<Int>(7, Int(0))};
    auto bp = cutAlong(ball, zb);
    REQUIRE(bp.size() == 1);
    CHECK(bp[0].eulerCharacteristic() == 1);
    CHECK(bp[0].boundaryComponent(0).sphere());
}

TEST_CASE("euler characteristic bookkeeping across cuts") {
    // Cutting M along S gives pieces with total chi(M) + chi(S) and total
    // boundary chi(dM) + 2 chi(S).
    auto run = [](const Triangulation& tri) {
        auto sols = enumerateVertexSolutions(tri, CoordSystem::standard);
        for (const auto& s : sols) {
            auto r = reconstructSurface(tri, s);
            if (!r.connected) continue;
            auto pieces = cutAlong(tri, s);
            REQUIRE(pieces.size() >= 1);
            REQUIRE(pieces.size() <= 2);
            long long chis = 0, bchis = 0;
            for (auto& p : pieces) {
                chis += p.eulerCharacteristic();
                bchis += bdryChi(p);
            }
            CHECK(chis == tri.eulerCharacteristic() + r.chi);
            CHECK(bchis == bdryChi(tri) + 2 * r.chi);
            CHECK(isSeparating(tri, s) == (pieces.size() == 2));
            if (r.separating.has_value()) CHECK(r.separating.value() == (pieces.size() == 2));
        }
    };
    run(fx::ball());
    run(fx::solidTorus());
    run(fx::lensSpace());
    run(fx::trefoil());
    run(fx::torusCrossInterval());
}

TEST_CASE("boundary classes add mod 2 under normal sum") {
    auto run = [](const Triangulation& tri) {
        int dim = boundaryH1Z2(tri).dim;
        auto sols = enumerateVertexSolutions(tri, CoordSystem::standard);
        int tried = 0;
        for (size_t i = 0; i < sols.size(); ++i)
            for (size_t j = i; j < sols.size(); ++j) {
                auto s = sum(sols[i], sols[j]);
                if (!admissible(s)) continue;
                if (++tried > 60) return;
                auto ri = reconstructSurface(tri, sols[i]);
                auto rj = reconstructSurface(tri, sols[j]);
                auto rs = reconstructSurface(tri, s);
                auto want = totalClass(ri, dim);
                auto tj = totalClass(rj, dim);
                for (int k = 0; k < dim; ++k) want[k] ^= tj[k];
                CHECK(totalClass(rs, dim) == want);
            }
    };
    run(fx::solidTorus());
    run(fx::torusCrossInterval());
}

TEST_CASE("split components partitions a disconnected surface") {
    auto tri = fx::solidTorus();
    auto meridian = stdvec({1, 1, 0, 0, 0, 0, 1});
    auto link = stdvec({1, 1, 1, 1, 0, 0, 0});
    auto both = sum(meridian, link);
    auto r = reconstructSurface(tri, both);
    CHECK(!r.connected);
    CHECK(r.components == 2);
    CHECK(r.type == SurfaceType::none);
    auto parts = splitComponents(tri, both);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == meridian);
    CHECK(parts[1] == link);

    // Doubling one disc gives two parallel copies.
    auto twice = sum(meridian, meridian);
    auto rr = reconstructSurface(tri, twice);
    CHECK(rr.components == 2);
    auto copies = splitComponents(tri, twice);
    REQUIRE(copies.size() == 2);
    CHECK(copies[0] == meridian);
    CHECK(copies[1] == meridian);

    auto single = splitComponents(tri, meridian);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == meridian);

    NormalVector zero{CoordSystem::standard, std::vector<Int>(7, Int(0))};
    CHECK(splitComponents(tri, zero).empty());
    auto rz = reconstructSurface(tri, zero);
    CHECK(rz.components == 0);
    CHECK(!rz.connected);
    CHECK(rz.type == SurfaceType::none);
}

TEST_CASE("reduced truncated figure-eight: parallel torus cuts off a collar") {
    auto red = reduceTriangulation(truncate(fx::fig8()));
    REQUIRE(red.boundaryComponentCount() == 1);
    auto sols = enumerateVertexSolutions(red, CoordSystem::standard);
    REQUIRE(sols.size() > 0);
    int tori = 0;
    bool cutChecked = false;
    for (const auto& s : sols) {
        auto r = reconstructSurface(red, s);
        if (!r.connected || r.type != SurfaceType::torus) continue;
        ++tori;
        if (cutChecked) continue;
        cutChecked = true;
        auto pieces = cutAlong(red, s);
        REQUIRE(pieces.size() == 2);
        long long chis = 0;
        for (auto& p : pieces) chis += p.eulerCharacteristic();
        CHECK(chis == 0);
        CHECK(isSeparating(red, s));
    }
    CHECK(tori > 0);
}

TEST_CASE("surface input validation") {
    auto tri = fx::solidTorus();
    NormalVector quad{CoordSystem::quad, {Int(0), Int(0), Int(1)}};
    CHECK_THROWS_AS((void)reconstructSurface(tri, quad), TriError);

    NormalVector bad{CoordSystem::standard, std::vector<Int>(7, Int(0))};
    bad.coords[4] = 1;
    bad.coords[5] = 1;  // two quad types in one tet
    CHECK_THROWS_AS((void)reconstructSurface(tri, bad), TriError);

    NormalVector shorty{CoordSystem::standard, std::vector<Int>(6, Int(0))};
    CHECK_THROWS_AS((void)reconstructSurface(tri, shorty), TriError);

    NormalVector unmatched{CoordSystem::standard, std::vector<Int>(7, Int(0))};
    unmatched.coords[0] = 1;  // lone triangle violates the matching system
    CHECK_THROWS_AS((void)reconstructSurface(tri, unmatched), TriError);
    CHECK_THROWS_AS((void)cutAlong(tri, unmatched), TriError);

    // isSeparating needs a connected surface.
    auto both = sum(stdvec({1, 1, 0, 0, 0, 0, 1}), stdvec({1, 1, 1, 1, 0, 0, 0}));
    CHECK_THROWS_AS((void)isSeparating(tri, both), TriError);
}

TEST_CASE("resource caps on assembly and cutting") {
    auto ball = fx::ball();
    NormalVector huge{CoordSystem::standard, std::vector<Int>(7, Int(0))};
    huge.coords[0] = 3000000;
    CHECK_THROWS_AS((void)reconstructSurface(ball, huge), ResourceError);

    NormalVector big{CoordSystem::standard, std::vector<Int>(7, Int(0))};
    big.coords[0] = 200000;
    CHECK_THROWS_AS((void)cutAlong(ball, big), ResourceError);
    (void)reconstructSurface(ball, big);  // fine below the assembly cap
}
