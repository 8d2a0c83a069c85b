#include <hyp3/homology.hpp>
#include <hyp3/surface.hpp>

#include "normal_detail.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace hyp3 {

namespace detail {

std::vector<TetCounts> pieceCounts(const Triangulation& tri, const NormalVector& vec,
                                   long maxPieces) {
    if (vec.system != CoordSystem::standard)
        throw TriError("surface assembly needs standard coordinates");
    if (vec.tets() != tri.size()) throw TriError("normal vector does not match the triangulation");
    if (!admissible(vec)) throw TriError("normal vector is not admissible");
    if (!satisfies(standardMatchingSystem(tri), vec.coords))
        throw TriError("normal vector violates the matching equations");
    std::vector<TetCounts> out(tri.size());
    long total = 0;
    for (int t = 0; t < tri.size(); ++t) {
        auto grab = [](const Int& x) {
            if (!x.fits_slong_p()) throw ResourceError("normal coordinate too large");
            return x.get_si();
        };
        for (int v = 0; v < 4; ++v) out[t].tri[v] = grab(vec.coords[7 * t + v]);
        for (int q = 0; q < 3; ++q) {
            long val = grab(vec.coords[7 * t + 4 + q]);
            if (val > 0) {
                out[t].quad = val;
                out[t].quadType = q;
            }
        }
        total += out[t].tri[0] + out[t].tri[1] + out[t].tri[2] + out[t].tri[3] + out[t].quad;
        if (total > maxPieces) throw ResourceError("normal surface too large to assemble");
    }
    return out;
}

}  // namespace detail

namespace {

using detail::arcCount;
using detail::crossCount;
using detail::DSU;
using detail::posFromMin;
using detail::TetCounts;

constexpr long kMaxReconstructPieces = 2000000;

bool inPair(int v, int edge) { return v == kEdgeVerts[edge][0] || v == kEdgeVerts[edge][1]; }

// The assembled surface as a cell complex: pieces (discs), side classes
// (arcs after gluing), corner classes (points on edges after gluing).
struct SurfaceComplex {
    std::vector<TetCounts> counts;
    long nPieces = 0;
    std::vector<long> pieceBase;   // 5 per tet: tri0..tri3, quad
    std::vector<long> cornerBase;  // 6 per tet, then crossCount positions
    long nCorners = 0;

    std::vector<int> pieceTet;
    std::vector<int8_t> pieceType;  // 0..3 triangle corner, 4 quad

    DSU pieces{0};
    DSU sides{0};  // ids: piece * 4 + face
    DSU corners{0};

    long interiorArcGluings = 0;
    long boundarySideInstances = 0;
    long totalSideInstances = 0;

    struct Adj {
        long other;
        int rel;  // +1 same orientation sign, -1 opposite
    };
    std::vector<std::vector<Adj>> adj;

    long pid(int t, int type, long copy) const { return pieceBase[5 * t + type] + copy; }
    long cid(int t, int e, long pos) const { return cornerBase[6 * t + e] + pos; }

    long pieceAt(int t, int f, int v, long d) const {
        const TetCounts& c = counts[t];
        (void)f;
        if (d < c.tri[v]) return pid(t, v, d);
        long j = d - c.tri[v];
        if (!inPair(v, c.quadType)) j = c.quad - 1 - j;
        return pid(t, 4, j);
    }

    // Direction of the side of the given piece lying on face f, relative to
    // the side's endpoint order (endpoint on the smaller-labelled opposite
    // edge first), induced by the piece's reference boundary cycle.
    int sideDir(long piece, int f) const {
        int t = pieceTet[piece];
        int ty = pieceType[piece];
        if (ty < 4) {
            int mid = -1, seen = 0;
            for (int x = 0; x < 4; ++x) {
                if (x == ty) continue;
                if (++seen == 2) mid = x;
            }
            return f == mid ? -1 : 1;
        }
        int k = counts[t].quadType;
        int e1 = kEdgeVerts[k][1];
        int o0 = kEdgeVerts[5 - k][0];
        return (f == e1 || f == o0) ? 1 : -1;
    }
};

SurfaceComplex buildComplex(const Triangulation& tri, const NormalVector& vec) {
    SurfaceComplex cx;
    cx.counts = detail::pieceCounts(tri, vec, kMaxReconstructPieces);

    cx.pieceBase.assign(5 * tri.size() + 1, 0);
    cx.cornerBase.assign(6 * tri.size() + 1, 0);
    long p = 0, c = 0;
    for (int t = 0; t < tri.size(); ++t) {
        for (int ty = 0; ty < 5; ++ty) {
            cx.pieceBase[5 * t + ty] = p;
            p += ty < 4 ? cx.counts[t].tri[ty] : cx.counts[t].quad;
        }
        for (int e = 0; e < 6; ++e) {
            cx.cornerBase[6 * t + e] = c;
            c += crossCount(cx.counts[t], e);
        }
    }
    cx.pieceBase[5 * tri.size()] = p;
    cx.cornerBase[6 * tri.size()] = c;
    cx.nPieces = p;
    cx.nCorners = c;

    cx.pieceTet.assign(p, 0);
    cx.pieceType.assign(p, 0);
    for (int t = 0; t < tri.size(); ++t)
        for (int ty = 0; ty < 5; ++ty)
            for (long i = cx.pieceBase[5 * t + ty]; i < cx.pieceBase[5 * t + ty + 1]; ++i) {
                cx.pieceTet[i] = t;
                cx.pieceType[i] = int8_t(ty);
            }

    cx.pieces = DSU(int(p));
    cx.sides = DSU(int(4 * p));
    cx.corners = DSU(int(c));
    cx.adj.assign(p, {});

    for (long q = 0; q < p; ++q) cx.totalSideInstances += cx.pieceType[q] == 4 ? 4 : 3;
    for (int t = 0; t < tri.size(); ++t)
        for (int f = 0; f < 4; ++f)
            if (tri.boundaryFace(t, f))
                for (int v = 0; v < 4; ++v)
                    if (v != f) cx.boundarySideInstances += arcCount(cx.counts[t], f, v);

    for (int fc = 0; fc < tri.triangleClassCount(); ++fc) {
        const TriangleClassInfo& info = tri.triangleInfo(fc);
        if (info.boundary()) continue;
        int t1 = info.tet, f1 = info.face;
        const Gluing& gl = tri.gluing(t1, f1);
        int t2 = gl.tet, f2 = gl.face;
        for (int v = 0; v < 4; ++v) {
            if (v == f1) continue;
            int v2 = gl.perm[v];
            long n = arcCount(cx.counts[t1], f1, v);
            if (n != arcCount(cx.counts[t2], f2, v2))
                throw std::logic_error("arc counts disagree across a glued face");
            int xa = -1, xb = -1;
            for (int x = 0; x < 4; ++x)
                if (x != f1 && x != v) (xa < 0 ? xa : xb) = x;
            bool flip = gl.perm[xa] > gl.perm[xb];
            for (long d = 0; d < n; ++d) {
                long p1 = cx.pieceAt(t1, f1, v, d);
                long p2 = cx.pieceAt(t2, f2, v2, d);
                cx.sides.unite(int(p1 * 4 + f1), int(p2 * 4 + f2));
                cx.pieces.unite(int(p1), int(p2));
                int rel = -cx.sideDir(p1, f1) * cx.sideDir(p2, f2) * (flip ? -1 : 1);
                cx.adj[p1].push_back({p2, rel});
                cx.adj[p2].push_back({p1, rel});
                ++cx.interiorArcGluings;
                for (int x : {xa, xb}) {
                    long q1 = cx.cid(t1, kEdgeNum[v][x], posFromMin(cx.counts[t1], v, x, d));
                    long q2 = cx.cid(t2, kEdgeNum[v2][gl.perm[x]],
                                     posFromMin(cx.counts[t2], v2, gl.perm[x], d));
                    cx.corners.unite(int(q1), int(q2));
                }
            }
        }
    }
    return cx;
}

}  // namespace

const char* surfaceTypeName(SurfaceType t) {
    switch (t) {
        case SurfaceType::none: return "none";
        case SurfaceType::sphere: return "sphere";
        case SurfaceType::disc: return "disc";
        case SurfaceType::torus: return "torus";
        case SurfaceType::annulus: return "annulus";
        case SurfaceType::projectivePlane: return "projective plane";
        case SurfaceType::kleinBottle: return "Klein bottle";
        case SurfaceType::moebiusBand: return "Moebius band";
    }
    return "none";
}

SurfaceReport reconstructSurface(const Triangulation& tri, const NormalVector& vec) {
    SurfaceComplex cx = buildComplex(tri, vec);
    SurfaceReport rep;

    long V = 0, E = 0;
    for (long i = 0; i < cx.nCorners; ++i)
        if (cx.corners.find(int(i)) == i) ++V;
    for (long q = 0; q < cx.nPieces; ++q)
        for (int f = 0; f < 4; ++f) {
            if (cx.pieceType[q] < 4 && f == cx.pieceType[q]) continue;
            if (cx.sides.find(int(q * 4 + f)) == q * 4 + f) ++E;
        }
    rep.chi = V - E + cx.nPieces;

    // Independent recount: every point of the surface on an edge class is one
    // corner class, and interior side classes carry exactly two instances.
    long vAlt = 0;
    for (int ec = 0; ec < tri.edgeClassCount(); ++ec) {
        const EdgeClassInfo& info = tri.edgeInfo(ec);
        long n = crossCount(cx.counts[info.inc[0].first], info.inc[0].second);
        for (const auto& [t, e] : info.inc)
            if (crossCount(cx.counts[t], e) != n)
                throw std::logic_error("edge crossings disagree along an edge class");
        vAlt += n;
    }
    long eAlt = (cx.totalSideInstances + cx.boundarySideInstances) / 2;
    if (rep.chi != vAlt - eAlt + cx.nPieces)
        throw std::logic_error("surface cell structure is inconsistent");

    std::map<long, int> compOf;
    for (long q = 0; q < cx.nPieces; ++q) {
        long r = cx.pieces.find(int(q));
        compOf.emplace(r, int(compOf.size()));
    }
    rep.components = int(compOf.size());
    rep.connected = rep.components == 1;

    std::vector<char> compOrientable(rep.components, 1);
    {
        std::vector<int8_t> sign(cx.nPieces, 0);
        std::vector<long> stack;
        for (long s = 0; s < cx.nPieces; ++s) {
            if (sign[s]) continue;
            sign[s] = 1;
            stack.push_back(s);
            while (!stack.empty()) {
                long a = stack.back();
                stack.pop_back();
                for (const auto& [b, rel] : cx.adj[a]) {
                    int want = int8_t(rel * sign[a]);
                    if (!sign[b]) {
                        sign[b] = int8_t(want);
                        stack.push_back(b);
                    } else if (sign[b] != want) {
                        compOrientable[compOf.at(cx.pieces.find(int(a)))] = 0;
                    }
                }
            }
        }
    }
    rep.orientable = true;
    for (char o : compOrientable) rep.orientable = rep.orientable && o;

    bool anyQuad = false;
    for (const TetCounts& c : cx.counts) anyQuad = anyQuad || c.quad > 0;
    rep.vertexLinking = cx.nPieces > 0 && !anyQuad;

    // Boundary curves: unglued sides live on boundary faces; their endpoint
    // corner classes form a disjoint union of circles.
    BoundaryZ2 bz = boundaryH1Z2(tri);
    std::vector<std::vector<int>> cycleHit(tri.edgeClassCount());
    for (int i = 0; i < bz.dim; ++i)
        for (int ec : bz.cycles[i]) cycleHit[ec].push_back(i);

    DSU curveUF(int(cx.nCorners));
    std::map<long, std::pair<int, int>> cornerSlot;  // root -> (tet, edge)
    std::map<long, int> cornerDegree;
    for (int t = 0; t < tri.size(); ++t)
        for (int f = 0; f < 4; ++f) {
            if (!tri.boundaryFace(t, f)) continue;
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                int xa = -1, xb = -1;
                for (int x = 0; x < 4; ++x)
                    if (x != f && x != v) (xa < 0 ? xa : xb) = x;
                long n = arcCount(cx.counts[t], f, v);
                for (long d = 0; d < n; ++d) {
                    long qa = cx.corners.find(int(cx.cid(t, kEdgeNum[v][xa],
                                                         posFromMin(cx.counts[t], v, xa, d))));
                    long qb = cx.corners.find(int(cx.cid(t, kEdgeNum[v][xb],
                                                         posFromMin(cx.counts[t], v, xb, d))));
                    curveUF.unite(int(qa), int(qb));
                    cornerSlot.emplace(qa, std::make_pair(t, kEdgeNum[v][xa]));
                    cornerSlot.emplace(qb, std::make_pair(t, kEdgeNum[v][xb]));
                    ++cornerDegree[qa];
                    ++cornerDegree[qb];
                }
            }
        }
    for (const auto& [root, deg] : cornerDegree)
        if (deg != 2) throw std::logic_error("surface boundary is not a closed curve family");

    std::map<long, int> curveOf;
    for (const auto& [root, slot] : cornerSlot) {
        long cr = curveUF.find(int(root));
        if (!curveOf.count(cr)) curveOf.emplace(cr, int(curveOf.size()));
    }
    rep.boundaryCurveCount = int(curveOf.size());
    rep.boundaryClasses.assign(rep.boundaryCurveCount, std::vector<int>(bz.dim, 0));
    for (const auto& [root, slot] : cornerSlot) {
        int curve = curveOf.at(curveUF.find(int(root)));
        int ec = tri.edgeClass(slot.first, slot.second);
        for (int i : cycleHit[ec]) rep.boundaryClasses[curve][i] ^= 1;
    }

    if (rep.connected) {
        std::vector<int> total(bz.dim, 0);
        for (const auto& cls : rep.boundaryClasses)
            for (int i = 0; i < bz.dim; ++i) total[i] ^= cls[i];
        bool nonzero = false;
        for (int x : total) nonzero = nonzero || x;
        if (nonzero) rep.separating = false;
    }

    if (rep.connected && rep.chi >= 0) {
        if (rep.chi == 2) {
            rep.type = SurfaceType::sphere;
        } else if (rep.chi == 1) {
            rep.type = rep.boundaryCurveCount ? SurfaceType::disc : SurfaceType::projectivePlane;
        } else if (rep.chi == 0) {
            if (rep.boundaryCurveCount == 0)
                rep.type = rep.orientable ? SurfaceType::torus : SurfaceType::kleinBottle;
            else if (rep.boundaryCurveCount == 1)
                rep.type = SurfaceType::moebiusBand;
            else
                rep.type = SurfaceType::annulus;
        }
        bool ok = true;
        switch (rep.type) {
            case SurfaceType::sphere: ok = rep.boundaryCurveCount == 0 && rep.orientable; break;
            case SurfaceType::disc: ok = rep.boundaryCurveCount == 1 && rep.orientable; break;
            case SurfaceType::projectivePlane: ok = !rep.orientable; break;
            case SurfaceType::moebiusBand: ok = !rep.orientable; break;
            case SurfaceType::annulus: ok = rep.orientable && rep.boundaryCurveCount == 2; break;
            default: break;
        }
        if (!ok) throw std::logic_error("surface invariants disagree with its type");
    }
    return rep;
}

std::vector<NormalVector> splitComponents(const Triangulation& tri, const NormalVector& vec) {
    SurfaceComplex cx = buildComplex(tri, vec);
    std::map<long, int> compOf;
    for (long q = 0; q < cx.nPieces; ++q) {
        long r = cx.pieces.find(int(q));
        compOf.emplace(r, int(compOf.size()));
    }
    std::vector<NormalVector> out(compOf.size());
    for (auto& nv : out) {
        nv.system = CoordSystem::standard;
        nv.coords.assign(7 * tri.size(), 0);
    }
    for (long q = 0; q < cx.nPieces; ++q) {
        int comp = compOf.at(cx.pieces.find(int(q)));
        int t = cx.pieceTet[q];
        int ty = cx.pieceType[q];
        int idx = ty < 4 ? 7 * t + ty : 7 * t + 4 + cx.counts[t].quadType;
        out[comp].coords[idx] += 1;
    }
    std::sort(out.begin(), out.end(),
              [](const NormalVector& a, const NormalVector& b) { return a.coords < b.coords; });
    return out;
}

}  // namespace hyp3
