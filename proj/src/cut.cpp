#include <hyp3/surface.hpp>

#include "normal_detail.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

// Cutting along a normal surface, by the parallelity-region subdivision.
//
// Fixed per-tetrahedron template. The normal discs of one tetrahedron slice
// it into cells:
//   - a corner cell at each vertex v with tri[v] > 0 (vertex side of the
//     innermost triangle copy);
//   - a prism between consecutive triangle copies of the same corner;
//   - a prism between consecutive quad copies;
//   - with quads: two central cells, one on each side of the quad stack,
//     the near one containing edge kEdgeVerts[quadType] and bounded by
//     quad copy 0, the far one bounded by the last copy;
//   - without quads: one central cell bounded by all outermost triangles.
// Cell walls are normal discs and face pieces. The pieces of a face, per
// corner v with n arcs cutting it: the innermost triangle at v, n-1 strips
// between consecutive arcs, and one central piece per face. Every wall is a
// polygon with at most six corners (tetrahedron vertices and surface points
// on edges); each polygon is triangulated by fanning from its first corner
// in a frame fixed per wall (the face-class representative's frame for face
// pieces), so both sides of a glued face subdivide identically. Each cell is
// then coned from an interior centre point: one small tetrahedron per wall
// triangle. Cone tetrahedra are glued across face pieces of glued faces and
// across shared wall triangles inside a cell, but never across a normal
// disc: the two cells adjacent to a disc keep their copies as boundary,
// which realizes the path-metric completion with two copies of the surface.
namespace hyp3 {

namespace {

using detail::arcCount;
using detail::crossCount;
using detail::DSU;
using detail::TetCounts;

constexpr long kMaxCutPieces = 100000;
constexpr long kMaxCutTets = 1500000;

struct Corner {
    bool vertex;
    int v, x;  // vertex label v; for edge points the edge (v,x), distance d from v
    long d;
};

Corner vertexCorner(int v) { return {true, v, 0, 0}; }
Corner edgeCorner(int v, int x, long d) { return {false, v, x, d}; }

bool inPair(int v, int edge) { return v == kEdgeVerts[edge][0] || v == kEdgeVerts[edge][1]; }

// Local subdivision points of one tetrahedron: 0..3 the vertices, then the
// surface points grouped by edge. Cell centres are appended afterwards.
struct TetFrame {
    const TetCounts* c = nullptr;
    long epBase[6] = {0, 0, 0, 0, 0, 0};
    long nGeom = 4;

    void init(const TetCounts& counts) {
        c = &counts;
        long at = 4;
        for (int e = 0; e < 6; ++e) {
            epBase[e] = at;
            at += crossCount(counts, e);
        }
        nGeom = at;
    }
    long point(const Corner& q, const Perm4& phi) const {
        if (q.vertex) return phi[q.v];
        int v = phi[q.v], x = phi[q.x];
        int e = kEdgeNum[v][x];
        long pos = v < x ? q.d : crossCount(*c, e) - 1 - q.d;
        return epBase[e] + pos;
    }
};

// Walls of one face in the frame of its class representative: per corner v
// of the face (ascending) the innermost piece and the strips, then the
// central piece last.
std::vector<std::vector<Corner>> faceWallPolys(const TetCounts& c, int f) {
    std::vector<std::vector<Corner>> out;
    int vs[3];
    int m = 0;
    for (int v = 0; v < 4; ++v)
        if (v != f) vs[m++] = v;
    for (int vi = 0; vi < 3; ++vi) {
        int v = vs[vi];
        int xa = vs[(vi + 1) % 3], xb = vs[(vi + 2) % 3];
        if (xa > xb) std::swap(xa, xb);
        long n = arcCount(c, f, v);
        for (long i = 0; i < n; ++i) {
            if (i == 0)
                out.push_back({vertexCorner(v), edgeCorner(v, xa, 0), edgeCorner(v, xb, 0)});
            else
                out.push_back({edgeCorner(v, xa, i - 1), edgeCorner(v, xb, i - 1),
                               edgeCorner(v, xb, i), edgeCorner(v, xa, i)});
        }
    }
    std::vector<Corner> central;
    for (int vi = 0; vi < 3; ++vi) {
        int v = vs[vi], vp = vs[(vi + 2) % 3], vn = vs[(vi + 1) % 3];
        long n = arcCount(c, f, v);
        if (n == 0) {
            central.push_back(vertexCorner(v));
        } else {
            central.push_back(edgeCorner(v, vp, n - 1));
            central.push_back(edgeCorner(v, vn, n - 1));
        }
    }
    out.push_back(central);
    return out;
}

std::vector<Corner> triDiscPoly(int v, long i) {
    std::vector<Corner> out;
    for (int x = 0; x < 4; ++x)
        if (x != v) out.push_back(edgeCorner(v, x, i));
    return out;
}

std::vector<Corner> quadDiscPoly(const TetCounts& c, long j) {
    int k = c.quadType;
    int e0 = kEdgeVerts[k][0], e1 = kEdgeVerts[k][1];
    int o0 = kEdgeVerts[5 - k][0], o1 = kEdgeVerts[5 - k][1];
    return {edgeCorner(e0, o0, c.tri[e0] + j), edgeCorner(e0, o1, c.tri[e0] + j),
            edgeCorner(e1, o1, c.tri[e1] + j), edgeCorner(e1, o0, c.tri[e1] + j)};
}

// Rep-frame wall position inside a face's wall list.
struct SlotMap {
    int fc = -1;
    Perm4 phi;     // representative frame -> this slot's frame
    Perm4 phiInv;  // slot frame -> representative frame
    long base[4] = {0, 0, 0, 0};  // indexed by rep-frame corner label
    long central = 0;
};

}  // namespace

std::vector<Triangulation> cutAlong(const Triangulation& tri, const NormalVector& vec) {
    std::vector<TetCounts> counts = detail::pieceCounts(tri, vec, kMaxCutPieces);
    int T = tri.size();
    std::vector<TetFrame> frames(T);
    for (int t = 0; t < T; ++t) frames[t].init(counts[t]);

    std::vector<long> discBase(T + 1, 0);
    for (int t = 0; t < T; ++t) {
        const TetCounts& c = counts[t];
        discBase[t + 1] = discBase[t] + c.tri[0] + c.tri[1] + c.tri[2] + c.tri[3] + c.quad;
    }
    auto discWallId = [&](int t, int ty, long copy) {
        long off = 0;
        for (int u = 0; u < ty && u < 4; ++u) off += counts[t].tri[u];
        return discBase[t] + off + copy;
    };

    int nFc = tri.triangleClassCount();
    std::vector<std::vector<std::vector<Corner>>> facePolys(nFc);
    std::vector<long> faceBase(nFc + 1, 0);
    for (int fc = 0; fc < nFc; ++fc) {
        const TriangleClassInfo& info = tri.triangleInfo(fc);
        facePolys[fc] = faceWallPolys(counts[info.tet], info.face);
        faceBase[fc + 1] = faceBase[fc] + long(facePolys[fc].size());
    }
    long nWalls = discBase[T] + faceBase[nFc];

    std::vector<std::array<SlotMap, 4>> slots(T);
    for (int t = 0; t < T; ++t)
        for (int f = 0; f < 4; ++f) {
            SlotMap& sm = slots[t][f];
            sm.fc = tri.triangleClass(t, f);
            const TriangleClassInfo& info = tri.triangleInfo(sm.fc);
            if (info.tet == t && info.face == f)
                sm.phi = Perm4();
            else
                sm.phi = tri.gluing(info.tet, info.face).perm;
            sm.phiInv = sm.phi.inverse();
            long at = 0;
            for (int v0 = 0; v0 < 4; ++v0) {
                if (v0 == info.face) continue;
                sm.base[v0] = at;
                at += arcCount(counts[info.tet], info.face, v0);
            }
            sm.central = at;
        }

    // Cells, walls instantiated in tet-local points, and cone tetrahedra.
    long nSmall = 0;
    std::vector<std::array<long, 4>> pts;                // local point per slot, [0] = centre
    std::vector<std::array<Gluing, 4>> glu;              // built incrementally
    std::vector<std::vector<std::vector<long>>> inst(nWalls);  // wall -> instances -> tets

    for (int t = 0; t < T; ++t) {
        const TetCounts& c = counts[t];
        int k = c.quadType;
        long centreNext = frames[t].nGeom;

        struct Wall {
            long id;
            std::vector<long> poly;
        };
        std::vector<std::vector<Wall>> cells;

        auto instantiate = [&](const std::vector<Corner>& poly, const Perm4& phi) {
            std::vector<long> out;
            out.reserve(poly.size());
            for (const Corner& q : poly) out.push_back(frames[t].point(q, phi));
            return out;
        };
        auto disc = [&](int ty, long copy) {
            std::vector<Corner> poly = ty < 4 ? triDiscPoly(ty, copy) : quadDiscPoly(c, copy);
            return Wall{discWallId(t, ty, copy), instantiate(poly, Perm4())};
        };
        auto facePiece = [&](int f, int vSlot, long i) {
            const SlotMap& sm = slots[t][f];
            long idx = vSlot < 0 ? sm.central : sm.base[sm.phiInv[vSlot]] + i;
            return Wall{discBase[T] + faceBase[sm.fc] + idx,
                        instantiate(facePolys[sm.fc][idx], sm.phi)};
        };

        for (int v = 0; v < 4; ++v) {
            if (c.tri[v] == 0) continue;
            std::vector<Wall> corner{disc(v, 0)};
            for (int f = 0; f < 4; ++f)
                if (f != v) corner.push_back(facePiece(f, v, 0));
            cells.push_back(std::move(corner));
            for (long i = 0; i + 1 < c.tri[v]; ++i) {
                std::vector<Wall> prism{disc(v, i), disc(v, i + 1)};
                for (int f = 0; f < 4; ++f)
                    if (f != v) prism.push_back(facePiece(f, v, i + 1));
                cells.push_back(std::move(prism));
            }
        }
        if (k >= 0) {
            int low0 = kEdgeVerts[k][0], low1 = kEdgeVerts[k][1];
            int hi0 = kEdgeVerts[5 - k][0], hi1 = kEdgeVerts[5 - k][1];
            auto quadCut = [&](int f) {
                if (f == low0) return low1;
                if (f == low1) return low0;
                return f == hi0 ? hi1 : hi0;
            };
            for (long j = 0; j + 1 < c.quad; ++j) {
                std::vector<Wall> prism{disc(4, j), disc(4, j + 1)};
                for (int f = 0; f < 4; ++f) {
                    int v = quadCut(f);
                    long i = c.tri[v] + (inPair(v, k) ? j + 1 : c.quad - 1 - j);
                    prism.push_back(facePiece(f, v, i));
                }
                cells.push_back(std::move(prism));
            }
            std::vector<Wall> nearCell{disc(4, 0)};
            for (int v : {low0, low1})
                if (c.tri[v] > 0) nearCell.push_back(disc(v, c.tri[v] - 1));
            nearCell.push_back(facePiece(low0, low1, c.tri[low1]));
            nearCell.push_back(facePiece(low1, low0, c.tri[low0]));
            nearCell.push_back(facePiece(hi0, -1, 0));
            nearCell.push_back(facePiece(hi1, -1, 0));
            cells.push_back(std::move(nearCell));
            std::vector<Wall> farCell{disc(4, c.quad - 1)};
            for (int v : {hi0, hi1})
                if (c.tri[v] > 0) farCell.push_back(disc(v, c.tri[v] - 1));
            farCell.push_back(facePiece(hi0, hi1, c.tri[hi1]));
            farCell.push_back(facePiece(hi1, hi0, c.tri[hi0]));
            farCell.push_back(facePiece(low0, -1, 0));
            farCell.push_back(facePiece(low1, -1, 0));
            cells.push_back(std::move(farCell));
        } else {
            std::vector<Wall> central;
            for (int v = 0; v < 4; ++v)
                if (c.tri[v] > 0) central.push_back(disc(v, c.tri[v] - 1));
            for (int f = 0; f < 4; ++f) central.push_back(facePiece(f, -1, 0));
            cells.push_back(std::move(central));
        }

        for (const std::vector<Wall>& cell : cells) {
            long centre = centreNext++;
            std::map<std::pair<long, long>, std::vector<std::pair<long, int>>> edges;
            for (const Wall& w : cell) {
                std::vector<long> tets;
                for (size_t i = 1; i + 1 < w.poly.size(); ++i) {
                    if (nSmall >= kMaxCutTets) throw ResourceError("cut complex too large");
                    long id = nSmall++;
                    pts.push_back({centre, w.poly[0], w.poly[i], w.poly[i + 1]});
                    glu.push_back({});
                    tets.push_back(id);
                    auto addEdge = [&](long a, long b, int face) {
                        edges[{std::min(a, b), std::max(a, b)}].push_back({id, face});
                    };
                    addEdge(w.poly[i], w.poly[i + 1], 1);
                    addEdge(w.poly[0], w.poly[i + 1], 2);
                    addEdge(w.poly[0], w.poly[i], 3);
                }
                inst[w.id].push_back(std::move(tets));
            }
            for (const auto& [key, ends] : edges) {
                if (ends.size() != 2)
                    throw std::logic_error("cell boundary edge not shared by two triangles");
                auto [ta, fa] = ends[0];
                auto [tb, fb] = ends[1];
                int img[4] = {-1, -1, -1, -1};
                img[fa] = fb;
                for (int s = 0; s < 4; ++s) {
                    if (s == fa) continue;
                    for (int u = 0; u < 4; ++u)
                        if (pts[tb][u] == pts[ta][s] && u != fb) img[s] = u;
                }
                if (img[0] < 0 || img[1] < 0 || img[2] < 0 || img[3] < 0)
                    throw std::logic_error("cone faces do not share their wall edge");
                Perm4 p(img[0], img[1], img[2], img[3]);
                glu[ta][fa] = {int(tb), fb, p};
                glu[tb][fb] = {int(ta), fa, p.inverse()};
            }
        }
    }

    for (long w = 0; w < nWalls; ++w) {
        size_t expect = 2;
        if (w >= discBase[T]) {
            int fc = int(std::upper_bound(faceBase.begin(), faceBase.end(), w - discBase[T]) -
                         faceBase.begin()) -
                     1;
            if (tri.triangleInfo(fc).boundary()) expect = 1;
        }
        if (inst[w].size() != expect)
            throw std::logic_error("wall instantiated the wrong number of times");
        if (w < discBase[T] || expect == 1) continue;  // discs stay cut open
        const auto& a = inst[w][0];
        const auto& b = inst[w][1];
        for (size_t i = 0; i < a.size(); ++i) {
            glu[a[i]][0] = {int(b[i]), 0, Perm4()};
            glu[b[i]][0] = {int(a[i]), 0, Perm4()};
        }
    }

    Triangulation whole(glu);  // validates the assembled complex
    if (whole.size() != int(nSmall)) throw std::logic_error("cut complex lost tetrahedra");

    DSU comp{int(nSmall)};
    for (long s = 0; s < nSmall; ++s)
        for (int f = 0; f < 4; ++f)
            if (glu[s][f].glued()) comp.unite(int(s), glu[s][f].tet);
    std::map<int, int> compIdx;
    for (long s = 0; s < nSmall; ++s) {
        int r = comp.find(int(s));
        compIdx.emplace(r, int(compIdx.size()));
    }
    std::vector<std::vector<long>> members(compIdx.size());
    std::vector<long> newIdx(nSmall);
    for (long s = 0; s < nSmall; ++s) {
        int ci = compIdx.at(comp.find(int(s)));
        newIdx[s] = long(members[ci].size());
        members[ci].push_back(s);
    }
    std::vector<Triangulation> out;
    for (const std::vector<long>& tets : members) {
        std::vector<std::array<Gluing, 4>> sub(tets.size());
        for (size_t i = 0; i < tets.size(); ++i)
            for (int f = 0; f < 4; ++f) {
                const Gluing& g = glu[tets[i]][f];
                if (g.glued()) sub[i][f] = {int(newIdx[g.tet]), g.face, g.perm};
            }
        out.emplace_back(std::move(sub));
    }
    return out;
}

bool isSeparating(const Triangulation& tri, const NormalVector& vec) {
    SurfaceReport rep = reconstructSurface(tri, vec);
    if (rep.components != 1) throw TriError("isSeparating needs a connected surface");
    if (rep.separating) return *rep.separating;
    return cutAlong(tri, vec).size() >= 2;
}

}  // namespace hyp3
