#include <hyp3/reduce.hpp>

#include <hyp3/homology.hpp>
#include <hyp3/moves.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace hyp3 {

namespace {

struct Slot {
    int tet, face;
    bool operator==(const Slot& o) const { return tet == o.tet && face == o.face; }
    bool operator<(const Slot& o) const {
        return tet != o.tet ? tet < o.tet : face < o.face;
    }
};

// Drop the given tetrahedra from the table, remapping indices. All gluing
// entries must already avoid the dropped tetrahedra.
Triangulation compact(const std::vector<std::array<Gluing, 4>>& tbl,
                      std::vector<int> removed) {
    std::sort(removed.begin(), removed.end());
    std::vector<int> map(tbl.size());
    int next = 0;
    for (int t = 0; t < int(tbl.size()); ++t)
        map[t] = std::binary_search(removed.begin(), removed.end(), t) ? -1 : next++;
    std::vector<std::array<Gluing, 4>> out(next);
    for (int t = 0; t < int(tbl.size()); ++t) {
        if (map[t] < 0) continue;
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tbl[t][f];
            if (!g.glued()) continue;
            out[map[t]][f] = {map[g.tet], g.face, g.perm};
        }
    }
    return Triangulation(std::move(out));
}

// Cheap necessary conditions for "same manifold", applied after risky moves.
bool sameShape(const Triangulation& a, const Triangulation& b, bool checkH1) {
    if (a.orientable() != b.orientable()) return false;
    if (a.connected() != b.connected()) return false;
    if (a.idealVertexCount() != b.idealVertexCount()) return false;
    if (a.eulerCharacteristic() != b.eulerCharacteristic()) return false;
    if (a.boundaryComponentCount() != b.boundaryComponentCount()) return false;
    std::multiset<std::pair<int, bool>> sa, sb;
    for (int i = 0; i < a.boundaryComponentCount(); ++i) {
        const auto& bc = a.boundaryComponent(i);
        sa.insert({bc.chi(), bc.orientableSurface});
    }
    for (int i = 0; i < b.boundaryComponentCount(); ++i) {
        const auto& bc = b.boundaryComponent(i);
        sb.insert({bc.chi(), bc.orientableSurface});
    }
    if (sa != sb) return false;
    if (checkH1 && !(homologyH1(a) == homologyH1(b))) return false;
    return true;
}

// Directed endpoints of an edge walk, replayed step by step. Entry i holds
// the labels of the walk's directed edge inside walk[i].tet.
std::vector<std::pair<int, int>> walkEndpoints(const Triangulation& tri,
                                               const EdgeClassInfo& info) {
    std::vector<std::pair<int, int>> out;
    int a = kEdgeVerts[info.walk[0].edge][0], b = kEdgeVerts[info.walk[0].edge][1];
    for (const EdgeStep& st : info.walk) {
        out.push_back({a, b});
        const Gluing& g = tri.gluing(st.tet, st.fout);
        if (!g.glued()) break;
        a = g.perm[a];
        b = g.perm[b];
    }
    return out;
}

}  // namespace

std::optional<Triangulation> tryThreeTwo(const Triangulation& tri, int ec) {
    const EdgeClassInfo& info = tri.edgeInfo(ec);
    if (info.boundary || info.degree() != 3) return std::nullopt;
    const auto& w = info.walk;
    int t0 = w[0].tet, t1 = w[1].tet, t2 = w[2].tet;
    if (t0 == t1 || t0 == t2 || t1 == t2) return std::nullopt;
    auto ends = walkEndpoints(tri, info);

    // New tetrahedra: A (labels 0,1,2 = equator, 3 = the N endpoint) and B
    // (same equator, 3 = S); the equator vertex u_i is labelled fout in
    // walk[i] and fin in walk[i+1].
    int n = tri.size();
    int removedArr[3] = {t0, t1, t2};
    auto isRemoved = [&](int t) { return t == t0 || t == t1 || t == t2; };

    struct Home {
        int tet, face;
        Perm4 map;  // old labels -> new labels
    };
    std::map<Slot, Home> home;
    int A = 0, B = 1;  // positions among the fresh tets
    for (int i = 0; i < 3; ++i) {
        int N = ends[i].first, S = ends[i].second;
        int ui = w[i].fout, un = w[i].fin;  // u_i and u_{i+1} as labels here
        std::array<int, 4> hA{}, hB{};
        hA[N] = 3, hA[ui] = i, hA[un] = (i + 1) % 3, hA[S] = (i + 2) % 3;
        hB[S] = 3, hB[ui] = i, hB[un] = (i + 1) % 3, hB[N] = (i + 2) % 3;
        home[{w[i].tet, S}] = {A, (i + 2) % 3, Perm4(hA[0], hA[1], hA[2], hA[3])};
        home[{w[i].tet, N}] = {B, (i + 2) % 3, Perm4(hB[0], hB[1], hB[2], hB[3])};
    }

    auto tbl = tri.gluingTable();
    tbl.push_back({});
    tbl.push_back({});
    int baseA = n, baseB = n + 1;
    auto newTet = [&](int pos) { return pos == A ? baseA : baseB; };
    tbl[baseA][3] = {baseB, 3, Perm4(0, 1, 2, 3)};
    tbl[baseB][3] = {baseA, 3, Perm4(0, 1, 2, 3)};

    // Rewire each external slot into its home.
    for (const auto& [slot, h] : home) {
        const Gluing& g = tri.gluing(slot.tet, slot.face);
        if (!g.glued()) continue;
        if (!isRemoved(g.tet)) {
            Perm4 toNew = g.perm.inverse().then(h.map);
            tbl[g.tet][g.face] = {newTet(h.tet), h.face, toNew};
            tbl[newTet(h.tet)][h.face] = {g.tet, g.face, toNew.inverse()};
        } else {
            auto it = home.find({g.tet, g.face});
            if (it == home.end()) return std::nullopt;  // glued into a flank: impossible
            const Home& h2 = it->second;
            Perm4 p = h.map.inverse().then(g.perm).then(h2.map);
            tbl[newTet(h.tet)][h.face] = {newTet(h2.tet), h2.face, p};
        }
    }

    try {
        Triangulation out =
            compact(tbl, std::vector<int>(removedArr, removedArr + 3));
        if (!sameShape(tri, out, false)) return std::nullopt;
        return out;
    } catch (const TriError&) {
        return std::nullopt;
    }
}

std::optional<Triangulation> tryTwoZeroEdge(const Triangulation& tri, int ec) {
    const EdgeClassInfo& info = tri.edgeInfo(ec);
    if (info.boundary || info.degree() != 2) return std::nullopt;
    const auto& w = info.walk;
    int t0 = w[0].tet, t1 = w[1].tet;
    if (t0 == t1) return std::nullopt;
    // The equator edges of the pillow must be distinct edge classes, not both
    // on the boundary (the collapse identifies them).
    int eq0 = kEdgeNum[w[0].fin][w[0].fout], eq1 = kEdgeNum[w[1].fin][w[1].fout];
    int ce0 = tri.edgeClass(t0, eq0), ce1 = tri.edgeClass(t1, eq1);
    if (ce0 == ce1) return std::nullopt;
    if (tri.edgeInfo(ce0).boundary && tri.edgeInfo(ce1).boundary) return std::nullopt;
    auto ends = walkEndpoints(tri, info);
    int N0 = ends[0].first, S0 = ends[0].second;
    int N1 = ends[1].first, S1 = ends[1].second;
    std::array<int, 4> r{};
    r[N0] = N1, r[S0] = S1, r[w[0].fout] = w[1].fin, r[w[0].fin] = w[1].fout;
    Perm4 rho(r[0], r[1], r[2], r[3]);

    std::set<Slot> ext{{t0, N0}, {t0, S0}, {t1, N1}, {t1, S1}};
    int gluedCount = 0;
    for (const Slot& s : ext) {
        const Gluing& g = tri.gluing(s.tet, s.face);
        if (!g.glued()) continue;
        ++gluedCount;
        if (ext.count({g.tet, g.face})) return std::nullopt;
    }
    if (gluedCount == 0) return std::nullopt;

    auto tbl = tri.gluingTable();
    auto rewire = [&](int fA, int fB) {
        const Gluing gA = tri.gluing(t0, fA), gB = tri.gluing(t1, fB);
        if (gA.glued() && gB.glued()) {
            Perm4 p = gA.perm.inverse().then(rho).then(gB.perm);
            tbl[gA.tet][gA.face] = {gB.tet, gB.face, p};
            tbl[gB.tet][gB.face] = {gA.tet, gA.face, p.inverse()};
        } else if (gA.glued()) {
            tbl[gA.tet][gA.face] = {};
        } else if (gB.glued()) {
            tbl[gB.tet][gB.face] = {};
        }
    };
    rewire(S0, S1);
    rewire(N0, N1);

    try {
        Triangulation out = compact(tbl, {t0, t1});
        if (!sameShape(tri, out, true)) return std::nullopt;
        return out;
    } catch (const TriError&) {
        return std::nullopt;
    }
}

std::optional<Triangulation> tryTwoZeroVertex(const Triangulation& tri, int vc) {
    const VertexClassInfo& info = tri.vertexInfo(vc);
    if (info.inc.size() != 2 || !info.linkClosed || info.linkChi != 2) return std::nullopt;
    auto [t0, v0] = info.inc[0];
    auto [t1, v1] = info.inc[1];
    if (t0 == t1) return std::nullopt;
    // The three corner faces at v0 must be glued straight across to t1's
    // corner faces at v1, inducing a single consistent label map.
    std::array<int, 4> r{};
    std::array<bool, 4> set{};
    for (int f = 0; f < 4; ++f) {
        if (f == v0) continue;
        const Gluing& g = tri.gluing(t0, f);
        if (!g.glued() || g.tet != t1 || g.perm[v0] != v1) return std::nullopt;
        for (int l = 0; l < 4; ++l) {
            if (l == f || l == v0) continue;
            if (set[l] && r[l] != g.perm[l]) return std::nullopt;
            r[l] = g.perm[l];
            set[l] = true;
        }
    }
    r[v0] = v1;
    Perm4 rho(r[0], r[1], r[2], r[3]);

    const Gluing g0 = tri.gluing(t0, v0), g1 = tri.gluing(t1, v1);
    if (g0.glued() && g0.tet == t1 && g0.face == v1) return std::nullopt;
    if (!g0.glued() && !g1.glued()) return std::nullopt;

    auto tbl = tri.gluingTable();
    if (g0.glued() && g1.glued()) {
        Perm4 p = g0.perm.inverse().then(rho).then(g1.perm);
        tbl[g0.tet][g0.face] = {g1.tet, g1.face, p};
        tbl[g1.tet][g1.face] = {g0.tet, g0.face, p.inverse()};
    } else if (g0.glued()) {
        tbl[g0.tet][g0.face] = {};
    } else {
        tbl[g1.tet][g1.face] = {};
    }

    try {
        Triangulation out = compact(tbl, {t0, t1});
        if (!sameShape(tri, out, true)) return std::nullopt;
        return out;
    } catch (const TriError&) {
        return std::nullopt;
    }
}

std::optional<Triangulation> tryTwoThree(const Triangulation& tri, int fc) {
    const TriangleClassInfo& info = tri.triangleInfo(fc);
    if (info.boundary() || info.tet == info.tet2) return std::nullopt;
    int tA = info.tet, fA = info.face, tB = info.tet2, fB = info.face2;
    Perm4 g = tri.gluing(tA, fA).perm;
    int u[3], k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != fA) u[k++] = v;

    // Replace the pair by three tetrahedra around a fresh N-S axis, where N
    // is the apex of tA over the shared face and S the apex of tB. New tet i
    // is labelled (0,1,2,3) = (N, S, u_i, u_{i+1}).
    int n = tri.size();
    auto tbl = tri.gluingTable();
    for (int i = 0; i < 3; ++i) tbl.push_back({});
    for (int i = 0; i < 3; ++i) {
        tbl[n + i][2] = {n + (i + 1) % 3, 3, Perm4(0, 1, 3, 2)};
        tbl[n + (i + 1) % 3][3] = {n + i, 2, Perm4(0, 1, 3, 2)};
    }

    struct Home {
        int tet, face;
        Perm4 map;  // old labels -> new labels
    };
    std::map<Slot, Home> home;
    for (int i = 0; i < 3; ++i) {
        int ip = (i + 1) % 3, iq = (i + 2) % 3;
        std::array<int, 4> hA{}, hB{};
        hA[fA] = 0, hA[u[ip]] = 2, hA[u[iq]] = 3, hA[u[i]] = 1;
        hB[fB] = 1, hB[g[u[ip]]] = 2, hB[g[u[iq]]] = 3, hB[g[u[i]]] = 0;
        home[{tA, u[i]}] = {n + ip, 1, Perm4(hA[0], hA[1], hA[2], hA[3])};
        home[{tB, g[u[i]]}] = {n + ip, 0, Perm4(hB[0], hB[1], hB[2], hB[3])};
    }

    for (const auto& [slot, h] : home) {
        const Gluing& gl = tri.gluing(slot.tet, slot.face);
        if (!gl.glued()) continue;
        if (gl.tet != tA && gl.tet != tB) {
            Perm4 toNew = gl.perm.inverse().then(h.map);
            tbl[gl.tet][gl.face] = {h.tet, h.face, toNew};
            tbl[h.tet][h.face] = {gl.tet, gl.face, toNew.inverse()};
        } else {
            auto it = home.find({gl.tet, gl.face});
            if (it == home.end()) return std::nullopt;
            const Home& h2 = it->second;
            Perm4 p = h.map.inverse().then(gl.perm).then(h2.map);
            tbl[h.tet][h.face] = {h2.tet, h2.face, p};
        }
    }

    try {
        Triangulation out = compact(tbl, {tA, tB});
        if (!sameShape(tri, out, false)) return std::nullopt;
        return out;
    } catch (const TriError&) {
        return std::nullopt;
    }
}

std::optional<Triangulation> tryShellTetrahedron(const Triangulation& tri, int t) {
    int glued[4];
    int ng = 0;
    for (int f = 0; f < 4; ++f)
        if (!tri.boundaryFace(t, f)) glued[ng++] = f;
    if (ng != 1 && ng != 2) return std::nullopt;
    for (int i = 0; i < ng; ++i)
        if (tri.gluing(t, glued[i]).tet == t) return std::nullopt;
    if (ng == 2) {
        // The edge shared by the two glued faces must be internal.
        int a = -1, b = -1;
        for (int v = 0; v < 4; ++v)
            if (v != glued[0] && v != glued[1]) (a < 0 ? a : b) = v;
        if (tri.edgeInfo(tri.edgeClass(t, kEdgeNum[a][b])).boundary) return std::nullopt;
    }
    auto tbl = tri.gluingTable();
    for (int i = 0; i < ng; ++i) {
        const Gluing& g = tri.gluing(t, glued[i]);
        tbl[g.tet][g.face] = {};
    }
    try {
        Triangulation out = compact(tbl, {t});
        if (!sameShape(tri, out, false)) return std::nullopt;
        return out;
    } catch (const TriError&) {
        return std::nullopt;
    }
}

namespace {

// Greedy descent: strictly size- or boundary-decreasing moves only.
Triangulation descend(Triangulation cur, const ReduceOptions& opt, int& rounds) {
    while (true) {
        if (++rounds > opt.maxRounds) throw ResourceError("reduction round budget exceeded");
        bool progress = false;
        for (int vc = 0; vc < cur.vertexClassCount() && !progress; ++vc)
            if (auto r = tryTwoZeroVertex(cur, vc)) {
                cur = std::move(*r);
                progress = true;
            }
        for (int ec = 0; ec < cur.edgeClassCount() && !progress; ++ec)
            if (auto r = tryTwoZeroEdge(cur, ec)) {
                cur = std::move(*r);
                progress = true;
            }
        for (int ec = 0; ec < cur.edgeClassCount() && !progress; ++ec)
            if (auto r = tryThreeTwo(cur, ec)) {
                cur = std::move(*r);
                progress = true;
            }
        for (int t = 0; t < cur.size() && !progress; ++t)
            if (auto r = tryShellTetrahedron(cur, t)) {
                cur = std::move(*r);
                progress = true;
            }
        if (!progress && opt.boundaryFolds) {
            for (int ec = 0; ec < cur.edgeClassCount() && !progress; ++ec) {
                if (!cur.edgeInfo(ec).boundary || !foldIsSafe(cur, ec)) continue;
                try {
                    Triangulation folded = foldAlongEdge(cur, ec);
                    if (!sameShape(cur, folded, true)) continue;
                    cur = std::move(folded);
                    progress = true;
                } catch (const TriError&) {
                }
            }
        }
        if (!progress) break;
    }
    return cur;
}

}  // namespace

Triangulation reduceTriangulation(const Triangulation& tri, const ReduceOptions& opt) {
    int rounds = 0;
    Triangulation cur = descend(tri, opt, rounds);
    if (!opt.uphill) return cur;
    // Escape local minima by a bounded walk: a 2-3 excursion followed by
    // fresh descent, accepting any non-increasing result. A 2-3 lowers the
    // degree of the shared face's three edges, so stuck degree-4 edges open
    // up; the excursion's own central edge sorts last and is tried last.
    // Folds are left to the final polish, they never change the tet count.
    ReduceOptions inner = opt;
    inner.boundaryFolds = false;
    std::mt19937 rng(20240915);
    int stale = 0;
    while (stale < opt.uphillAttempts) {
        std::optional<Triangulation> up;
        for (int draw = 0; draw < 4 * cur.triangleClassCount() && !up; ++draw)
            up = tryTwoThree(cur, int(rng() % cur.triangleClassCount()));
        if (!up) break;
        Triangulation cand = descend(std::move(*up), inner, rounds);
        if (cand.size() < cur.size()) {
            cur = std::move(cand);
            stale = 0;
        } else {
            if (cand.size() == cur.size()) cur = std::move(cand);
            ++stale;
        }
    }
    return descend(std::move(cur), opt, rounds);
}

}  // namespace hyp3
