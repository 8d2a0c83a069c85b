#include <hyp3/triangulation.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hyp3 {

namespace {

struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) {
            p[x] = p[p[x]];
            x = p[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[b] = a;
    }
};

// Sign of the bijection sending the three corners src[i] to img[i], measured
// against ascending label order on both sides.
int cornerSign(std::array<int, 3> src, std::array<int, 3> img) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (src[j] < src[i]) {
                std::swap(src[i], src[j]);
                std::swap(img[i], img[j]);
            }
    int s = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (img[j] < img[i]) s = -s;
    return s;
}

int dirIdx(int a, int b) { return a * 4 + b; }

std::string slotName(int t, int f) { return "tet " + std::to_string(t) + " face " + std::to_string(f); }

}  // namespace

Triangulation::Triangulation(std::vector<std::array<Gluing, 4>> gluings) : glu_(std::move(gluings)) {
    validateStructure();
    buildSkeleton();
}

void Triangulation::validateStructure() const {
    int n = size();
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = glu_[t][f];
            if (!g.glued()) continue;
            if (g.tet >= n || g.face < 0 || g.face > 3)
                throw TriError("gluing target out of range at " + slotName(t, f));
            if (g.perm[f] != g.face)
                throw TriError("gluing permutation does not carry face to face at " + slotName(t, f));
            if (g.tet == t && g.face == f) throw TriError("face glued to itself at " + slotName(t, f));
            const Gluing& h = glu_[g.tet][g.face];
            if (!h.glued() || h.tet != t || h.face != f || !(h.perm == g.perm.inverse()))
                throw TriError("gluing not involutive at " + slotName(t, f));
        }
}

void Triangulation::buildSkeleton() {
    int n = size();
    vertClass_.assign(n, {-1, -1, -1, -1});
    edgeClass_.assign(n, {-1, -1, -1, -1, -1, -1});
    triClass_.assign(n, {-1, -1, -1, -1});
    edgeOrient_.assign(n, {0, 0, 0, 0, 0, 0});
    bdryOf_.assign(n, {-1, -1, -1, -1});
    tetOrient_.assign(n, 0);
    verts_.clear();
    edges_.clear();
    tris_.clear();
    bdry_.clear();
    orientable_ = true;
    connected_ = true;
    idealVertexCount_ = 0;
    boundaryFaceCount_ = 0;
    if (n == 0) return;

    // Connectivity of the gluing graph.
    {
        DSU d(n);
        for (int t = 0; t < n; ++t)
            for (int f = 0; f < 4; ++f)
                if (glu_[t][f].glued()) d.unite(t, glu_[t][f].tet);
        int root = d.find(0);
        for (int t = 1; t < n; ++t)
            if (d.find(t) != root) connected_ = false;
    }

    // Orientability: 2-colour tetrahedra, flipping across odd gluings.
    {
        std::vector<int> stack;
        for (int s = 0; s < n; ++s) {
            if (tetOrient_[s] != 0) continue;
            tetOrient_[s] = 1;
            stack.push_back(s);
            while (!stack.empty()) {
                int t = stack.back();
                stack.pop_back();
                for (int f = 0; f < 4; ++f) {
                    const Gluing& g = glu_[t][f];
                    if (!g.glued()) continue;
                    int want = -tetOrient_[t] * g.perm.sign();
                    if (tetOrient_[g.tet] == 0) {
                        tetOrient_[g.tet] = want;
                        stack.push_back(g.tet);
                    } else if (tetOrient_[g.tet] != want) {
                        orientable_ = false;
                    }
                }
            }
        }
    }

    // Vertex classes.
    {
        DSU d(4 * n);
        for (int t = 0; t < n; ++t)
            for (int f = 0; f < 4; ++f) {
                const Gluing& g = glu_[t][f];
                if (!g.glued()) continue;
                for (int v = 0; v < 4; ++v)
                    if (v != f) d.unite(4 * t + v, 4 * g.tet + g.perm[v]);
            }
        std::map<int, int> id;
        for (int t = 0; t < n; ++t)
            for (int v = 0; v < 4; ++v) {
                int r = d.find(4 * t + v);
                auto it = id.find(r);
                if (it == id.end()) {
                    it = id.emplace(r, int(verts_.size())).first;
                    verts_.emplace_back();
                }
                vertClass_[t][v] = it->second;
                verts_[it->second].inc.emplace_back(t, v);
            }
    }

    // Edge classes, with direction tracking for the self-reverse check.
    {
        DSU dir(16 * n);
        DSU und(6 * n);
        for (int t = 0; t < n; ++t)
            for (int f = 0; f < 4; ++f) {
                const Gluing& g = glu_[t][f];
                if (!g.glued()) continue;
                for (int a = 0; a < 4; ++a)
                    for (int b = 0; b < 4; ++b) {
                        if (a == b || a == f || b == f) continue;
                        dir.unite(16 * t + dirIdx(a, b), 16 * g.tet + dirIdx(g.perm[a], g.perm[b]));
                    }
                for (int e = 0; e < 6; ++e) {
                    int a = kEdgeVerts[e][0], b = kEdgeVerts[e][1];
                    if (a == f || b == f) continue;
                    und.unite(6 * t + e, 6 * g.tet + kEdgeNum[g.perm[a]][g.perm[b]]);
                }
            }
        for (int t = 0; t < n; ++t)
            for (int e = 0; e < 6; ++e) {
                int a = kEdgeVerts[e][0], b = kEdgeVerts[e][1];
                if (dir.find(16 * t + dirIdx(a, b)) == dir.find(16 * t + dirIdx(b, a)))
                    throw TriError("edge identified with itself in reverse (tet " + std::to_string(t) +
                                   " edge " + std::to_string(e) + ")");
            }
        std::map<int, int> id;
        std::vector<int> posRoot;  // directed root of the class's positive direction
        for (int t = 0; t < n; ++t)
            for (int e = 0; e < 6; ++e) {
                int r = und.find(6 * t + e);
                auto it = id.find(r);
                if (it == id.end()) {
                    it = id.emplace(r, int(edges_.size())).first;
                    edges_.emplace_back();
                    posRoot.push_back(dir.find(16 * t + dirIdx(kEdgeVerts[e][0], kEdgeVerts[e][1])));
                }
                int ec = it->second;
                edgeClass_[t][e] = ec;
                edgeOrient_[t][e] =
                    dir.find(16 * t + dirIdx(kEdgeVerts[e][0], kEdgeVerts[e][1])) == posRoot[ec] ? 1 : -1;
            }
    }

    // Edge walks: rotate around each class once, verifying a single chain or
    // cycle that covers every incidence.
    {
        std::vector<std::vector<std::pair<int, int>>> slots(edges_.size());
        for (int t = 0; t < n; ++t)
            for (int e = 0; e < 6; ++e) slots[edgeClass_[t][e]].emplace_back(t, e);
        for (size_t ec = 0; ec < edges_.size(); ++ec) {
            EdgeClassInfo& info = edges_[ec];
            // Start at an unglued containing face when one exists.
            int st = -1, se = -1, sfin = -1;
            for (auto [t, e] : slots[ec]) {
                int a = kEdgeVerts[e][0], b = kEdgeVerts[e][1];
                for (int f = 0; f < 4; ++f) {
                    if (f == a || f == b) continue;
                    if (!glu_[t][f].glued()) {
                        st = t;
                        se = e;
                        sfin = f;
                        break;
                    }
                }
                if (st >= 0) break;
            }
            info.boundary = st >= 0;
            if (st < 0) {
                st = slots[ec][0].first;
                se = slots[ec][0].second;
                for (int f = 0; f < 4; ++f)
                    if (f != kEdgeVerts[se][0] && f != kEdgeVerts[se][1]) {
                        sfin = f;
                        break;
                    }
            }
            int t = st, a = kEdgeVerts[se][0], b = kEdgeVerts[se][1], fin = sfin;
            size_t cap = slots[ec].size() + 1;
            std::set<std::pair<int, int>> seen;
            while (true) {
                int e = kEdgeNum[a][b];
                int fout = 6 - a - b - fin;
                if (!seen.insert({t, e}).second)
                    throw TriError("non-manifold edge (rotation revisits tet " + std::to_string(t) + ")");
                info.walk.push_back({t, e, fin, fout});
                info.inc.emplace_back(t, e);
                if (info.walk.size() > cap) throw TriError("edge rotation does not close");
                const Gluing& g = glu_[t][fout];
                if (!g.glued()) break;
                int na = g.perm[a], nb = g.perm[b];
                int nt = g.tet, nfin = g.face;
                if (nt == st && kEdgeNum[na][nb] == se && nfin == sfin) break;  // cycle closed
                t = nt;
                a = na;
                b = nb;
                fin = nfin;
            }
            if (info.inc.size() != slots[ec].size())
                throw TriError("non-manifold edge (rotation misses incidences)");
        }
    }

    // Triangle classes.
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            if (triClass_[t][f] >= 0) continue;
            TriangleClassInfo info;
            info.tet = t;
            info.face = f;
            int fc = int(tris_.size());
            triClass_[t][f] = fc;
            const Gluing& g = glu_[t][f];
            if (g.glued()) {
                info.tet2 = g.tet;
                info.face2 = g.face;
                triClass_[g.tet][g.face] = fc;
            }
            tris_.push_back(info);
        }

    // Vertex links.
    {
        DSU corner(16 * n);
        for (int t = 0; t < n; ++t)
            for (int f = 0; f < 4; ++f) {
                const Gluing& g = glu_[t][f];
                if (!g.glued()) continue;
                for (int v = 0; v < 4; ++v)
                    for (int w = 0; w < 4; ++w) {
                        if (v == w || v == f || w == f) continue;
                        corner.unite(16 * t + 4 * v + w, 16 * g.tet + 4 * g.perm[v] + g.perm[w]);
                    }
            }
        for (size_t vc = 0; vc < verts_.size(); ++vc) {
            VertexClassInfo& info = verts_[vc];
            int F = int(info.inc.size());
            int bs = 0;
            std::set<int> cornerRoots;
            for (auto [t, v] : info.inc) {
                for (int f = 0; f < 4; ++f) {
                    if (f == v) continue;
                    if (!glu_[t][f].glued()) ++bs;
                }
                for (int w = 0; w < 4; ++w)
                    if (w != v) cornerRoots.insert(corner.find(16 * t + 4 * v + w));
            }
            int E = (3 * F + bs) / 2;
            int V = int(cornerRoots.size());
            info.linkChi = V - E + F;
            info.linkClosed = bs == 0;

            // Orientability of the link surface.
            bool linkOrientable = true;
            std::map<std::pair<int, int>, int> colour;
            std::vector<std::pair<int, int>> stack;
            colour[info.inc[0]] = 1;
            stack.push_back(info.inc[0]);
            while (!stack.empty()) {
                auto [t, v] = stack.back();
                stack.pop_back();
                int c = colour[{t, v}];
                for (int f = 0; f < 4; ++f) {
                    if (f == v) continue;
                    const Gluing& g = glu_[t][f];
                    if (!g.glued()) continue;
                    std::array<int, 3> src{}, img{};
                    int k = 0;
                    for (int w = 0; w < 4; ++w)
                        if (w != v) {
                            src[k] = w;
                            img[k] = g.perm[w];
                            ++k;
                        }
                    int want = -c * cornerSign(src, img);
                    std::pair<int, int> nb{g.tet, g.perm[v]};
                    auto it = colour.find(nb);
                    if (it == colour.end()) {
                        colour[nb] = want;
                        stack.push_back(nb);
                    } else if (it->second != want) {
                        linkOrientable = false;
                    }
                }
            }

            if (info.linkClosed) {
                if (info.linkChi == 2)
                    info.link = LinkType::sphere;
                else if (info.linkChi == 0 && linkOrientable)
                    info.link = LinkType::torus;
                else
                    info.link = LinkType::closedOther;
                if (info.link != LinkType::sphere) ++idealVertexCount_;
            } else {
                if (info.linkChi != 1)
                    throw TriError("vertex link with boundary is not a disc (vertex class " +
                                   std::to_string(vc) + ")");
                info.link = LinkType::disc;
            }
        }
    }

    // Boundary surface components.
    {
        std::vector<std::pair<int, int>> bfaces;
        for (int t = 0; t < n; ++t)
            for (int f = 0; f < 4; ++f)
                if (!glu_[t][f].glued()) bfaces.emplace_back(t, f);
        boundaryFaceCount_ = int(bfaces.size());
        if (bfaces.empty()) return;

        DSU comp(4 * n);
        DSU corner(16 * n);
        // side (t,f,e) -> pivot target, cached
        std::map<std::tuple<int, int, int>, PivotResult> piv;
        for (auto [t, f] : bfaces)
            for (int e = 0; e < 6; ++e) {
                int a = kEdgeVerts[e][0], b = kEdgeVerts[e][1];
                if (a == f || b == f) continue;
                PivotResult pr = boundaryPivot(t, f, e);
                piv[{t, f, e}] = pr;
                comp.unite(4 * t + f, 4 * pr.tet + pr.face);
                corner.unite(16 * t + 4 * f + a, 16 * pr.tet + 4 * pr.face + pr.cornerMap[a]);
                corner.unite(16 * t + 4 * f + b, 16 * pr.tet + 4 * pr.face + pr.cornerMap[b]);
            }

        std::map<int, int> id;
        for (auto [t, f] : bfaces) {
            int r = comp.find(4 * t + f);
            auto it = id.find(r);
            if (it == id.end()) {
                it = id.emplace(r, int(bdry_.size())).first;
                bdry_.emplace_back();
            }
            bdryOf_[t][f] = it->second;
            bdry_[it->second].faces.emplace_back(t, f);
        }

        for (auto& bc : bdry_) {
            std::set<int> ecs, vcs, cornerRoots;
            for (auto [t, f] : bc.faces) {
                for (int e = 0; e < 6; ++e) {
                    int a = kEdgeVerts[e][0], b = kEdgeVerts[e][1];
                    if (a == f || b == f) continue;
                    ecs.insert(edgeClass_[t][e]);
                }
                for (int v = 0; v < 4; ++v)
                    if (v != f) {
                        vcs.insert(vertClass_[t][v]);
                        cornerRoots.insert(corner.find(16 * t + 4 * f + v));
                    }
            }
            bc.edges.assign(ecs.begin(), ecs.end());
            bc.verts.assign(vcs.begin(), vcs.end());
            bc.F = int(bc.faces.size());
            if (bc.F * 3 % 2 != 0) throw TriError("boundary surface side count is odd");
            bc.E = bc.F * 3 / 2;
            bc.V = int(cornerRoots.size());
            if (bc.E != int(bc.edges.size()) || bc.V != int(bc.verts.size()))
                throw TriError("boundary surface cell accounting mismatch");

            // Orientability of the boundary surface component.
            bc.orientableSurface = true;
            std::map<std::pair<int, int>, int> colour;
            std::vector<std::pair<int, int>> stack;
            colour[bc.faces[0]] = 1;
            stack.push_back(bc.faces[0]);
            while (!stack.empty()) {
                auto [t, f] = stack.back();
                stack.pop_back();
                int c = colour[{t, f}];
                for (int e = 0; e < 6; ++e) {
                    int a = kEdgeVerts[e][0], b = kEdgeVerts[e][1];
                    if (a == f || b == f) continue;
                    const PivotResult& pr = piv[{t, f, e}];
                    std::array<int, 3> src{}, img{};
                    int k = 0;
                    for (int v = 0; v < 4; ++v)
                        if (v != f) {
                            src[k] = v;
                            img[k] = pr.cornerMap[v];
                            ++k;
                        }
                    int want = -c * cornerSign(src, img);
                    std::pair<int, int> nb{pr.tet, pr.face};
                    auto it = colour.find(nb);
                    if (it == colour.end()) {
                        colour[nb] = want;
                        stack.push_back(nb);
                    } else if (it->second != want) {
                        bc.orientableSurface = false;
                    }
                }
            }
        }
    }
}

PivotResult Triangulation::boundaryPivot(int t, int f, int e) const {
    int a = kEdgeVerts[e][0], b = kEdgeVerts[e][1];
    if (a == f || b == f) throw TriError("boundaryPivot: edge not on face");
    if (!boundaryFace(t, f)) throw TriError("boundaryPivot: face not on boundary");
    int srcThird = 6 - a - b - f;
    int curT = t, ca = a, cb = b, xf = srcThird;
    int cap = 12 * size() + 2;
    while (glu_[curT][xf].glued()) {
        if (--cap < 0) throw TriError("boundaryPivot: edge is not a boundary edge");
        const Gluing& g = glu_[curT][xf];
        int na = g.perm[ca], nb = g.perm[cb];
        curT = g.tet;
        xf = 6 - na - nb - g.face;
        ca = na;
        cb = nb;
    }
    int dstThird = 6 - ca - cb - xf;
    std::array<int, 4> img{};
    img[a] = ca;
    img[b] = cb;
    img[srcThird] = dstThird;
    img[f] = xf;
    return PivotResult{curT, xf, Perm4(img[0], img[1], img[2], img[3])};
}

Triangulation parseGluingTable(const std::string& text) {
    std::vector<std::array<Gluing, 4>> rows;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    auto fail = [&](const std::string& what) {
        throw TriError("line " + std::to_string(lineNo) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineNo;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string w;
        while (ls >> w) tok.push_back(w);
        if (tok.empty()) continue;
        if (tok.size() != 4) fail("expected 4 entries, got " + std::to_string(tok.size()));
        std::array<Gluing, 4> row;
        for (int f = 0; f < 4; ++f) {
            if (tok[f] == "-") continue;
            size_t c1 = tok[f].find(':');
            size_t c2 = c1 == std::string::npos ? std::string::npos : tok[f].find(':', c1 + 1);
            if (c2 == std::string::npos) fail("entry '" + tok[f] + "' is not t:f:perm or -");
            int tgt = -1, tf = -1;
            try {
                size_t used = 0;
                tgt = std::stoi(tok[f].substr(0, c1), &used);
                if (used != c1) fail("bad tetrahedron index in '" + tok[f] + "'");
                std::string fs = tok[f].substr(c1 + 1, c2 - c1 - 1);
                tf = std::stoi(fs, &used);
                if (used != fs.size()) fail("bad face index in '" + tok[f] + "'");
            } catch (const std::logic_error&) {
                fail("bad number in '" + tok[f] + "'");
            }
            auto p = Perm4::fromDigits(tok[f].substr(c2 + 1));
            if (!p) fail("bad permutation digits in '" + tok[f] + "'");
            if (tgt < 0 || tf < 0 || tf > 3) fail("gluing target out of range in '" + tok[f] + "'");
            row[f] = Gluing{tgt, tf, *p};
        }
        rows.push_back(row);
    }
    for (auto& row : rows)
        for (auto& g : row)
            if (g.glued() && g.tet >= int(rows.size()))
                throw TriError("gluing references tetrahedron " + std::to_string(g.tet) +
                               " beyond table of " + std::to_string(rows.size()));
    return Triangulation(std::move(rows));
}

std::string toGluingTable(const Triangulation& tri) {
    std::ostringstream out;
    for (int t = 0; t < tri.size(); ++t) {
        for (int f = 0; f < 4; ++f) {
            if (f) out << ' ';
            const Gluing& g = tri.gluing(t, f);
            if (!g.glued())
                out << '-';
            else
                out << g.tet << ':' << g.face << ':' << g.perm.digits();
        }
        out << '\n';
    }
    return out.str();
}

Triangulation disjointUnion(const Triangulation& a, const Triangulation& b) {
    auto rows = a.gluingTable();
    auto rb = b.gluingTable();
    int off = a.size();
    for (auto& row : rb) {
        for (auto& g : row)
            if (g.glued()) g.tet += off;
        rows.push_back(row);
    }
    return Triangulation(std::move(rows));
}

}  // namespace hyp3
