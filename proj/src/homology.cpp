#include <hyp3/homology.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hyp3 {

std::string HomologyGroup::str() const {
    std::string s;
    if (rank == 1)
        s = "Z";
    else if (rank > 1)
        s = "Z^" + std::to_string(rank);
    for (const Int& d : torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + d.get_str();
    }
    return s.empty() ? "0" : s;
}

HomologyGroup groupZ(int rank) {
    HomologyGroup g;
    g.rank = rank;
    return g;
}

ChainH1 chainH1(const IMat& d1, const IMat& d2) {
    int c1 = cols(d1);
    if (rows(d2) != c1) throw std::logic_error("chainH1: chain sizes disagree");
    ChainH1 r;
    r.kernel = kernelBasis(d1);
    int k = cols(r.kernel);
    r.kernelSnf = smithNormalForm(r.kernel);
    // express boundaries in kernel coordinates
    int c2 = cols(d2);
    IMat X(k, std::vector<Int>(c2, 0));
    for (int j = 0; j < c2; ++j) {
        std::vector<Int> b(c1), y;
        for (int i = 0; i < c1; ++i) b[i] = d2[i][j];
        if (!solveIntegral(r.kernel, b, y)) throw std::logic_error("chainH1: d1*d2 != 0");
        for (int i = 0; i < k; ++i) X[i][j] = y[i];
    }
    SNFResult xs = smithNormalForm(X);
    r.uQuot = xs.U;
    r.rankQuot = xs.rank;
    r.dQuot.assign(k, 0);
    for (int i = 0; i < xs.rank; ++i) r.dQuot[i] = xs.D[i][i];
    r.group.rank = k - xs.rank;
    for (int i = 0; i < xs.rank; ++i)
        if (xs.D[i][i] > 1) r.group.torsion.push_back(xs.D[i][i]);
    return r;
}

std::vector<Int> ChainH1::classOf(const std::vector<Int>& cycle) const {
    std::vector<Int> y;
    if (!solveIntegral(kernel, cycle, y)) throw std::logic_error("classOf: not a cycle");
    int k = cols(kernel);
    std::vector<Int> u(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) u[i] += uQuot[i][j] * y[j];
    for (int i = 0; i < rankQuot; ++i) {
        Int m;
        mpz_mod(m.get_mpz_t(), u[i].get_mpz_t(), dQuot[i].get_mpz_t());
        u[i] = m;
    }
    return u;
}

namespace {

// Dual complex: one 0-cell per tetrahedron, one 1-cell per interior triangle
// class (directed from the representative side's tetrahedron to its
// partner's), one 2-cell per interior edge class.
struct DualComplex {
    std::vector<int> gen;  // triangle class -> generator index, -1 for boundary
    int nGen = 0;
    IMat d1;  // tets x gens
    IMat d2;  // gens x interior edges
};

DualComplex dualComplex(const Triangulation& t) {
    DualComplex dc;
    dc.gen.assign(t.triangleClassCount(), -1);
    for (int fc = 0; fc < t.triangleClassCount(); ++fc)
        if (!t.triangleInfo(fc).boundary()) dc.gen[fc] = dc.nGen++;
    dc.d1.assign(t.size(), std::vector<Int>(dc.nGen, 0));
    for (int fc = 0; fc < t.triangleClassCount(); ++fc) {
        const TriangleClassInfo& info = t.triangleInfo(fc);
        if (info.boundary()) continue;
        dc.d1[info.tet2][dc.gen[fc]] += 1;
        dc.d1[info.tet][dc.gen[fc]] -= 1;
    }
    std::vector<int> interiorEdges;
    for (int ec = 0; ec < t.edgeClassCount(); ++ec)
        if (!t.edgeInfo(ec).boundary) interiorEdges.push_back(ec);
    dc.d2.assign(dc.nGen, std::vector<Int>(interiorEdges.size(), 0));
    for (size_t j = 0; j < interiorEdges.size(); ++j) {
        for (const EdgeStep& st : t.edgeInfo(interiorEdges[j]).walk) {
            int fc = t.triangleClass(st.tet, st.fout);
            const TriangleClassInfo& info = t.triangleInfo(fc);
            int sign = (info.tet == st.tet && info.face == st.fout) ? 1 : -1;
            dc.d2[dc.gen[fc]][j] += sign;
        }
    }
    return dc;
}

}  // namespace

HomologyGroup homologyH1(const Triangulation& t) {
    DualComplex dc = dualComplex(t);
    return chainH1(dc.d1, dc.d2).group;
}

SimplicialH1 simplicialH1(const Triangulation& t) {
    int nv = t.vertexClassCount(), ne = t.edgeClassCount(), nf = t.triangleClassCount();
    IMat d1(nv, std::vector<Int>(ne, 0));
    for (int ec = 0; ec < ne; ++ec) {
        auto [tt, e] = t.edgeInfo(ec).inc[0];
        int lo = kEdgeVerts[e][0], hi = kEdgeVerts[e][1];
        if (t.edgeOrient(tt, e) < 0) std::swap(lo, hi);
        d1[t.vertexClass(tt, hi)][ec] += 1;
        d1[t.vertexClass(tt, lo)][ec] -= 1;
    }
    IMat d2(ne, std::vector<Int>(nf, 0));
    for (int fc = 0; fc < nf; ++fc) {
        const TriangleClassInfo& info = t.triangleInfo(fc);
        int tt = info.tet, f = info.face;
        int vs[3], k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != f) vs[k++] = v;
        const int sides[3][3] = {{0, 1, 1}, {1, 2, 1}, {0, 2, -1}};  // (i, j, sign)
        for (auto& s : sides) {
            int x = vs[s[0]], y = vs[s[1]];
            int e = kEdgeNum[x][y];
            d2[t.edgeClass(tt, e)][fc] += s[2] * t.edgeOrient(tt, e);
        }
    }
    SimplicialH1 r;
    r.h1 = chainH1(d1, d2);
    return r;
}

std::vector<Int> SimplicialH1::classOfEdgeCycle(
    const Triangulation& t, const std::vector<std::pair<int, int>>& signedEdges) const {
    std::vector<Int> z(t.edgeClassCount(), 0);
    for (auto [ec, c] : signedEdges) z[ec] += c;
    return h1.classOf(z);
}

namespace {

// GF(2) elimination helpers; vectors are dense 0/1.
using Vec2 = std::vector<uint8_t>;

// Basis is kept fully reduced: every vector is zero at the other leads.
bool reduceAgainst(Vec2& v, const std::vector<Vec2>& basis, const std::vector<int>& lead) {
    for (size_t i = 0; i < basis.size(); ++i)
        if (v[lead[i]]) {
            for (size_t j = 0; j < v.size(); ++j) v[j] ^= basis[i][j];
        }
    for (size_t j = 0; j < v.size(); ++j)
        if (v[j]) return true;  // nonzero after reduction
    return false;
}

void addToBasis(Vec2 v, std::vector<Vec2>& basis, std::vector<int>& lead) {
    for (size_t j = 0; j < v.size(); ++j)
        if (v[j]) {
            for (size_t i = 0; i < basis.size(); ++i)
                if (basis[i][j]) {
                    for (size_t l = 0; l < v.size(); ++l) basis[i][l] ^= v[l];
                }
            lead.push_back(int(j));
            basis.push_back(std::move(v));
            return;
        }
    throw std::logic_error("addToBasis: zero vector");
}

}  // namespace

BoundaryZ2 boundaryH1Z2(const Triangulation& t) {
    // surface cells: vertices = disc-link vertex classes, edges = boundary
    // edge classes, faces = boundary triangles
    std::map<int, int> eIdx;
    std::vector<int> eList;
    for (int ec = 0; ec < t.edgeClassCount(); ++ec)
        if (t.edgeInfo(ec).boundary) {
            eIdx[ec] = int(eList.size());
            eList.push_back(ec);
        }
    int ne = int(eList.size());
    int nv = t.vertexClassCount();  // rows for all classes; interior ones stay zero

    // kernel of d1 over GF(2)
    std::vector<Vec2> d1cols(ne, Vec2(nv, 0));
    for (int j = 0; j < ne; ++j) {
        auto [tt, e] = t.edgeInfo(eList[j]).inc[0];
        d1cols[j][t.vertexClass(tt, kEdgeVerts[e][0])] ^= 1;
        d1cols[j][t.vertexClass(tt, kEdgeVerts[e][1])] ^= 1;
    }
    // Gaussian elimination on columns to find null space of d1.
    // Track column combinations.
    std::vector<Vec2> combo(ne, Vec2(ne, 0));
    for (int j = 0; j < ne; ++j) combo[j][j] = 1;
    std::vector<int> pivotRowOf;
    std::vector<int> pivotColOf;
    for (int j = 0; j < ne; ++j) {
        // reduce column j by earlier pivots
        for (size_t p = 0; p < pivotColOf.size(); ++p) {
            int pr = pivotRowOf[p], pc = pivotColOf[p];
            if (d1cols[j][pr]) {
                for (int r = 0; r < nv; ++r) d1cols[j][r] ^= d1cols[pc][r];
                for (int r = 0; r < ne; ++r) combo[j][r] ^= combo[pc][r];
            }
        }
        int lead = -1;
        for (int r = 0; r < nv; ++r)
            if (d1cols[j][r]) {
                lead = r;
                break;
            }
        if (lead >= 0) {
            pivotRowOf.push_back(lead);
            pivotColOf.push_back(j);
        }
    }
    std::vector<Vec2> cycleBasis;
    for (int j = 0; j < ne; ++j) {
        bool isPivot = false;
        for (int pc : pivotColOf)
            if (pc == j) isPivot = true;
        bool zero = true;
        for (int r = 0; r < nv; ++r)
            if (d1cols[j][r]) zero = false;
        if (!isPivot && zero) cycleBasis.push_back(combo[j]);
    }

    // image of d2
    std::vector<Vec2> imBasis;
    std::vector<int> imLead;
    for (int fc = 0; fc < t.triangleClassCount(); ++fc) {
        const TriangleClassInfo& info = t.triangleInfo(fc);
        if (!info.boundary()) continue;
        Vec2 v(ne, 0);
        int tt = info.tet, f = info.face;
        for (int e = 0; e < 6; ++e) {
            int a = kEdgeVerts[e][0], b = kEdgeVerts[e][1];
            if (a == f || b == f) continue;
            v[eIdx.at(t.edgeClass(tt, e))] ^= 1;
        }
        if (reduceAgainst(v, imBasis, imLead)) addToBasis(v, imBasis, imLead);
    }

    BoundaryZ2 out;
    std::vector<Vec2> quotBasis = imBasis;
    std::vector<int> quotLead = imLead;
    for (Vec2& v : cycleBasis) {
        Vec2 w = v;
        if (!reduceAgainst(w, quotBasis, quotLead)) continue;
        // w reduced is nonzero and is v plus image/chosen elements; keep the
        // reduced representative (still a cycle)
        addToBasis(w, quotBasis, quotLead);
        std::vector<int> cyc;
        for (int j = 0; j < ne; ++j)
            if (w[j]) cyc.push_back(eList[j]);
        out.cycles.push_back(cyc);
        ++out.dim;
    }

    int expect = 0;
    for (int i = 0; i < t.boundaryComponentCount(); ++i)
        expect += 2 - t.boundaryComponent(i).chi();
    if (out.dim != expect) throw std::logic_error("boundaryH1Z2: dimension mismatch");
    return out;
}

Triangulation cyclicCover(const Triangulation& t, int n, const std::vector<int>& cocycle) {
    if (int(cocycle.size()) != t.triangleClassCount())
        throw std::logic_error("cyclicCover: cocycle size");
    int T = t.size();
    std::vector<std::array<Gluing, 4>> rows(size_t(T) * n);
    auto id = [&](int tet, int sheet) { return tet * n + sheet; };
    for (int tt = 0; tt < T; ++tt)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = t.gluing(tt, f);
            if (!g.glued()) continue;
            int fc = t.triangleClass(tt, f);
            const TriangleClassInfo& info = t.triangleInfo(fc);
            int eps = (info.tet == tt && info.face == f) ? 1 : -1;
            for (int s = 0; s < n; ++s) {
                int s2 = ((s + eps * cocycle[fc]) % n + n) % n;
                rows[id(tt, s)][f] = Gluing{id(g.tet, s2), g.face, g.perm};
            }
        }
    return Triangulation(std::move(rows));
}

std::vector<int> cyclicCocycle(const Triangulation& t, int n) {
    DualComplex dc = dualComplex(t);
    // R phi = 0 over Z, R = transpose(d2)
    IMat phi;
    if (cols(dc.d2) == 0) {
        phi = IMat(dc.nGen, std::vector<Int>(dc.nGen, 0));
        for (int i = 0; i < dc.nGen; ++i) phi[i][i] = 1;
    } else {
        IMat R(cols(dc.d2), std::vector<Int>(dc.nGen, 0));
        for (int i = 0; i < dc.nGen; ++i)
            for (int j = 0; j < cols(dc.d2); ++j) R[j][i] = dc.d2[i][j];
        phi = kernelBasis(R);  // nGen x s
    }
    IMat cyc = kernelBasis(dc.d1);   // nGen x m
    int s = cols(phi), m = cols(cyc);
    for (int j = 0; j < s; ++j) {
        bool hit = false;
        for (int i = 0; i < m && !hit; ++i) {
            Int v = 0;
            for (int g = 0; g < dc.nGen; ++g) v += phi[g][j] * cyc[g][i];
            if (v % n != 0) hit = true;
        }
        if (!hit) continue;
        std::vector<int> out(t.triangleClassCount(), 0);
        for (int fc = 0; fc < t.triangleClassCount(); ++fc)
            if (dc.gen[fc] >= 0) {
                Int v = (phi[dc.gen[fc]][j] % n + n) % n;
                out[fc] = int(v.get_si());
            }
        return out;
    }
    throw std::logic_error("cyclicCocycle: no surjective cocycle found");
}

}  // namespace hyp3
