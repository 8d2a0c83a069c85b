#include <hyp3/normal.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <set>

namespace hyp3 {

namespace {

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void gcdReduce(std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    if (g > 1)
        for (Int& x : v) x /= g;
}

// Rank over Q by fraction-free elimination.
int integerRank(IMat m) {
    int r = 0;
    int nr = rows(m), nc = cols(m);
    for (int c = 0; c < nc && r < nr; ++c) {
        int p = -1;
        for (int i = r; i < nr; ++i)
            if (m[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        for (int i = r + 1; i < nr; ++i) {
            if (m[i][c] == 0) continue;
            Int f = m[i][c], g = m[r][c];
            for (int j = c; j < nc; ++j) m[i][j] = m[i][j] * g - m[r][j] * f;
            Int red = 0;
            for (int j = c; j < nc; ++j) red = gcd(red, m[i][j]);
            if (red > 1)
                for (int j = c; j < nc; ++j) m[i][j] /= red;
        }
        ++r;
    }
    return r;
}

}  // namespace

bool admissible(CoordSystem system, const std::vector<Int>& x) {
    int per = coordsPerTet(system);
    int qoff = system == CoordSystem::standard ? 4 : 0;
    for (size_t base = 0; base + per <= x.size(); base += per) {
        int nz = 0;
        for (int k = 0; k < 3; ++k) {
            if (x[base + qoff + k] < 0) return false;
            if (x[base + qoff + k] != 0) ++nz;
        }
        if (nz > 1) return false;
    }
    for (const Int& v : x)
        if (v < 0) return false;
    return true;
}

bool satisfies(const MatchingSystem& sys, const std::vector<Int>& x) {
    for (const auto& row : sys.rows)
        if (dot(row, x) != 0) return false;
    return true;
}

MatchingSystem standardMatchingSystem(const Triangulation& tri) {
    MatchingSystem sys;
    sys.system = CoordSystem::standard;
    sys.tets = tri.size();
    for (int fc = 0; fc < tri.triangleClassCount(); ++fc) {
        const TriangleClassInfo& info = tri.triangleInfo(fc);
        if (info.boundary()) continue;
        int t1 = info.tet, f1 = info.face;
        const Gluing& gl = tri.gluing(t1, f1);
        int t2 = gl.tet, f2 = gl.face;
        for (int v = 0; v < 4; ++v) {
            if (v == f1) continue;
            int w = gl.perm[v];
            std::vector<Int> row(sys.coordCount(), 0);
            row[7 * t1 + v] += 1;
            row[7 * t1 + 4 + quadPair(kEdgeNum[f1][v])] += 1;
            row[7 * t2 + w] -= 1;
            row[7 * t2 + 4 + quadPair(kEdgeNum[f2][w])] -= 1;
            sys.rows.push_back(std::move(row));
        }
    }
    return sys;
}

MatchingSystem quadMatchingSystem(const Triangulation& tri) {
    if (tri.idealKind())
        throw TriError("quad matching equations need a finite triangulation");
    MatchingSystem sys;
    sys.system = CoordSystem::quad;
    sys.tets = tri.size();
    for (int ec = 0; ec < tri.edgeClassCount(); ++ec) {
        const EdgeClassInfo& info = tri.edgeInfo(ec);
        if (info.boundary) continue;
        std::vector<Int> row(sys.coordCount(), 0);
        for (const EdgeStep& st : info.walk) {
            int a = kEdgeVerts[st.edge][0], b = kEdgeVerts[st.edge][1];
            if (tri.edgeOrient(st.tet, st.edge) < 0) std::swap(a, b);
            // Entry face st.fin has third vertex st.fout and vice versa;
            // the quad pairing a with that third vertex shears positively.
            row[3 * st.tet + quadPair(kEdgeNum[a][st.fout])] += 1;
            row[3 * st.tet + quadPair(kEdgeNum[a][st.fin])] -= 1;
        }
        sys.rows.push_back(std::move(row));
    }
    return sys;
}

namespace {

struct SparseRow {
    std::vector<int> idx;
    std::vector<Int> val;
};

// Double description on {x >= 0, rows*x = 0}, keeping only rays passing
// the admissibility filter as they are generated.
//
// The filter is support-monotone: any vector whose support lies inside an
// admissible support is itself admissible. That makes aggressive pruning
// sound and keeps the combinatorial adjacency test exact:
//   * a child of rays p, q has support exactly supp(p) u supp(q), so pairs
//     whose union support is inadmissible cannot produce admissible
//     children and are skipped outright;
//   * when the union is admissible, every extreme ray of the minimal face
//     containing p and q has support inside that union, hence is
//     admissible and was never pruned, so "no third kept ray vanishes on
//     all common zero coordinates of p, q" decides adjacency exactly.
// Inductively the kept rays are precisely the admissible extreme rays of
// the current cone.
std::vector<std::vector<Int>> ddRays(const MatchingSystem& sys,
                                     bool (*filter)(CoordSystem, const std::vector<Int>&),
                                     long long maxSolutions) {
    const int n = sys.coordCount();
    const int T = sys.tets;
    const int W = (n + 63) / 64;
    const int QW = std::max(1, (3 * T + 63) / 64);

    std::vector<SparseRow> rem;
    for (const auto& row : sys.rows) {
        SparseRow s;
        for (int j = 0; j < n; ++j)
            if (row[j] != 0) {
                s.idx.push_back(j);
                s.val.push_back(row[j]);
            }
        rem.push_back(std::move(s));
    }

    std::vector<std::vector<Int>> rays;
    rays.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::vector<Int> e(n, 0);
        e[i] = 1;
        rays.push_back(std::move(e));
    }

    // Echelon basis of the inserted rows, for the dimension filter below.
    IMat basis;
    std::vector<int> basisLead;
    int rankIns = 0;
    auto insertBasis = [&](const SparseRow& s) {
        std::vector<Int> r(n, 0);
        for (size_t k = 0; k < s.idx.size(); ++k) r[s.idx[k]] = s.val[k];
        for (size_t b = 0; b < basis.size(); ++b) {
            int lead = basisLead[b];
            if (r[lead] == 0) continue;
            Int f = r[lead], g = basis[b][lead];
            for (int j = 0; j < n; ++j) r[j] = r[j] * g - basis[b][j] * f;
            gcdReduce(r);
        }
        for (int j = 0; j < n; ++j)
            if (r[j] != 0) {
                basisLead.push_back(j);
                basis.push_back(std::move(r));
                ++rankIns;
                return;
            }
    };

    auto sparseDot = [&](const SparseRow& s, const std::vector<Int>& ray, Int& out) {
        out = 0;
        for (size_t k = 0; k < s.idx.size(); ++k) out += s.val[k] * ray[s.idx[k]];
    };

    while (!rem.empty()) {
        const size_t R = rays.size();

        // Pick the remaining row splitting the rays into the cheapest
        // positive/negative pair set.
        size_t bestRow = 0;
        long long bestScore = -1, bestSum = 0;
        Int d;
        for (size_t r = 0; r < rem.size(); ++r) {
            long long np = 0, nm = 0;
            for (size_t i = 0; i < R; ++i) {
                sparseDot(rem[r], rays[i], d);
                int sg = sgn(d);
                np += sg > 0;
                nm += sg < 0;
            }
            long long score = np * nm, sum = np + nm;
            if (bestScore < 0 || score < bestScore ||
                (score == bestScore && sum < bestSum)) {
                bestScore = score;
                bestSum = sum;
                bestRow = r;
            }
            if (bestScore == 0) break;
        }
        const SparseRow& row = rem[bestRow];

        std::vector<Int> dots(R);
        for (size_t i = 0; i < R; ++i) sparseDot(row, rays[i], dots[i]);

        std::vector<size_t> plus, minus;
        std::vector<std::vector<Int>> next;
        for (size_t i = 0; i < R; ++i) {
            if (dots[i] == 0)
                next.push_back(rays[i]);
            else if (dots[i] > 0)
                plus.push_back(i);
            else
                minus.push_back(i);
        }

        if (!plus.empty() && !minus.empty()) {
            // Packed zero sets, plus per-ray quad occupancy masks: qtype has
            // bit 3t+k set when quad type k is used in tet t, qocc has the
            // whole 3-bit group set when any quad is used in tet t.
            std::vector<uint64_t> zero(R * W, 0), qtype(R * QW, 0), qocc(R * QW, 0);
            for (size_t i = 0; i < R; ++i) {
                for (int j = 0; j < n; ++j)
                    if (rays[i][j] == 0) zero[i * W + j / 64] |= 1ULL << (j % 64);
                for (int t = 0; t < T; ++t) {
                    bool occ = false;
                    for (int k = 0; k < 3; ++k)
                        if (rays[i][sys.quadBase(t) + k] != 0) {
                            qtype[i * QW + (3 * t + k) / 64] |= 1ULL << ((3 * t + k) % 64);
                            occ = true;
                        }
                    if (occ)
                        for (int k = 0; k < 3; ++k)
                            qocc[i * QW + (3 * t + k) / 64] |= 1ULL << ((3 * t + k) % 64);
                }
            }

            const long long dim = (long long)n - rankIns;
            std::vector<uint64_t> common(W);
            for (size_t p : plus) {
                const uint64_t* zp = &zero[p * W];
                const uint64_t* tp = &qtype[p * QW];
                const uint64_t* op = &qocc[p * QW];
                for (size_t q : minus) {
                    const uint64_t* zq = &zero[q * W];
                    if (filter) {
                        const uint64_t* tq = &qtype[q * QW];
                        const uint64_t* oq = &qocc[q * QW];
                        bool clash = false;
                        for (int w = 0; w < QW && !clash; ++w)
                            clash = ((tp[w] ^ tq[w]) & op[w] & oq[w]) != 0;
                        if (clash) continue;
                    }
                    long long cc = 0;
                    for (int w = 0; w < W; ++w) {
                        common[w] = zp[w] & zq[w];
                        cc += __builtin_popcountll(common[w]);
                    }
                    if (cc + 2 < dim) continue;
                    bool witness = false;
                    for (size_t i = 0; i < R && !witness; ++i) {
                        if (i == p || i == q) continue;
                        const uint64_t* zi = &zero[i * W];
                        bool super = true;
                        for (int w = 0; w < W && super; ++w)
                            super = (common[w] & ~zi[w]) == 0;
                        witness = super;
                    }
                    if (witness) continue;
                    std::vector<Int> child(n);
                    for (int j = 0; j < n; ++j)
                        child[j] = dots[p] * rays[q][j] - dots[q] * rays[p][j];
                    gcdReduce(child);
                    if (!filter || filter(sys.system, child))
                        next.push_back(std::move(child));
                }
            }
        }

        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        rays = std::move(next);
        insertBasis(row);
        rem.erase(rem.begin() + bestRow);
        if (maxSolutions > 0 && (long long)rays.size() > maxSolutions)
            throw ResourceError("vertex enumeration exceeded the solution budget");
    }
    if (maxSolutions > 0 && (long long)rays.size() > maxSolutions)
        throw ResourceError("vertex enumeration exceeded the solution budget");
    std::sort(rays.begin(), rays.end());
    return rays;
}

// Standard vertex solutions of a finite triangulation, from the quad
// vertex set. Dropping triangle nonnegativity leaves the cone
// W = {Ax = 0, quads >= 0}, whose lineality space is spanned by the
// vertex links and whose quotient by that space is isomorphic to the
// quad solution cone (Tollefson's correspondence). So W is described by
// canonical lifts of the quad vertex rays plus the links, and reimposing
// the triangle halfspaces one at a time keeps intermediate descriptions
// near the size of the final answer, unlike direct double description
// from the 7t orthant. Pruning and adjacency stay exact by the same
// support-closure argument as in ddRays: children's quad supports are
// their parents' union, and every adjacency witness inside an admissible
// union is itself admissible, hence never pruned.
std::vector<std::vector<Int>> standardVertexViaQuads(const Triangulation& tri,
                                                     long long maxSolutions) {
    const int T = tri.size();
    const int n = 7 * T;
    const int W = std::max(1, (n + 63) / 64);
    const int QW = std::max(1, (3 * T + 63) / 64);

    auto quadRays = ddRays(quadMatchingSystem(tri), &admissible, maxSolutions);
    std::vector<std::vector<Int>> rays;
    rays.reserve(quadRays.size());
    for (auto& q : quadRays) {
        NormalVector lift = quadToStandard(tri, {CoordSystem::quad, std::move(q)});
        rays.push_back(std::move(lift.coords));
    }

    // One triangle coordinate per vertex class first: the class link spans
    // the missing sign direction, so intersecting with that halfspace just
    // projects every ray along the link and promotes the link to a ray.
    std::vector<uint64_t> active(W, 0);
    auto activate = [&](int j) { active[j / 64] |= 1ULL << (j % 64); };
    for (int t = 0; t < T; ++t)
        for (int k = 0; k < 3; ++k) activate(7 * t + 4 + k);
    std::vector<int> pending;
    for (int vc = 0; vc < tri.vertexClassCount(); ++vc) {
        const auto& inc = tri.vertexInfo(vc).inc;
        std::vector<Int> link(n, 0);
        for (auto [t, v] : inc) link[7 * t + v] = 1;
        auto [t0, v0] = inc.front();
        int j = 7 * t0 + v0;
        for (auto& r : rays) {
            if (r[j] == 0) continue;
            Int f = r[j];
            for (auto [t, v] : inc) r[7 * t + v] -= f;
            gcdReduce(r);
        }
        rays.push_back(std::move(link));
        activate(j);
        for (auto [t, v] : inc)
            if (t != t0 || v != v0) pending.push_back(7 * t + v);
    }

    auto quadTypesOk = [&](const std::vector<Int>& x) {
        for (int t = 0; t < T; ++t) {
            int nz = 0;
            for (int k = 0; k < 3; ++k) nz += x[7 * t + 4 + k] != 0;
            if (nz > 1) return false;
        }
        return true;
    };

    while (!pending.empty()) {
        const size_t R = rays.size();
        size_t bestIdx = 0;
        long long bestScore = -1, bestSum = 0;
        for (size_t c = 0; c < pending.size(); ++c) {
            long long np = 0, nm = 0;
            for (const auto& r : rays) {
                int sg = sgn(r[pending[c]]);
                np += sg > 0;
                nm += sg < 0;
            }
            long long score = np * nm, sum = np + nm;
            if (bestScore < 0 || score < bestScore ||
                (score == bestScore && sum < bestSum)) {
                bestScore = score;
                bestSum = sum;
                bestIdx = c;
            }
            if (bestScore == 0) break;
        }
        const int j = pending[bestIdx];
        pending.erase(pending.begin() + bestIdx);

        std::vector<size_t> plus, minus;
        std::vector<std::vector<Int>> next;
        for (size_t i = 0; i < R; ++i) {
            int sg = sgn(rays[i][j]);
            if (sg >= 0) next.push_back(rays[i]);
            if (sg > 0)
                plus.push_back(i);
            else if (sg < 0)
                minus.push_back(i);
        }

        if (!plus.empty() && !minus.empty()) {
            std::vector<uint64_t> zero(R * W, 0), qtype(R * QW, 0), qocc(R * QW, 0);
            for (size_t i = 0; i < R; ++i) {
                for (int c = 0; c < n; ++c)
                    if (rays[i][c] == 0) zero[i * W + c / 64] |= 1ULL << (c % 64);
                for (int w = 0; w < W; ++w) zero[i * W + w] &= active[w];
                for (int t = 0; t < T; ++t) {
                    bool occ = false;
                    for (int k = 0; k < 3; ++k)
                        if (rays[i][7 * t + 4 + k] != 0) {
                            qtype[i * QW + (3 * t + k) / 64] |= 1ULL << ((3 * t + k) % 64);
                            occ = true;
                        }
                    if (occ)
                        for (int k = 0; k < 3; ++k)
                            qocc[i * QW + (3 * t + k) / 64] |= 1ULL << ((3 * t + k) % 64);
                }
            }
            std::vector<uint64_t> common(W);
            for (size_t p : plus) {
                const uint64_t* zp = &zero[p * W];
                const uint64_t* tp = &qtype[p * QW];
                const uint64_t* op = &qocc[p * QW];
                for (size_t q : minus) {
                    const uint64_t* zq = &zero[q * W];
                    const uint64_t* tq = &qtype[q * QW];
                    const uint64_t* oq = &qocc[q * QW];
                    bool clash = false;
                    for (int w = 0; w < QW && !clash; ++w)
                        clash = ((tp[w] ^ tq[w]) & op[w] & oq[w]) != 0;
                    if (clash) continue;
                    for (int w = 0; w < W; ++w) common[w] = zp[w] & zq[w];
                    bool witness = false;
                    for (size_t i = 0; i < R && !witness; ++i) {
                        if (i == p || i == q) continue;
                        const uint64_t* zi = &zero[i * W];
                        bool super = true;
                        for (int w = 0; w < W && super; ++w)
                            super = (common[w] & ~zi[w]) == 0;
                        witness = super;
                    }
                    if (witness) continue;
                    std::vector<Int> child(n);
                    for (int c = 0; c < n; ++c)
                        child[c] = rays[p][j] * rays[q][c] - rays[q][j] * rays[p][c];
                    gcdReduce(child);
                    if (quadTypesOk(child)) next.push_back(std::move(child));
                }
            }
        }

        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        rays = std::move(next);
        activate(j);
        if (maxSolutions > 0 && (long long)rays.size() > maxSolutions)
            throw ResourceError("vertex enumeration exceeded the solution budget");
    }
    return rays;
}

}  // namespace

std::vector<NormalVector> enumerateVertexSolutions(const MatchingSystem& sys,
                                                   const EnumLimits& limits) {
    auto rays = ddRays(sys, &admissible, limits.maxSolutions);
    std::vector<NormalVector> out;
    for (auto& r : rays) out.push_back({sys.system, std::move(r)});
    return out;
}

std::vector<NormalVector> enumerateVertexSolutions(const Triangulation& tri,
                                                   CoordSystem system,
                                                   const EnumLimits& limits) {
    if (system == CoordSystem::quad || !tri.finiteKind())
        return enumerateVertexSolutions(system == CoordSystem::quad
                                            ? quadMatchingSystem(tri)
                                            : standardMatchingSystem(tri),
                                        limits);
    auto rays = standardVertexViaQuads(tri, limits.maxSolutions);
    std::sort(rays.begin(), rays.end());
    std::vector<NormalVector> out;
    for (auto& r : rays) out.push_back({CoordSystem::standard, std::move(r)});
    return out;
}

namespace {

// Nonzero lattice points of the half-open parallelepiped spanned by the
// given independent rays (columns of R): one representative per nonzero
// class of (Z^n cap span R)/(R Z^k), located via the Smith normal form
// U R V = D: the class of residues y has lambda = V (y_i / d_i), and the
// representative is R frac(lambda).
void parallelepipedPoints(const std::vector<const std::vector<Int>*>& rays, int n,
                          std::set<std::vector<Int>>& out, long long& nodeBudget) {
    int k = int(rays.size());
    IMat R(n, std::vector<Int>(k));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) R[i][j] = (*rays[j])[i];
    SNFResult snf = smithNormalForm(R);
    std::vector<Int> d = snf.diag();
    Int index = 1;
    for (const Int& di : d) index *= di;
    if (index <= 1) return;
    if (index > Int(long(nodeBudget)))
        throw ResourceError("fundamental enumeration exceeded the search budget");
    nodeBudget -= long(index.get_si());
    std::vector<Int> y(k, 0);
    for (Int code = 1; code < index; ++code) {
        Int c = code;
        for (int i = 0; i < k; ++i) {
            y[i] = c % d[i];
            c /= d[i];
        }
        std::vector<mpq_class> lam(k, 0);
        for (int j = 0; j < k; ++j) {
            for (int i = 0; i < k; ++i) {
                mpq_class term(snf.V[j][i], d[i]);
                term.canonicalize();
                lam[j] += term * y[i];
            }
            mpz_class fl;
            mpz_fdiv_q(fl.get_mpz_t(), lam[j].get_num_mpz_t(), lam[j].get_den_mpz_t());
            lam[j] -= fl;
        }
        std::vector<Int> x(n, 0);
        bool integral = true;
        for (int i = 0; i < n && integral; ++i) {
            mpq_class xi = 0;
            for (int j = 0; j < k; ++j) xi += lam[j] * (*rays[j])[i];
            if (xi.get_den() != 1) integral = false;
            else x[i] = xi.get_num();
        }
        bool zero = true;
        for (const Int& v : x)
            if (v != 0) { zero = false; break; }
        if (integral && !zero) out.insert(x);
    }
}

}  // namespace

std::vector<NormalVector> enumerateFundamentalSolutions(const MatchingSystem& sys,
                                                        const EnumLimits& limits) {
    int n = sys.coordCount();
    int T = sys.tets;
    auto vertex = enumerateVertexSolutions(sys, limits);
    if (vertex.empty()) return {};

    // Admissibility partitions the solution cone into sign-support faces,
    // one per choice of allowed quad type in each tetrahedron. Each is a
    // genuine face of the cone, so its extreme rays are the admissible
    // vertex solutions supported inside it; every Hilbert element of the
    // face lies, by Caratheodory, in the parallelepiped of an independent
    // subset of those rays. Collect candidates per face and keep the
    // minimal ones.
    std::set<std::vector<Int>> candidates;
    for (const auto& v : vertex) candidates.insert(v.coords);

    long long nodeBudget = limits.maxNodes > 0 ? limits.maxNodes : (1LL << 62);
    std::set<std::vector<int>> processed;
    long long faces = 1;
    for (int t = 0; t < T; ++t) faces *= 3;
    for (long long code = 0; code < std::max(1LL, faces); ++code) {
        std::vector<bool> allowed(n, true);
        long long c = code;
        for (int t = 0; t < T; ++t) {
            int pick = int(c % 3);
            c /= 3;
            int qb = sys.quadBase(t);
            for (int kq = 0; kq < 3; ++kq) allowed[qb + kq] = kq == pick;
        }
        std::vector<int> members;
        for (size_t i = 0; i < vertex.size(); ++i) {
            bool inside = true;
            for (int j = 0; j < n && inside; ++j)
                if (vertex[i].coords[j] != 0 && !allowed[j]) inside = false;
            if (inside) members.push_back(int(i));
        }
        if (int(members.size()) < 2) continue;
        if (!processed.insert(members).second) continue;

        IMat rayMat;
        for (int i : members) rayMat.push_back(vertex[i].coords);
        int dim = integerRank(rayMat);
        // all independent subsets of size dim
        std::vector<int> pick;
        std::function<void(size_t)> rec = [&](size_t from) {
            if (int(pick.size()) == dim) {
                if (--nodeBudget < 0)
                    throw ResourceError("fundamental enumeration exceeded the search budget");
                std::vector<const std::vector<Int>*> rays;
                IMat check;
                for (int i : pick) {
                    rays.push_back(&vertex[i].coords);
                    check.push_back(vertex[i].coords);
                }
                if (integerRank(check) == dim)
                    parallelepipedPoints(rays, n, candidates, nodeBudget);
                return;
            }
            for (size_t i = from; i < members.size(); ++i) {
                pick.push_back(members[i]);
                rec(i + 1);
                pick.pop_back();
            }
        };
        rec(0);
        if (limits.maxSolutions > 0 && (long long)candidates.size() > limits.maxSolutions)
            throw ResourceError("fundamental enumeration exceeded the solution budget");
    }
    // Keep minimal elements: every Hilbert element is among the candidates,
    // so anything decomposable dominates a strictly smaller candidate.
    std::vector<std::vector<Int>> all(candidates.begin(), candidates.end());
    std::vector<NormalVector> out;
    for (size_t i = 0; i < all.size(); ++i) {
        bool decomposable = false;
        for (size_t j = 0; j < all.size() && !decomposable; ++j) {
            if (i == j) continue;
            bool le = true, strict = false;
            for (int k = 0; k < n; ++k) {
                if (all[j][k] > all[i][k]) { le = false; break; }
                if (all[j][k] < all[i][k]) strict = true;
            }
            decomposable = le && strict;
        }
        if (!decomposable) out.push_back({sys.system, all[i]});
    }
    return out;
}

NormalVector quadToStandard(const Triangulation& tri, const NormalVector& quads) {
    if (quads.system != CoordSystem::quad)
        throw TriError("quadToStandard expects quad coordinates");
    if (!admissible(quads)) throw TriError("quad vector is inadmissible");
    if (int(quads.coords.size()) != 3 * tri.size())
        throw TriError("quad vector does not match the triangulation");
    if (tri.finiteKind() && !satisfies(quadMatchingSystem(tri), quads.coords))
        throw TriError("quad vector is unmatchable");

    int n = tri.size();
    NormalVector out;
    out.system = CoordSystem::standard;
    out.coords.assign(7 * n, 0);
    for (int t = 0; t < n; ++t)
        for (int k = 0; k < 3; ++k) out.coords[7 * t + 4 + k] = quads.coords[3 * t + k];

    // Relative triangle levels per vertex class, propagated across faces.
    std::vector<std::vector<Int>> level(n, std::vector<Int>(4));
    std::vector<std::vector<bool>> known(n, std::vector<bool>(4, false));
    auto quadAt = [&](int t, int f, int v) -> const Int& {
        return quads.coords[3 * t + quadPair(kEdgeNum[f][v])];
    };
    for (int vc = 0; vc < tri.vertexClassCount(); ++vc) {
        const auto& inc = tri.vertexInfo(vc).inc;
        auto [t0, v0] = inc.front();
        level[t0][v0] = 0;
        known[t0][v0] = true;
        std::vector<std::pair<int, int>> queue = {{t0, v0}};
        while (!queue.empty()) {
            auto [t, v] = queue.back();
            queue.pop_back();
            for (int f = 0; f < 4; ++f) {
                if (f == v || tri.boundaryFace(t, f)) continue;
                const Gluing& gl = tri.gluing(t, f);
                int t2 = gl.tet, v2 = gl.perm[v];
                Int lvl = level[t][v] + quadAt(t, f, v) - quadAt(t2, gl.face, v2);
                if (known[t2][v2]) {
                    if (level[t2][v2] != lvl)
                        throw TriError("quad vector is unmatchable");
                } else {
                    level[t2][v2] = lvl;
                    known[t2][v2] = true;
                    queue.push_back({t2, v2});
                }
            }
        }
        Int lo = level[t0][v0];
        for (auto [t, v] : inc) lo = std::min(lo, level[t][v]);
        for (auto [t, v] : inc) out.coords[7 * t + v] = level[t][v] - lo;
    }
    if (!satisfies(standardMatchingSystem(tri), out.coords))
        throw TriError("quad vector is unmatchable");
    return out;
}

NormalVector standardToQuad(const NormalVector& v) {
    if (v.system != CoordSystem::standard)
        throw TriError("standardToQuad expects standard coordinates");
    NormalVector out;
    out.system = CoordSystem::quad;
    for (int t = 0; t < v.tets(); ++t)
        for (int k = 0; k < 3; ++k) out.coords.push_back(v.coords[7 * t + 4 + k]);
    return out;
}

NormalVector vertexLinkVector(const Triangulation& tri, int vertexClass) {
    NormalVector out;
    out.system = CoordSystem::standard;
    out.coords.assign(7 * tri.size(), 0);
    for (auto [t, v] : tri.vertexInfo(vertexClass).inc) out.coords[7 * t + v] = 1;
    return out;
}

std::string triangulationHash(const Triangulation& tri) {
    std::string table = toGluingTable(tri);
    unsigned long long h = 1469598103934665603ULL;
    for (unsigned char c : table) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

std::string serializeNormalVector(const Triangulation& tri, const NormalVector& v) {
    std::string s = v.system == CoordSystem::standard ? "standard" : "quad";
    s += "|" + triangulationHash(tri) + "|";
    for (size_t i = 0; i < v.coords.size(); ++i) {
        if (i) s += ",";
        s += v.coords[i].get_str();
    }
    return s;
}

}  // namespace hyp3
