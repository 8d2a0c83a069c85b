#include <hyp3/snf.hpp>

#include <algorithm>
#include <stdexcept>

namespace hyp3 {

IMat identityMat(int n) {
    IMat m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat matMul(const IMat& a, const IMat& b) {
    int m = rows(a), k = cols(a), n = cols(b);
    if (k != rows(b)) throw std::logic_error("matMul size mismatch");
    IMat c(m, std::vector<Int>(n, 0));
    for (int i = 0; i < m; ++i)
        for (int l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (int j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

Int detBareiss(IMat a) {
    int n = rows(a);
    if (n == 0) return 1;
    if (cols(a) != n) throw std::logic_error("detBareiss: not square");
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

namespace {

struct Worker {
    IMat D, U, V;
    int m, n;

    explicit Worker(const IMat& a) : D(a), m(rows(a)), n(cols(a)) {
        U = identityMat(m);
        V = identityMat(n);
    }

    void swapRows(int i, int j) {
        if (i == j) return;
        std::swap(D[i], D[j]);
        std::swap(U[i], U[j]);
    }
    void swapCols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < m; ++r) std::swap(D[r][i], D[r][j]);
        for (int r = 0; r < n; ++r) std::swap(V[r][i], V[r][j]);
    }
    // row dst += c * row src
    void addRow(int dst, int src, const Int& c) {
        for (int j = 0; j < n; ++j) D[dst][j] += c * D[src][j];
        for (int j = 0; j < m; ++j) U[dst][j] += c * U[src][j];
    }
    void addCol(int dst, int src, const Int& c) {
        for (int i = 0; i < m; ++i) D[i][dst] += c * D[i][src];
        for (int i = 0; i < n; ++i) V[i][dst] += c * V[i][src];
    }
    void negRow(int i) {
        for (int j = 0; j < n; ++j) D[i][j] = -D[i][j];
        for (int j = 0; j < m; ++j) U[i][j] = -U[i][j];
    }

    bool findPivot(int k, int& pi, int& pj) {
        pi = -1;
        for (int i = k; i < m; ++i)
            for (int j = k; j < n; ++j)
                if (D[i][j] != 0 && (pi < 0 || cmpabs(D[i][j], D[pi][pj]) < 0)) {
                    pi = i;
                    pj = j;
                }
        return pi >= 0;
    }

    static int cmpabs(const Int& a, const Int& b) {
        return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
    }

    SNFResult run() {
        int k = 0;
        int lim = std::min(m, n);
        while (k < lim) {
            int pi, pj;
            if (!findPivot(k, pi, pj)) break;
            swapRows(k, pi);
            swapCols(k, pj);
            bool clean = true;
            for (int i = k + 1; i < m; ++i) {
                if (D[i][k] == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), D[i][k].get_mpz_t(), D[k][k].get_mpz_t());
                if (q != 0) addRow(i, k, -q);
                if (D[i][k] != 0) clean = false;
            }
            for (int j = k + 1; j < n; ++j) {
                if (D[k][j] == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), D[k][j].get_mpz_t(), D[k][k].get_mpz_t());
                if (q != 0) addCol(j, k, -q);
                if (D[k][j] != 0) clean = false;
            }
            if (!clean) continue;
            // row and column k are clear beyond the pivot; enforce that the
            // pivot divides everything left in the submatrix
            bool divides = true;
            for (int i = k + 1; i < m && divides; ++i)
                for (int j = k + 1; j < n && divides; ++j)
                    if (D[i][j] % D[k][k] != 0) {
                        addRow(k, i, 1);
                        divides = false;
                    }
            if (!divides) continue;
            if (D[k][k] < 0) negRow(k);
            ++k;
        }
        SNFResult r;
        r.U = std::move(U);
        r.D = std::move(D);
        r.V = std::move(V);
        r.rank = k;
        return r;
    }
};

}  // namespace

SNFResult smithNormalForm(const IMat& a) {
    if (rows(a) == 0 || cols(a) == 0) {
        SNFResult r;
        r.U = identityMat(rows(a));
        r.V = identityMat(cols(a));
        r.D = a;
        r.rank = 0;
        return r;
    }
    return Worker(a).run();
}

IMat kernelBasis(const IMat& a) {
    int n = cols(a);
    SNFResult s = smithNormalForm(a);
    IMat k(n, std::vector<Int>(n - s.rank, 0));
    for (int i = 0; i < n; ++i)
        for (int j = s.rank; j < n; ++j) k[i][j - s.rank] = s.V[i][j];
    return k;
}

bool solveIntegral(const IMat& a, const std::vector<Int>& b, std::vector<Int>& x) {
    int m = rows(a), n = cols(a);
    if (int(b.size()) != m) throw std::logic_error("solveIntegral size mismatch");
    SNFResult s = smithNormalForm(a);
    // U a V = D; a x = b  =>  D (V^-1 x) = U b
    std::vector<Int> ub(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) ub[i] += s.U[i][j] * b[j];
    std::vector<Int> w(n, 0);
    for (int i = 0; i < m; ++i) {
        Int d = (i < n) ? s.D[i][i] : Int(0);
        if (d == 0) {
            if (ub[i] != 0) return false;
        } else {
            if (ub[i] % d != 0) return false;
            if (i < n) w[i] = ub[i] / d;
        }
    }
    x.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x[i] += s.V[i][j] * w[j];
    return true;
}

}  // namespace hyp3
