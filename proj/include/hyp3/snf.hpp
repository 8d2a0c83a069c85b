#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hyp3 {

using Int = mpz_class;
using IMat = std::vector<std::vector<Int>>;

inline int rows(const IMat& a) { return int(a.size()); }
inline int cols(const IMat& a) { return a.empty() ? 0 : int(a[0].size()); }

IMat identityMat(int n);
IMat matMul(const IMat& a, const IMat& b);
Int detBareiss(IMat a);  // exact determinant

struct SNFResult {
    IMat U, D, V;  // U*A*V = D, U and V unimodular, D diagonal with d1 | d2 | ...
    int rank = 0;
    std::vector<Int> diag() const {
        std::vector<Int> d;
        int m = rows(D), n = cols(D);
        for (int i = 0; i < m && i < n; ++i) d.push_back(D[i][i]);
        return d;
    }
};

SNFResult smithNormalForm(const IMat& a);

// Columns form a basis of the integer kernel {x : a*x = 0}; the basis is
// saturated (spans a direct summand).
IMat kernelBasis(const IMat& a);

// Solve a*x = b exactly over the integers; false if no integral solution.
bool solveIntegral(const IMat& a, const std::vector<Int>& b, std::vector<Int>& x);

}  // namespace hyp3
