#include "posetpoly/linalg.hpp"

#include <algorithm>

#include "posetpoly/errors.hpp"

namespace posetpoly {

int rankOf(RatMat m) {
    size_t rows = m.size();
    if (rows == 0) return 0;
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

Rat determinant(RatMat m) {
    size_t n = m.size();
    Rat det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != c) {
            std::swap(m[c], m[pivot]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[c][c];
            for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

void scaleRowToCoprimeIntegers(RatVec& row) {
    mpz_class lcm(1);
    for (const Rat& x : row)
        if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_class gcd(0);
    for (Rat& x : row) {
        x *= Rat(lcm);
        if (x != 0) mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), x.get_num().get_mpz_t());
    }
    if (gcd > 1)
        for (Rat& x : row) x /= Rat(gcd);
}

std::vector<int> rrefHighPivot(RatMat& m, size_t pivotCols) {
    size_t rows = m.size();
    std::vector<int> pivots;
    if (rows == 0) return pivots;
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t ci = std::min(pivotCols, cols); ci-- > 0 && r < rows;) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][ci] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        Rat lead = m[r][ci];
        for (size_t j = 0; j < cols; ++j) m[r][j] /= lead;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][ci] == 0) continue;
            Rat f = m[i][ci];
            for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(ci));
        ++r;
    }
    return pivots;
}

void reduceModuloRows(RatVec& row, const RatMat& rref, const std::vector<int>& pivots) {
    for (size_t k = 0; k < rref.size(); ++k) {
        int c = pivots[k];
        if (row[c] == 0) continue;
        Rat f = row[c] / rref[k][c];
        for (size_t j = 0; j < row.size(); ++j) row[j] -= f * rref[k][j];
    }
}

std::optional<AffineSolution> solveAffine(const RatMat& a, const RatVec& b, size_t cols) {
    size_t rows = a.size();
    if (rows == 0) {
        AffineSolution s;
        s.particular.assign(cols, Rat(0));
        for (size_t c = 0; c < cols; ++c) {
            RatVec v(cols, Rat(0));
            v[c] = 1;
            s.basis.push_back(std::move(v));
        }
        return s;
    }
    RatMat aug(rows, RatVec(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    // Forward elimination with standard left-to-right pivots.
    std::vector<int> pivotCol;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && aug[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(aug[r], aug[pivot]);
        Rat lead = aug[r][c];
        for (size_t j = 0; j <= cols; ++j) aug[r][j] /= lead;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            Rat f = aug[i][c];
            for (size_t j = 0; j <= cols; ++j) aug[i][j] -= f * aug[r][j];
        }
        pivotCol.push_back(static_cast<int>(c));
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (aug[i][cols] != 0) return std::nullopt;

    AffineSolution s;
    s.particular.assign(cols, Rat(0));
    std::vector<bool> isPivot(cols, false);
    for (size_t k = 0; k < pivotCol.size(); ++k) {
        isPivot[pivotCol[k]] = true;
        s.particular[pivotCol[k]] = aug[k][cols];
    }
    for (size_t c = 0; c < cols; ++c) {
        if (isPivot[c]) continue;
        RatVec v(cols, Rat(0));
        v[c] = 1;
        for (size_t k = 0; k < pivotCol.size(); ++k) v[pivotCol[k]] = -aug[k][c];
        s.basis.push_back(std::move(v));
    }
    return s;
}

} // namespace posetpoly
