#ifndef POSETPOLY_LINALG_HPP
#define POSETPOLY_LINALG_HPP

#include <optional>
#include <vector>

#include "posetpoly/rational.hpp"

namespace posetpoly {

int rankOf(RatMat m);

Rat determinant(RatMat m);

/// Scales a row by a positive rational so every entry is an integer and the
/// entry gcd is 1. Does not flip orientation.
void scaleRowToCoprimeIntegers(RatVec& row);

/// Reduced row echelon form where only columns < pivotCols are eligible as
/// pivots, scanned right to left. Returns the pivot column per produced row;
/// rows beyond pivots.size() are zero in all eligible columns (they may
/// still carry a nonzero tail, which callers must inspect). Pivoting on the
/// highest column means reducing a row modulo the span eliminates the
/// lexicographically largest variables, the convention used for every
/// canonical constraint form in this library.
std::vector<int> rrefHighPivot(RatMat& m, size_t pivotCols);

/// Reduces `row` modulo the span of `rref` rows (with `pivots` from
/// rrefHighPivot). Affine rows: the last column is the constant term and is
/// never chosen as pivot by callers.
void reduceModuloRows(RatVec& row, const RatMat& rref, const std::vector<int>& pivots);

struct AffineSolution {
    RatVec particular;          // one solution of A x = b
    std::vector<RatVec> basis;  // basis of the homogeneous solution space
};

/// Solves A x = b exactly over `cols` unknowns. Returns nullopt when
/// inconsistent. With no rows the solution space is all of R^cols.
std::optional<AffineSolution> solveAffine(const RatMat& a, const RatVec& b, size_t cols);

} // namespace posetpoly

#endif
