// Vertex enumeration core: incremental double description over exact
// rationals. The polytope's equalities are substituted away first, the
// remaining inequality system is homogenized to a cone in one extra
// coordinate, and rays are grown constraint by constraint.

#include <algorithm>

#include "posetpoly/linalg.hpp"
#include "posetpoly/polyhedra.hpp"

namespace posetpoly {

namespace {

struct Ray {
    RatVec coords;               // length k+1, scaled to coprime integers
    std::vector<uint64_t> tight; // bitmask over all constraint rows
};

Rat dot(const RatVec& a, const RatVec& b) {
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

void setBit(std::vector<uint64_t>& mask, size_t i) { mask[i >> 6] |= uint64_t(1) << (i & 63); }

bool subsetOf(const std::vector<uint64_t>& sub, const std::vector<uint64_t>& super) {
    for (size_t k = 0; k < sub.size(); ++k)
        if (sub[k] & ~super[k]) return false;
    return true;
}

std::vector<uint64_t> tightMaskOf(const RatVec& ray, const std::vector<RatVec>& rows, size_t processed,
                                  size_t words) {
    std::vector<uint64_t> mask(words, 0);
    for (size_t r = 0; r < processed; ++r)
        if (dot(rows[r], ray) == 0) setBit(mask, r);
    return mask;
}

// Extreme rays of {x : row . x >= 0 for all rows} for a pointed cone with
// full-rank row set. rows[0..k1-1] must form a nonsingular initial basis;
// the remaining rows are inserted in order, so at every step the processed
// constraints are exactly a prefix of the row list.
std::vector<Ray> ddCore(const std::vector<RatVec>& rows, size_t k1, const VertexEnumOptions& opt) {
    size_t words = (rows.size() + 63) / 64;

    // Initial simplicial cone: rays are the columns of the inverse of the
    // basis row matrix.
    RatMat aug(k1, RatVec(2 * k1, Rat(0)));
    for (size_t i = 0; i < k1; ++i) {
        for (size_t j = 0; j < k1; ++j) aug[i][j] = rows[i][j];
        aug[i][k1 + i] = 1;
    }
    for (size_t c = 0; c < k1; ++c) {
        size_t pivot = c;
        while (pivot < k1 && aug[pivot][c] == 0) ++pivot;
        if (pivot == k1) throw InternalError("initial cone basis is singular");
        std::swap(aug[c], aug[pivot]);
        Rat lead = aug[c][c];
        for (size_t j = 0; j < 2 * k1; ++j) aug[c][j] /= lead;
        for (size_t i = 0; i < k1; ++i) {
            if (i == c || aug[i][c] == 0) continue;
            Rat f = aug[i][c];
            for (size_t j = 0; j < 2 * k1; ++j) aug[i][j] -= f * aug[c][j];
        }
    }
    size_t processed = k1;
    std::vector<Ray> rays;
    for (size_t j = 0; j < k1; ++j) {
        Ray r;
        r.coords.resize(k1);
        for (size_t i = 0; i < k1; ++i) r.coords[i] = aug[i][k1 + j];
        scaleRowToCoprimeIntegers(r.coords);
        r.tight = tightMaskOf(r.coords, rows, processed, words);
        rays.push_back(std::move(r));
    }

    for (size_t rowIdx = k1; rowIdx < rows.size(); ++rowIdx) {
        if (opt.deadline && std::chrono::steady_clock::now() > *opt.deadline)
            throw ScaleError("vertex enumeration exceeded the time budget");
        if (rays.size() > opt.maxRays) throw ScaleError("vertex enumeration exceeded the ray cap");
        const RatVec& row = rows[rowIdx];
        std::vector<Rat> vals(rays.size());
        std::vector<int> sign(rays.size());
        bool anyNeg = false;
        for (size_t i = 0; i < rays.size(); ++i) {
            vals[i] = dot(row, rays[i].coords);
            sign[i] = vals[i] > 0 ? 1 : (vals[i] < 0 ? -1 : 0);
            if (sign[i] < 0) anyNeg = true;
        }
        ++processed;
        if (!anyNeg) {
            for (size_t i = 0; i < rays.size(); ++i)
                if (sign[i] == 0) setBit(rays[i].tight, rowIdx);
            continue;
        }
        auto adjacent = [&](size_t p, size_t m) {
            std::vector<uint64_t> common(words);
            for (size_t w = 0; w < words; ++w) common[w] = rays[p].tight[w] & rays[m].tight[w];
            for (size_t i = 0; i < rays.size(); ++i) {
                if (i == p || i == m) continue;
                if (subsetOf(common, rays[i].tight)) return false;
            }
            return true;
        };
        std::vector<Ray> fresh;
        for (size_t p = 0; p < rays.size(); ++p) {
            if (sign[p] <= 0) continue;
            for (size_t m = 0; m < rays.size(); ++m) {
                if (sign[m] >= 0) continue;
                if (!adjacent(p, m)) continue;
                Ray r;
                r.coords.resize(k1);
                for (size_t j = 0; j < k1; ++j)
                    r.coords[j] = vals[p] * rays[m].coords[j] - vals[m] * rays[p].coords[j];
                scaleRowToCoprimeIntegers(r.coords);
                r.tight = tightMaskOf(r.coords, rows, processed, words);
                fresh.push_back(std::move(r));
            }
        }
        std::vector<Ray> next;
        next.reserve(rays.size() + fresh.size());
        for (size_t i = 0; i < rays.size(); ++i) {
            if (sign[i] < 0) continue;
            if (sign[i] == 0) setBit(rays[i].tight, rowIdx);
            next.push_back(std::move(rays[i]));
        }
        for (auto& r : fresh) next.push_back(std::move(r));
        rays = std::move(next);
        if (rays.empty()) return rays; // cone collapsed to the origin
    }
    return rays;
}

} // namespace

VRep verticesOf(const HRep& h, const VertexEnumOptions& opt) {
    int d = h.dim;
    for (const auto& row : h.ineqs)
        if (static_cast<int>(row.a.size()) != d) throw ArgError("inequality row has wrong dimension");
    for (const auto& row : h.eqs)
        if (static_cast<int>(row.a.size()) != d) throw ArgError("equality row has wrong dimension");

    if (d == 0) {
        for (const auto& row : h.ineqs)
            if (row.b > 0) throw InfeasibleError("contradictory constraint in dimension zero");
        for (const auto& row : h.eqs)
            if (row.b != 0) throw InfeasibleError("contradictory equation in dimension zero");
        VRep v;
        v.dim = 0;
        v.verts.push_back({});
        return v;
    }

    // Substitute the equalities: x = x0 + N t.
    RatVec x0(d, Rat(0));
    std::vector<RatVec> basis;
    if (!h.eqs.empty()) {
        RatMat a;
        RatVec b;
        for (const auto& row : h.eqs) {
            a.push_back(row.a);
            b.push_back(row.b);
        }
        auto sol = solveAffine(a, b, d);
        if (!sol) throw InfeasibleError("equality system is inconsistent");
        x0 = sol->particular;
        basis = sol->basis;
    } else {
        for (int c = 0; c < d; ++c) {
            RatVec v(d, Rat(0));
            v[c] = 1;
            basis.push_back(std::move(v));
        }
    }
    size_t k = basis.size();

    // Reduced inequalities a'.t >= b' with a' = a.N, b' = b - a.x0.
    std::vector<RatVec> rows; // homogenized [a', -b'] over k+1 coordinates
    for (const auto& row : h.ineqs) {
        RatVec r(k + 1, Rat(0));
        bool nonzero = false;
        for (size_t j = 0; j < k; ++j) {
            r[j] = dot(row.a, basis[j]);
            if (r[j] != 0) nonzero = true;
        }
        Rat rhs = row.b - dot(row.a, x0);
        if (!nonzero) {
            if (rhs > 0) throw InfeasibleError("constraint excludes the whole affine hull");
            continue;
        }
        r[k] = -rhs;
        scaleRowToCoprimeIntegers(r);
        rows.push_back(std::move(r));
    }
    if (k == 0) {
        VRep v;
        v.dim = d;
        v.verts.push_back(x0);
        return v;
    }
    {
        RatVec sRow(k + 1, Rat(0));
        sRow[k] = 1;
        rows.push_back(std::move(sRow));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    // Pick a nonsingular (k+1)-subset of rows as the initial simplicial cone.
    std::vector<size_t> basisIdx, restIdx;
    {
        RatMat rrefRows;
        auto tryAdd = [&](size_t idx) {
            RatVec probe = rows[idx];
            for (const auto& br : rrefRows) {
                size_t lead = 0;
                while (lead < br.size() && br[lead] == 0) ++lead;
                if (lead < probe.size() && probe[lead] != 0) {
                    Rat f = probe[lead] / br[lead];
                    for (size_t j = 0; j < probe.size(); ++j) probe[j] -= f * br[j];
                }
            }
            size_t lead = 0;
            while (lead < probe.size() && probe[lead] == 0) ++lead;
            if (lead == probe.size()) return false;
            // keep rrefRows ordered by leading column
            rrefRows.push_back(probe);
            std::sort(rrefRows.begin(), rrefRows.end(), [](const RatVec& a, const RatVec& b) {
                size_t la = 0, lb = 0;
                while (la < a.size() && a[la] == 0) ++la;
                while (lb < b.size() && b[lb] == 0) ++lb;
                return la < lb;
            });
            return true;
        };
        std::vector<bool> inBasis(rows.size(), false);
        for (size_t pass = 0; pass < rows.size() && basisIdx.size() < k + 1; ++pass) {
            if (tryAdd(pass)) {
                basisIdx.push_back(pass);
                inBasis[pass] = true;
            }
        }
        bool pointed = basisIdx.size() == k + 1;
        if (!pointed) {
            // The cone has lineality; the feasible set is empty or unbounded.
            // Slice along the lineality to decide which.
            RatMat m;
            for (const auto& r : rows) m.push_back(r);
            // Move the s column first so the slice keeps it.
            for (auto& r : m) std::rotate(r.begin(), r.end() - 1, r.end());
            std::vector<size_t> pivotCols;
            {
                RatMat work = m;
                size_t rr = 0;
                for (size_t c = 0; c < k + 1 && rr < work.size(); ++c) {
                    size_t pivot = rr;
                    while (pivot < work.size() && work[pivot][c] == 0) ++pivot;
                    if (pivot == work.size()) continue;
                    std::swap(work[rr], work[pivot]);
                    for (size_t i = rr + 1; i < work.size(); ++i) {
                        if (work[i][c] == 0) continue;
                        Rat f = work[i][c] / work[rr][c];
                        for (size_t j = c; j < k + 1; ++j) work[i][j] -= f * work[rr][j];
                    }
                    pivotCols.push_back(c);
                    ++rr;
                }
            }
            if (pivotCols.empty() || pivotCols[0] != 0)
                throw InternalError("homogenization column lost rank");
            size_t kk = pivotCols.size(); // sliced space dimension incl. s
            std::vector<RatVec> sliced;
            for (const auto& r : m) {
                RatVec s(kk);
                bool nonzero = false;
                for (size_t j = 0; j < kk; ++j) {
                    s[j] = r[pivotCols[j]];
                    if (s[j] != 0) nonzero = true;
                }
                if (!nonzero) continue;
                // rotate s back to the last position
                std::rotate(s.begin(), s.begin() + 1, s.end());
                scaleRowToCoprimeIntegers(s);
                sliced.push_back(std::move(s));
            }
            std::sort(sliced.begin(), sliced.end());
            sliced.erase(std::unique(sliced.begin(), sliced.end()), sliced.end());
            HRep probe;
            probe.dim = static_cast<int>(kk - 1);
            for (const auto& r : sliced) {
                if (std::all_of(r.begin(), r.end() - 1, [](const Rat& x) { return x == 0; })) {
                    if (-r.back() > 0) throw InfeasibleError("constraint system has no solution");
                    continue;
                }
                LinRow lr;
                lr.a.assign(r.begin(), r.end() - 1);
                lr.b = -r.back();
                probe.ineqs.push_back(std::move(lr));
            }
            verticesOf(probe); // throws InfeasibleError when empty
            throw UnboundedError("feasible region is unbounded");
        }
        for (size_t i = 0; i < rows.size(); ++i)
            if (!inBasis[i]) restIdx.push_back(i);
    }

    // Permute so the basis is a prefix and insertion order matches indices.
    std::vector<RatVec> ordered;
    ordered.reserve(rows.size());
    for (size_t i : basisIdx) ordered.push_back(rows[i]);
    for (size_t i : restIdx) ordered.push_back(rows[i]);

    std::vector<Ray> rays = ddCore(ordered, k + 1, opt);
    if (rays.empty()) throw InfeasibleError("constraint system has no solution");

    VRep out;
    out.dim = d;
    bool sawVertex = false;
    for (const auto& r : rays) {
        const Rat& s = r.coords[k];
        if (s == 0) throw UnboundedError("feasible region has a recession ray");
        if (s < 0) throw InternalError("ray violates the homogenization constraint");
        sawVertex = true;
        RatVec x = x0;
        for (size_t j = 0; j < k; ++j) {
            Rat t = r.coords[j] / s;
            if (t == 0) continue;
            for (int c = 0; c < d; ++c) x[c] += t * basis[j][c];
        }
        out.verts.push_back(std::move(x));
    }
    if (!sawVertex) throw InfeasibleError("constraint system has no solution");
    std::sort(out.verts.begin(), out.verts.end());
    return out;
}

} // namespace posetpoly
