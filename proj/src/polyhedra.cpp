#include "posetpoly/polyhedra.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <unordered_map>

#include "posetpoly/linalg.hpp"

namespace posetpoly {

size_t Bits::count() const {
    size_t c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
}

void Bits::forEach(const std::function<void(size_t)>& f) const {
    for (size_t k = 0; k < w_.size(); ++k) {
        uint64_t x = w_[k];
        while (x) {
            int b = std::countr_zero(x);
            f(k * 64 + b);
            x &= x - 1;
        }
    }
}

namespace {

Rat dot(const RatVec& a, const RatVec& b) {
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

RatVec toExtended(const LinRow& row) {
    RatVec ext = row.a;
    ext.push_back(row.b);
    return ext;
}

LinRow fromExtended(const RatVec& ext) {
    LinRow row;
    row.a.assign(ext.begin(), ext.end() - 1);
    row.b = ext.back();
    return row;
}

bool isZeroRow(const RatVec& ext) {
    return std::all_of(ext.begin(), ext.end() - 1, [](const Rat& x) { return x == 0; });
}

/// Canonical equality basis of the affine hull of a vertex set, as extended
/// rows [a | b] meaning a.x = b, in high-pivot reduced echelon form.
struct HullBasis {
    RatMat rows;             // extended rows, canonical
    std::vector<int> pivots; // pivot column per row (all < dim)
    int hullDim = 0;         // dimension of the affine hull
};

HullBasis affineHull(const std::vector<RatVec>& verts, int dim) {
    HullBasis hull;
    if (verts.empty()) throw ArgError("affine hull of an empty point set");
    // Directions of the hull.
    RatMat diffs;
    for (size_t i = 1; i < verts.size(); ++i) {
        RatVec d(dim);
        for (int c = 0; c < dim; ++c) d[c] = verts[i][c] - verts[0][c];
        diffs.push_back(std::move(d));
    }
    // a is normal to the hull iff diffs . a = 0.
    auto sol = solveAffine(diffs, RatVec(diffs.size(), Rat(0)), dim);
    RatMat rows;
    for (const auto& a : sol->basis) {
        RatVec ext = a;
        ext.push_back(dot(a, verts[0]));
        rows.push_back(std::move(ext));
    }
    hull.pivots = rrefHighPivot(rows, dim);
    rows.resize(hull.pivots.size());
    for (auto& r : rows) scaleRowToCoprimeIntegers(r);
    for (auto& r : rows) {
        for (const Rat& x : r)
            if (x != 0) {
                if (x < 0)
                    for (Rat& y : r) y = -y;
                break;
            }
    }
    hull.rows = std::move(rows);
    hull.hullDim = dim - static_cast<int>(hull.rows.size());
    return hull;
}

std::vector<LinRow> hullEqualities(const HullBasis& hull) {
    std::vector<LinRow> eqs;
    for (const auto& r : hull.rows) eqs.push_back(fromExtended(r));
    std::sort(eqs.begin(), eqs.end());
    return eqs;
}

/// Reduces an inequality row modulo the hull equalities and normalizes.
/// Returns nullopt when the row vanishes on the hull.
std::optional<LinRow> canonicalIneq(const LinRow& row, const HullBasis& hull) {
    RatVec ext = toExtended(row);
    reduceModuloRows(ext, hull.rows, hull.pivots);
    if (isZeroRow(ext)) return std::nullopt;
    LinRow out = fromExtended(ext);
    normalizeInequality(out);
    return out;
}

/// Chart columns for the affine hull: complement of the hull pivots.
/// Projection to these coordinates is an affine bijection on the hull.
std::vector<int> chartColumns(const HullBasis& hull, int dim) {
    std::vector<bool> isPivot(dim, false);
    for (int p : hull.pivots) isPivot[p] = true;
    std::vector<int> cols;
    for (int c = 0; c < dim; ++c)
        if (!isPivot[c]) cols.push_back(c);
    return cols;
}

int rankAppend(RatMat& basis, RatVec v) {
    for (const auto& br : basis) {
        size_t lead = 0;
        while (lead < br.size() && br[lead] == 0) ++lead;
        if (lead < v.size() && v[lead] != 0) {
            Rat f = v[lead] / br[lead];
            for (size_t j = 0; j < v.size(); ++j) v[j] -= f * br[j];
        }
    }
    size_t lead = 0;
    while (lead < v.size() && v[lead] == 0) ++lead;
    if (lead == v.size()) return 0;
    basis.push_back(std::move(v));
    std::sort(basis.begin(), basis.end(), [](const RatVec& a, const RatVec& b) {
        size_t la = 0, lb = 0;
        while (la < a.size() && a[la] == 0) ++la;
        while (lb < b.size() && b[lb] == 0) ++lb;
        return la < lb;
    });
    return 1;
}

/// Affine dimension of the vertices selected by `sel`.
int faceDimension(const std::vector<RatVec>& verts, const Bits& sel, int dim, int stopAt) {
    RatMat basis;
    int first = -1;
    int rank = 0;
    for (size_t i = 0; i < verts.size() && rank < stopAt; ++i) {
        if (!sel.test(i)) continue;
        if (first < 0) {
            first = static_cast<int>(i);
            continue;
        }
        RatVec d(dim);
        for (int c = 0; c < dim; ++c) d[c] = verts[i][c] - verts[first][c];
        rank += rankAppend(basis, std::move(d));
    }
    if (first < 0) throw InternalError("dimension of an empty face");
    return rank;
}

struct FaceKey {
    std::vector<uint64_t> words;
    bool operator==(const FaceKey&) const = default;
};

struct FaceKeyHash {
    size_t operator()(const FaceKey& k) const {
        size_t h = 1469598103934665603ull;
        for (uint64_t w : k.words) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

void normalizeInequality(LinRow& row) {
    RatVec ext = toExtended(row);
    scaleRowToCoprimeIntegers(ext);
    row = fromExtended(ext);
}

void normalizeEquality(LinRow& row) {
    RatVec ext = toExtended(row);
    scaleRowToCoprimeIntegers(ext);
    for (const Rat& x : ext)
        if (x != 0) {
            if (x < 0)
                for (Rat& y : ext) y = -y;
            break;
        }
    row = fromExtended(ext);
}

int affineDimension(const std::vector<RatVec>& points) {
    if (points.empty()) return -1;
    RatMat basis;
    int rank = 0;
    for (size_t i = 1; i < points.size(); ++i) {
        RatVec d(points[0].size());
        for (size_t c = 0; c < points[0].size(); ++c) d[c] = points[i][c] - points[0][c];
        rank += rankAppend(basis, std::move(d));
    }
    return rank;
}

HRep facetsOf(const VRep& v) {
    if (v.verts.empty()) throw ArgError("facet enumeration needs at least one point");
    int d = v.dim;
    std::vector<RatVec> pts = v.verts;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    HullBasis hull = affineHull(pts, d);
    HRep out;
    out.dim = d;
    out.eqs = hullEqualities(hull);
    if (hull.hullDim == 0) return out; // a single point: no facets

    std::vector<int> chart = chartColumns(hull, d);
    size_t k = chart.size();
    std::vector<RatVec> t(pts.size(), RatVec(k));
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = 0; j < k; ++j) t[i][j] = pts[i][chart[j]];

    RatVec centroid(k, Rat(0));
    for (const auto& ti : t)
        for (size_t j = 0; j < k; ++j) centroid[j] += ti[j];
    for (size_t j = 0; j < k; ++j) centroid[j] /= Rat(static_cast<long>(t.size()));

    // Polar body {y : (t_i - c) . y <= 1}; its vertices are the facets.
    HRep polar;
    polar.dim = static_cast<int>(k);
    for (const auto& ti : t) {
        LinRow row;
        row.a.resize(k);
        for (size_t j = 0; j < k; ++j) row.a[j] = centroid[j] - ti[j];
        row.b = Rat(-1);
        polar.ineqs.push_back(std::move(row));
    }
    VRep polarVerts = verticesOf(polar);

    for (const auto& y : polarVerts.verts) {
        // y . (t - c) <= 1  ==>  (-y) . t >= -1 - y.c over the chart columns.
        LinRow row;
        row.a.assign(d, Rat(0));
        for (size_t j = 0; j < k; ++j) row.a[chart[j]] = -y[j];
        row.b = Rat(-1) - dot(y, centroid);
        auto canon = canonicalIneq(row, hull);
        if (!canon) throw InternalError("polar vertex induced a trivial facet");
        out.ineqs.push_back(std::move(*canon));
    }
    std::sort(out.ineqs.begin(), out.ineqs.end());
    out.ineqs.erase(std::unique(out.ineqs.begin(), out.ineqs.end()), out.ineqs.end());
    return out;
}

PolytopePair makePair(const HRep& h, const VertexEnumOptions& opt) {
    PolytopePair p;
    p.v = verticesOf(h, opt);
    HullBasis hull = affineHull(p.v.verts, h.dim);
    p.dim = hull.hullDim;
    p.h.dim = h.dim;
    p.h.eqs = hullEqualities(hull);

    std::vector<LinRow> candidates;
    for (const auto& row : h.ineqs) {
        auto canon = canonicalIneq(row, hull);
        if (canon) candidates.push_back(std::move(*canon));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const auto& row : candidates) {
        Bits tight(p.v.verts.size());
        size_t cnt = 0;
        for (size_t i = 0; i < p.v.verts.size(); ++i)
            if (dot(row.a, p.v.verts[i]) == row.b) {
                tight.set(i);
                ++cnt;
            }
        if (cnt == 0) continue;
        if (faceDimension(p.v.verts, tight, h.dim, p.dim) == p.dim - 1) {
            p.h.ineqs.push_back(row);
            p.facetVerts.push_back(std::move(tight));
        }
    }
    p.vertFacets.assign(p.v.verts.size(), Bits(p.h.ineqs.size()));
    for (size_t f = 0; f < p.facetVerts.size(); ++f)
        p.facetVerts[f].forEach([&](size_t i) { p.vertFacets[i].set(f); });
    return p;
}

PolytopePair makePairFromVertices(const VRep& v) {
    PolytopePair p;
    p.h = facetsOf(v);
    p.v.dim = v.dim;
    p.v.verts = v.verts;
    std::sort(p.v.verts.begin(), p.v.verts.end());
    p.v.verts.erase(std::unique(p.v.verts.begin(), p.v.verts.end()), p.v.verts.end());
    p.dim = v.dim - static_cast<int>(p.h.eqs.size());
    for (const auto& row : p.h.ineqs) {
        Bits tight(p.v.verts.size());
        for (size_t i = 0; i < p.v.verts.size(); ++i)
            if (dot(row.a, p.v.verts[i]) == row.b) tight.set(i);
        p.facetVerts.push_back(std::move(tight));
    }
    p.vertFacets.assign(p.v.verts.size(), Bits(p.h.ineqs.size()));
    for (size_t f = 0; f < p.facetVerts.size(); ++f)
        p.facetVerts[f].forEach([&](size_t i) { p.vertFacets[i].set(f); });
    return p;
}

HRep irredundant(const HRep& h) {
    PolytopePair p = makePair(h);
    return p.h;
}

HRep intersectWithEquations(const HRep& h, const std::vector<LinRow>& eqs) {
    HRep combined = h;
    for (const auto& e : eqs) {
        if (static_cast<int>(e.a.size()) != h.dim) throw ArgError("equation has wrong dimension");
        combined.eqs.push_back(e);
    }
    return irredundant(combined);
}

HRep eliminatePairedCoordinates(const HRep& h, const std::vector<int>& pairing) {
    int d = h.dim;
    if (static_cast<int>(pairing.size()) != d) throw PairingError("pairing must cover every coordinate");
    for (int u = 0; u < d; ++u)
        if (pairing[u] == u || pairing[u] < 0 || pairing[u] >= d || pairing[pairing[u]] != u)
            throw PairingError("pairing is not a fixed-point-free involution");

    // Each pair must be glued by an explicit equality x_u + x_{tau(u)} = 1.
    std::vector<LinRow> normEqs = h.eqs;
    for (auto& e : normEqs) normalizeEquality(e);
    std::sort(normEqs.begin(), normEqs.end());
    for (int u = 0; u < d; ++u) {
        if (pairing[u] < u) continue;
        LinRow want;
        want.a.assign(d, Rat(0));
        want.a[u] = 1;
        want.a[pairing[u]] = 1;
        want.b = 1;
        if (!std::binary_search(normEqs.begin(), normEqs.end(), want))
            throw PairingError("missing pairing equality for coordinates " + std::to_string(u) + "," +
                               std::to_string(pairing[u]));
    }

    std::vector<int> repIndex(d, -1);
    int m = 0;
    for (int u = 0; u < d; ++u)
        if (u < pairing[u]) repIndex[u] = m++;

    auto transform = [&](const LinRow& row) {
        LinRow out;
        out.a.assign(m, Rat(0));
        out.b = row.b;
        for (int u = 0; u < d; ++u) {
            if (row.a[u] == 0) continue;
            if (u < pairing[u]) out.a[repIndex[u]] += row.a[u];
            else {
                // x_u = 1 - x_{tau(u)}
                out.a[repIndex[pairing[u]]] -= row.a[u];
                out.b -= row.a[u];
            }
        }
        return out;
    };

    HRep out;
    out.dim = m;
    for (const auto& row : h.ineqs) {
        LinRow t = transform(row);
        if (std::all_of(t.a.begin(), t.a.end(), [](const Rat& x) { return x == 0; })) {
            if (t.b > 0) throw InfeasibleError("pairing substitution exposed an infeasible constraint");
            continue;
        }
        normalizeInequality(t);
        out.ineqs.push_back(std::move(t));
    }
    for (const auto& row : h.eqs) {
        LinRow t = transform(row);
        if (std::all_of(t.a.begin(), t.a.end(), [](const Rat& x) { return x == 0; })) {
            if (t.b != 0) throw InfeasibleError("pairing substitution exposed an inconsistent equation");
            continue;
        }
        normalizeEquality(t);
        out.eqs.push_back(std::move(t));
    }
    std::sort(out.ineqs.begin(), out.ineqs.end());
    out.ineqs.erase(std::unique(out.ineqs.begin(), out.ineqs.end()), out.ineqs.end());
    std::sort(out.eqs.begin(), out.eqs.end());
    out.eqs.erase(std::unique(out.eqs.begin(), out.eqs.end()), out.eqs.end());
    return out;
}

RatVec projectPairedPoint(const RatVec& x, const std::vector<int>& pairing) {
    RatVec out;
    for (size_t u = 0; u < x.size(); ++u)
        if (static_cast<int>(u) < pairing[u]) out.push_back(x[u]);
    return out;
}

std::vector<FaceRec> enumerateFaces(const PolytopePair& p, const FaceEnumOptions& opt) {
    std::vector<FaceRec> faces;
    size_t nv = p.v.verts.size();
    size_t nf = p.h.ineqs.size();
    if (p.dim <= 0) return faces;

    std::unordered_map<FaceKey, size_t, FaceKeyHash> seen;
    std::vector<size_t> queue;

    auto tryInsert = [&](const Bits& vertSel) -> std::optional<size_t> {
        // Closure: all facets containing the selection, then its key.
        Bits facets(nf);
        for (size_t f = 0; f < nf; ++f) facets.set(f);
        bool anyVert = false;
        vertSel.forEach([&](size_t i) {
            facets &= p.vertFacets[i];
            anyVert = true;
        });
        if (!anyVert) return std::nullopt;
        FaceKey key{facets.words()};
        auto it = seen.find(key);
        if (it != seen.end()) return it->second;
        // Vertex set of the closed face.
        Bits verts(nv);
        for (size_t i = 0; i < nv; ++i)
            if (p.vertFacets[i].containsAll(facets)) verts.set(i);
        FaceRec rec;
        rec.dim = faceDimension(p.v.verts, verts, p.v.dim, p.dim);
        rec.verts = std::move(verts);
        rec.facets = std::move(facets);
        if (rec.dim >= p.dim) return std::nullopt; // the whole polytope, not a proper face
        faces.push_back(std::move(rec));
        size_t id = faces.size() - 1;
        seen.emplace(std::move(key), id);
        queue.push_back(id);
        if (faces.size() > opt.maxFaces) throw ScaleError("face enumeration exceeded the face cap");
        return id;
    };

    // Seed with the facets.
    for (size_t f = 0; f < nf; ++f) tryInsert(p.facetVerts[f]);

    size_t processedSinceCheck = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        size_t id = queue[qi];
        for (size_t g = 0; g < nf; ++g) {
            if (faces[id].facets.test(g)) continue;
            Bits sub = faces[id].verts;
            sub &= p.facetVerts[g];
            if (!sub.any()) continue;
            tryInsert(sub);
            if (opt.deadline && ++processedSinceCheck % 256 == 0 &&
                std::chrono::steady_clock::now() > *opt.deadline)
                throw ScaleError("face enumeration exceeded the time budget");
        }
    }
    return faces;
}

FVector fVector(const PolytopePair& p, const FaceEnumOptions& opt) {
    FVector f(std::max(p.dim, 0), 0);
    for (const auto& face : enumerateFaces(p, opt)) ++f[face.dim];
    return f;
}

bool eulerRelationHolds(const FVector& f) {
    int d = static_cast<int>(f.size());
    long long sum = 0;
    for (int i = 0; i < d; ++i) sum += (i % 2 == 0) ? f[i] : -f[i];
    long long expected = 1 - (d % 2 == 0 ? 1 : -1);
    return sum == expected;
}

std::vector<std::pair<int, int>> polytopeEdges(const PolytopePair& p) {
    std::vector<std::pair<int, int>> edges;
    size_t nv = p.v.verts.size();
    size_t words = nv == 0 ? 0 : p.vertFacets[0].words().size();
    for (size_t i = 0; i < nv; ++i) {
        for (size_t j = i + 1; j < nv; ++j) {
            std::vector<uint64_t> common(words);
            for (size_t w = 0; w < words; ++w)
                common[w] = p.vertFacets[i].words()[w] & p.vertFacets[j].words()[w];
            bool edge = true;
            for (size_t k = 0; k < nv && edge; ++k) {
                if (k == i || k == j) continue;
                bool contains = true;
                for (size_t w = 0; w < words && contains; ++w)
                    if (common[w] & ~p.vertFacets[k].words()[w]) contains = false;
                if (contains) edge = false;
            }
            if (edge) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return edges;
}

namespace {

// Joint bipartite color refinement over the two incidence structures with a
// shared palette, so the resulting color ids are comparable between them.
struct IncidenceColors {
    std::vector<long> vert, facet;
};

std::pair<IncidenceColors, IncidenceColors> refineIncidencePair(const PolytopePair& p,
                                                                const PolytopePair& q) {
    IncidenceColors cp, cq;
    cp.vert.assign(p.v.verts.size(), 0);
    cp.facet.assign(p.h.ineqs.size(), 0);
    cq.vert.assign(q.v.verts.size(), 0);
    cq.facet.assign(q.h.ineqs.size(), 0);
    size_t total = cp.vert.size() + cp.facet.size() + 1;
    for (size_t round = 0; round < total; ++round) {
        std::map<std::vector<long>, long> palette;
        auto recolorVerts = [&](const PolytopePair& poly, IncidenceColors& col) {
            std::vector<long> next(col.vert.size());
            for (size_t i = 0; i < col.vert.size(); ++i) {
                std::vector<long> key{col.vert[i]};
                std::vector<long> inc;
                poly.vertFacets[i].forEach([&](size_t f) { inc.push_back(col.facet[f]); });
                std::sort(inc.begin(), inc.end());
                key.insert(key.end(), inc.begin(), inc.end());
                auto [it, ins] = palette.emplace(std::move(key), static_cast<long>(palette.size()));
                next[i] = it->second;
            }
            return next;
        };
        std::vector<long> nvP = recolorVerts(p, cp);
        std::vector<long> nvQ = recolorVerts(q, cq);
        std::map<std::vector<long>, long> palette2;
        auto recolorFacets = [&](const PolytopePair& poly, IncidenceColors& col,
                                 const std::vector<long>& vertColors) {
            std::vector<long> next(col.facet.size());
            for (size_t f = 0; f < col.facet.size(); ++f) {
                std::vector<long> key{col.facet[f]};
                std::vector<long> inc;
                poly.facetVerts[f].forEach([&](size_t i) { inc.push_back(vertColors[i]); });
                std::sort(inc.begin(), inc.end());
                key.insert(key.end(), inc.begin(), inc.end());
                auto [it, ins] = palette2.emplace(std::move(key), static_cast<long>(palette2.size()));
                next[f] = it->second;
            }
            return next;
        };
        std::vector<long> nfP = recolorFacets(p, cp, nvP);
        std::vector<long> nfQ = recolorFacets(q, cq, nvQ);
        bool stable = nvP == cp.vert && nfP == cp.facet && nvQ == cq.vert && nfQ == cq.facet;
        cp.vert = std::move(nvP);
        cp.facet = std::move(nfP);
        cq.vert = std::move(nvQ);
        cq.facet = std::move(nfQ);
        if (stable) break;
    }
    return {cp, cq};
}

} // namespace

bool combEquivalent(const PolytopePair& p, const PolytopePair& q, size_t maxVertices) {
    if (p.v.verts.size() > maxVertices || q.v.verts.size() > maxVertices)
        throw SizeError("combinatorial-equivalence check capped at " + std::to_string(maxVertices) +
                        " vertices");
    if (p.v.verts.size() != q.v.verts.size() || p.h.ineqs.size() != q.h.ineqs.size()) return false;
    if (p.dim != q.dim) return false;
    size_t nv = p.v.verts.size(), nf = p.h.ineqs.size();
    if (nv == 0 || nf == 0) return true; // equal-sized point-like polytopes

    auto [cp, cq] = refineIncidencePair(p, q);
    {
        auto sortedCopy = [](std::vector<long> v) {
            std::sort(v.begin(), v.end());
            return v;
        };
        if (sortedCopy(cp.vert) != sortedCopy(cq.vert)) return false;
        if (sortedCopy(cp.facet) != sortedCopy(cq.facet)) return false;
    }

    // Backtracking over the union of vertices and facets, most constrained
    // color classes first. Nodes 0..nv-1 are vertices, nv..nv+nf-1 facets.
    size_t total = nv + nf;
    std::vector<long> colorP(total), colorQ(total);
    for (size_t i = 0; i < nv; ++i) colorP[i] = cp.vert[i] * 2;
    for (size_t f = 0; f < nf; ++f) colorP[nv + f] = cp.facet[f] * 2 + 1;
    for (size_t i = 0; i < nv; ++i) colorQ[i] = cq.vert[i] * 2;
    for (size_t f = 0; f < nf; ++f) colorQ[nv + f] = cq.facet[f] * 2 + 1;

    std::map<long, int> classSize;
    for (long c : colorP) ++classSize[c];
    std::vector<size_t> order(total);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (classSize[colorP[a]] != classSize[colorP[b]]) return classSize[colorP[a]] < classSize[colorP[b]];
        return a < b;
    });

    auto incidentP = [&](size_t a, size_t b) {
        if (a < nv && b >= nv) return p.vertFacets[a].test(b - nv);
        if (b < nv && a >= nv) return p.vertFacets[b].test(a - nv);
        return false;
    };
    auto incidentQ = [&](size_t a, size_t b) {
        if (a < nv && b >= nv) return q.vertFacets[a].test(b - nv);
        if (b < nv && a >= nv) return q.vertFacets[b].test(a - nv);
        return false;
    };

    std::vector<int> map(total, -1);
    std::vector<bool> used(total, false);
    std::function<bool(size_t)> rec = [&](size_t idx) -> bool {
        if (idx == total) return true;
        size_t a = order[idx];
        bool aIsVert = a < nv;
        for (size_t b = 0; b < total; ++b) {
            if (used[b] || colorQ[b] != colorP[a]) continue;
            if ((b < nv) != aIsVert) continue;
            bool ok = true;
            for (size_t prev = 0; prev < idx && ok; ++prev) {
                size_t c = order[prev];
                if (incidentP(a, c) != incidentQ(b, static_cast<size_t>(map[c]))) ok = false;
            }
            if (!ok) continue;
            map[a] = static_cast<int>(b);
            used[b] = true;
            if (rec(idx + 1)) return true;
            used[b] = false;
            map[a] = -1;
        }
        return false;
    };
    return rec(0);
}

namespace {

// Recursive simplicial decomposition over the face lattice: each face is
// coned from its first vertex over its own facets.
struct Triangulator {
    const PolytopePair& p;
    std::vector<FaceRec> faces;
    std::vector<std::vector<int>> children; // faces one dimension down, contained
    std::vector<std::optional<std::vector<std::vector<int>>>> memo; // vertex index tuples

    explicit Triangulator(const PolytopePair& pp) : p(pp) {
        faces = enumerateFaces(p, FaceEnumOptions{100000, std::nullopt});
        std::vector<std::vector<size_t>> byDim(p.dim + 1);
        for (size_t f = 0; f < faces.size(); ++f) byDim[faces[f].dim].push_back(f);
        children.resize(faces.size());
        for (size_t g = 0; g < faces.size(); ++g) {
            if (faces[g].dim == 0) continue;
            for (size_t f : byDim[faces[g].dim - 1])
                if (faces[g].verts.containsAll(faces[f].verts)) children[g].push_back(static_cast<int>(f));
        }
        memo.assign(faces.size(), std::nullopt);
    }

    int firstVertex(const Bits& sel) const {
        int out = -1;
        sel.forEach([&](size_t i) {
            if (out < 0) out = static_cast<int>(i);
        });
        return out;
    }

    std::vector<std::vector<int>> simplicesOf(size_t faceId) {
        if (memo[faceId]) return *memo[faceId];
        const FaceRec& face = faces[faceId];
        std::vector<std::vector<int>> out;
        size_t nverts = face.verts.count();
        if (nverts == static_cast<size_t>(face.dim) + 1) {
            std::vector<int> simplex;
            face.verts.forEach([&](size_t i) { simplex.push_back(static_cast<int>(i)); });
            out.push_back(std::move(simplex));
        } else {
            int apex = firstVertex(face.verts);
            for (int child : children[faceId]) {
                if (faces[child].verts.test(apex)) continue;
                for (auto simplex : simplicesOf(child)) {
                    simplex.push_back(apex);
                    out.push_back(std::move(simplex));
                }
            }
        }
        memo[faceId] = out;
        return out;
    }
};

} // namespace

Rat volume(const PolytopePair& p) {
    if (p.v.verts.empty()) throw ArgError("volume of an empty polytope");
    if (p.dim == 0) return Rat(1); // relative volume of a point
    // Chart on the affine hull (identity when full-dimensional).
    HullBasis hull = affineHull(p.v.verts, p.v.dim);
    std::vector<int> chart = chartColumns(hull, p.v.dim);
    size_t k = chart.size();
    if (static_cast<int>(k) != p.dim) throw InternalError("hull chart dimension mismatch");

    Triangulator tri(p);
    // Top-level cone: apex over every facet avoiding it.
    int apex = 0; // vertices are sorted; take the first
    std::vector<std::vector<int>> simplices;
    for (size_t f = 0; f < tri.faces.size(); ++f) {
        if (tri.faces[f].dim != p.dim - 1) continue;
        if (tri.faces[f].verts.test(apex)) continue;
        for (auto simplex : tri.simplicesOf(f)) {
            simplex.push_back(apex);
            simplices.push_back(std::move(simplex));
        }
    }
    Rat total(0);
    mpz_class dFact;
    mpz_fac_ui(dFact.get_mpz_t(), static_cast<unsigned long>(p.dim));
    for (const auto& simplex : simplices) {
        RatMat m(k, RatVec(k));
        for (size_t r = 0; r + 1 < simplex.size(); ++r)
            for (size_t c = 0; c < k; ++c)
                m[r][c] = p.v.verts[simplex[r]][chart[c]] - p.v.verts[simplex.back()][chart[c]];
        Rat det = determinant(std::move(m));
        if (det < 0) det = -det;
        total += det;
    }
    return total / Rat(dFact);
}

PolytopePair productPolytope(const PolytopePair& p, const PolytopePair& q) {
    PolytopePair out;
    int dp = p.v.dim, dq = q.v.dim;
    out.v.dim = dp + dq;
    out.h.dim = dp + dq;
    out.dim = p.dim + q.dim;

    auto liftRow = [&](const LinRow& row, bool fromP) {
        LinRow r;
        r.a.assign(dp + dq, Rat(0));
        for (size_t c = 0; c < row.a.size(); ++c) r.a[fromP ? c : dp + c] = row.a[c];
        r.b = row.b;
        return r;
    };
    for (const auto& e : p.h.eqs) out.h.eqs.push_back(liftRow(e, true));
    for (const auto& e : q.h.eqs) out.h.eqs.push_back(liftRow(e, false));
    for (const auto& r : p.h.ineqs) out.h.ineqs.push_back(liftRow(r, true));
    for (const auto& r : q.h.ineqs) out.h.ineqs.push_back(liftRow(r, false));

    size_t nvp = p.v.verts.size(), nvq = q.v.verts.size();
    for (size_t i = 0; i < nvp; ++i)
        for (size_t j = 0; j < nvq; ++j) {
            RatVec x = p.v.verts[i];
            x.insert(x.end(), q.v.verts[j].begin(), q.v.verts[j].end());
            out.v.verts.push_back(std::move(x));
        }
    size_t nf = out.h.ineqs.size();
    out.vertFacets.assign(nvp * nvq, Bits(nf));
    for (size_t f = 0; f < nf; ++f) out.facetVerts.push_back(Bits(nvp * nvq));
    size_t fp = p.h.ineqs.size();
    for (size_t i = 0; i < nvp; ++i)
        for (size_t j = 0; j < nvq; ++j) {
            size_t vi = i * nvq + j;
            for (size_t f = 0; f < fp; ++f)
                if (p.vertFacets[i].test(f)) {
                    out.vertFacets[vi].set(f);
                    out.facetVerts[f].set(vi);
                }
            for (size_t f = 0; f < q.h.ineqs.size(); ++f)
                if (q.vertFacets[j].test(f)) {
                    out.vertFacets[vi].set(fp + f);
                    out.facetVerts[fp + f].set(vi);
                }
        }
    return out;
}

} // namespace posetpoly
