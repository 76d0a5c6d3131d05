#include "posetpoly/builders.hpp"

#include <algorithm>

#include "posetpoly/prob.hpp"

namespace posetpoly {

namespace {

LinRow boundRow(int dim, int coord, bool lower) {
    LinRow row;
    row.a.assign(dim, Rat(0));
    if (lower) {
        row.a[coord] = 1; // x_c >= 0
        row.b = 0;
    } else {
        row.a[coord] = -1; // -x_c >= -1
        row.b = -1;
    }
    return row;
}

LinRow stepRow(int dim, int lowCoord, int highCoord) {
    LinRow row;
    row.a.assign(dim, Rat(0));
    row.a[lowCoord] = -1;
    row.a[highCoord] = 1; // x_high - x_low >= 0
    row.b = 0;
    return row;
}

} // namespace

OrderPolytopeSpec orderPolytope(const Poset& q, OrderPolytopePresentation pres) {
    OrderPolytopeSpec spec;
    spec.source = q;
    spec.presentation = pres;
    int n = q.size();
    switch (pres) {
    case OrderPolytopePresentation::Box: {
        spec.h.dim = n;
        for (int i = 0; i < n; ++i) {
            spec.h.ineqs.push_back(boundRow(n, i, true));
            spec.h.ineqs.push_back(boundRow(n, i, false));
        }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && q.leq(i, j)) spec.h.ineqs.push_back(stepRow(n, i, j));
        break;
    }
    case OrderPolytopePresentation::CoverReduced: {
        spec.h.dim = n;
        for (int i = 0; i < n; ++i) {
            if (q.isMinimal(i)) spec.h.ineqs.push_back(boundRow(n, i, true));
            if (q.isMaximal(i)) spec.h.ineqs.push_back(boundRow(n, i, false));
        }
        for (auto [a, b] : q.covers()) spec.h.ineqs.push_back(stepRow(n, a, b));
        break;
    }
    case OrderPolytopePresentation::Hatted: {
        // Coordinates 0..n-1 for the elements, n for the adjoined bottom,
        // n+1 for the adjoined top.
        spec.h.dim = n + 2;
        int bot = n, top = n + 1;
        LinRow botEq, topEq;
        botEq.a.assign(n + 2, Rat(0));
        botEq.a[bot] = 1;
        botEq.b = 0;
        topEq.a.assign(n + 2, Rat(0));
        topEq.a[top] = 1;
        topEq.b = 1;
        spec.h.eqs.push_back(std::move(botEq));
        spec.h.eqs.push_back(std::move(topEq));
        for (int i = 0; i < n; ++i) {
            spec.h.ineqs.push_back(stepRow(n + 2, bot, i));
            spec.h.ineqs.push_back(stepRow(n + 2, i, top));
        }
        spec.h.ineqs.push_back(stepRow(n + 2, bot, top));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && q.leq(i, j)) spec.h.ineqs.push_back(stepRow(n + 2, i, j));
        break;
    }
    }
    std::sort(spec.h.ineqs.begin(), spec.h.ineqs.end());
    return spec;
}

VRep geissingerVertices(const Poset& q) {
    VRep v;
    v.dim = q.size();
    for (uint64_t filter : orderFilters(q)) {
        RatVec x(q.size(), Rat(0));
        for (int i = 0; i < q.size(); ++i)
            if ((filter >> i) & 1u) x[i] = 1;
        v.verts.push_back(std::move(x));
    }
    std::sort(v.verts.begin(), v.verts.end());
    return v;
}

std::vector<std::pair<uint64_t, uint64_t>> hibiLiEdges(const Poset& q) {
    std::vector<uint64_t> filters = orderFilters(q);
    std::vector<std::pair<uint64_t, uint64_t>> edges;
    for (size_t i = 0; i < filters.size(); ++i)
        for (size_t j = 0; j < filters.size(); ++j) {
            uint64_t s = filters[i], t = filters[j];
            if (s == t || (s & ~t)) continue; // need S strictly inside T
            if (isConnectedSubset(q, t & ~s)) edges.emplace_back(s, t);
        }
    std::sort(edges.begin(), edges.end());
    return edges;
}

PrpSpec prp(const Poset& p, const VertexEnumOptions& opt) {
    PrpSpec spec;
    spec.source = p;
    spec.lambda = lambdaPoset(p);
    int twoM = static_cast<int>(spec.lambda.elements.size());

    if (twoM == 0) {
        // Chains: the polytope is the single empty point.
        HRep h;
        h.dim = 0;
        spec.full = makePair(h);
        spec.reduced = spec.full;
        spec.allIntegral = true;
        return spec;
    }

    OrderPolytopeSpec order = orderPolytope(spec.lambda.order, OrderPolytopePresentation::CoverReduced);
    HRep system = order.h;
    for (int u = 0; u < twoM; ++u) {
        if (spec.lambda.tau[u] < u) continue;
        LinRow eq;
        eq.a.assign(twoM, Rat(0));
        eq.a[u] = 1;
        eq.a[spec.lambda.tau[u]] = 1;
        eq.b = 1;
        spec.pairingEqs.push_back(eq);
        system.eqs.push_back(std::move(eq));
    }
    spec.full = makePair(system, opt);

    // The projection is an affine isomorphism, so the incidence carries
    // over; vertices are re-sorted and facets re-matched against the
    // substituted rows, which eliminatePairedCoordinates emits sorted.
    HRep reducedH = eliminatePairedCoordinates(spec.full.h, spec.lambda.tau);
    spec.reduced.h = reducedH;
    spec.reduced.v.dim = reducedH.dim;
    spec.reduced.dim = spec.full.dim;
    {
        size_t nv = spec.full.v.verts.size();
        std::vector<RatVec> projected;
        projected.reserve(nv);
        for (const auto& x : spec.full.v.verts)
            projected.push_back(projectPairedPoint(x, spec.lambda.tau));
        std::vector<size_t> idx(nv);
        for (size_t i = 0; i < nv; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](size_t a, size_t b) { return projected[a] < projected[b]; });
        std::vector<size_t> newPos(nv);
        for (size_t k = 0; k < nv; ++k) {
            newPos[idx[k]] = k;
            spec.reduced.v.verts.push_back(projected[idx[k]]);
        }

        int m = spec.lambda.pairCount;
        std::vector<int> repIndex(twoM, -1);
        int next = 0;
        for (int u = 0; u < twoM; ++u)
            if (u < spec.lambda.tau[u]) repIndex[u] = next++;
        auto substitute = [&](const LinRow& row) {
            LinRow out;
            out.a.assign(m, Rat(0));
            out.b = row.b;
            for (int u = 0; u < twoM; ++u) {
                if (row.a[u] == 0) continue;
                if (u < spec.lambda.tau[u]) out.a[repIndex[u]] += row.a[u];
                else {
                    out.a[repIndex[spec.lambda.tau[u]]] -= row.a[u];
                    out.b -= row.a[u];
                }
            }
            normalizeInequality(out);
            return out;
        };
        spec.reduced.facetVerts.assign(reducedH.ineqs.size(), Bits(nv));
        for (size_t f = 0; f < spec.full.h.ineqs.size(); ++f) {
            LinRow moved = substitute(spec.full.h.ineqs[f]);
            auto it = std::lower_bound(reducedH.ineqs.begin(), reducedH.ineqs.end(), moved);
            if (it == reducedH.ineqs.end() || !(*it == moved))
                throw InternalError("substituted facet row lost during pairing elimination");
            size_t pos = static_cast<size_t>(it - reducedH.ineqs.begin());
            Bits verts(nv);
            spec.full.facetVerts[f].forEach([&](size_t i) { verts.set(newPos[i]); });
            spec.reduced.facetVerts[pos] = std::move(verts);
        }
        spec.reduced.vertFacets.assign(nv, Bits(reducedH.ineqs.size()));
        for (size_t f = 0; f < spec.reduced.facetVerts.size(); ++f)
            spec.reduced.facetVerts[f].forEach([&](size_t i) { spec.reduced.vertFacets[i].set(f); });
    }

    spec.allIntegral = true;
    for (const auto& x : spec.full.v.verts)
        for (const Rat& c : x)
            if (!isZeroOne(c)) spec.allIntegral = false;
    return spec;
}

VRep integralVerticesByFilters(const Poset& p) {
    LambdaPoset lambda = lambdaPoset(p);
    int twoM = static_cast<int>(lambda.elements.size());
    int m = lambda.pairCount;
    VRep out;
    out.dim = twoM;
    if (twoM == 0) {
        out.verts.push_back({});
        return out;
    }
    if (m > 25) throw ScaleError("complementary-filter enumeration capped at 25 pairs");
    std::vector<int> reps;
    for (int u = 0; u < twoM; ++u)
        if (u < lambda.tau[u]) reps.push_back(u);
    for (uint64_t choice = 0; choice < (uint64_t(1) << m); ++choice) {
        uint64_t members = 0;
        for (int k = 0; k < m; ++k) {
            int u = reps[k];
            members |= uint64_t(1) << (((choice >> k) & 1u) ? u : lambda.tau[u]);
        }
        bool upward = true;
        for (int u = 0; u < twoM && upward; ++u)
            if (((members >> u) & 1u) && (lambda.order.upSet(u) & ~members)) upward = false;
        if (!upward) continue;
        RatVec x(twoM, Rat(0));
        for (int u = 0; u < twoM; ++u)
            if ((members >> u) & 1u) x[u] = 1;
        out.verts.push_back(std::move(x));
    }
    std::sort(out.verts.begin(), out.verts.end());
    return out;
}

LinExtPolytopeSpec linextPolytope(const Poset& p, long extensionCap) {
    LinExtPolytopeSpec spec;
    spec.source = p;
    int n = p.size();
    if (n < 2) throw ArgError("linear-extension polytope needs at least two elements");
    mpz_class count = countLinearExtensions(p);
    if (count > extensionCap)
        throw ScaleError("poset has " + count.get_str() + " linear extensions, above the cap of " +
                         std::to_string(extensionCap));
    int dim = n * (n - 1);
    spec.v.dim = dim;
    forEachLinearExtension(p, [&](const std::vector<int>& ext) {
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[ext[i]] = i;
        RatVec x(dim, Rat(0));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b && pos[a] < pos[b]) x[ProbMatrix::pairIndex(n, a, b)] = 1;
        spec.v.verts.push_back(std::move(x));
        return true;
    });
    std::sort(spec.v.verts.begin(), spec.v.verts.end());
    spec.hullEqs = facetsOf(spec.v).eqs;
    return spec;
}

} // namespace posetpoly
