#include <doctest.h>

#include <algorithm>
#include <set>

#include "posetpoly/builders.hpp"
#include "posetpoly/linalg.hpp"
#include "posetpoly/prob.hpp"

using namespace posetpoly;

namespace {

Poset pentagon() { return posetFromCovers(5, {{0, 1}, {0, 2}, {1, 4}, {2, 3}, {3, 4}}); }

Poset cube3() { return productPoset(productPoset(makeChain(2), makeChain(2)), makeChain(2)); }

std::set<RatVec> vertexSet(const VRep& v) { return {v.verts.begin(), v.verts.end()}; }

} // namespace

TEST_CASE("order polytope presentations agree") {
    for (const Poset& q : {makeAntichain(2), makeChain(3), productPoset(makeChain(2), makeChain(2)),
                           lambdaPoset(pentagon()).order}) {
        PolytopePair box = makePair(orderPolytope(q, OrderPolytopePresentation::Box).h);
        PolytopePair cover = makePair(orderPolytope(q, OrderPolytopePresentation::CoverReduced).h);
        CHECK(vertexSet(box.v) == vertexSet(cover.v));
        PolytopePair hatted = makePair(orderPolytope(q, OrderPolytopePresentation::Hatted).h);
        CHECK(combEquivalent(box, hatted));
        // Restricting the hatted vertices to the element coordinates gives
        // the plain vertices back.
        std::set<RatVec> restricted;
        for (const auto& x : hatted.v.verts) restricted.insert(RatVec(x.begin(), x.begin() + q.size()));
        CHECK(restricted == vertexSet(box.v));
    }
}

TEST_CASE("cover-reduced presentation is already irredundant") {
    for (const Poset& q : {makeAntichain(3), productPoset(makeChain(2), makeChain(2)),
                           lambdaPoset(pentagon()).order}) {
        HRep h = orderPolytope(q, OrderPolytopePresentation::CoverReduced).h;
        HRep canon = irredundant(h);
        CHECK(canon.ineqs.size() == h.ineqs.size());
        CHECK(canon.eqs.empty());
    }
}

TEST_CASE("filter vertices match enumerated vertices") {
    for (const Poset& q : {makeAntichain(2), makeChain(3), lambdaPoset(pentagon()).order,
                           productPoset(makeChain(2), makeChain(3))}) {
        VRep filters = geissingerVertices(q);
        VRep enumerated = verticesOf(orderPolytope(q).h);
        CHECK(vertexSet(filters) == vertexSet(enumerated));
    }
    CHECK(geissingerVertices(makeChain(3)).verts.size() == 4);
    CHECK(geissingerVertices(lambdaPoset(pentagon()).order).verts.size() == 9);
}

TEST_CASE("filter-pair edges match polytope edges") {
    for (const Poset& q : {makeAntichain(2), makeChain(2), lambdaPoset(pentagon()).order}) {
        auto edges = hibiLiEdges(q);
        PolytopePair pair = makePair(orderPolytope(q).h);
        auto polyEdges = polytopeEdges(pair);
        CHECK(edges.size() == polyEdges.size());
        // Translate vertex indices back to filter masks and compare sets.
        std::set<std::pair<uint64_t, uint64_t>> fromPolytope;
        for (auto [i, j] : polyEdges) {
            auto toMask = [&](const RatVec& x) {
                uint64_t mask = 0;
                for (int c = 0; c < q.size(); ++c)
                    if (x[c] == 1) mask |= uint64_t(1) << c;
                return mask;
            };
            uint64_t a = toMask(pair.v.verts[i]), b = toMask(pair.v.verts[j]);
            fromPolytope.emplace(std::min(a, b), std::max(a, b));
        }
        CHECK(fromPolytope == std::set<std::pair<uint64_t, uint64_t>>(edges.begin(), edges.end()));
    }
    CHECK(hibiLiEdges(makeAntichain(2)).size() == 4);
    // The two-chain's order polytope is a triangle.
    CHECK(hibiLiEdges(makeChain(2)).size() == 3);
    FVector pentLambda = fVector(makePair(orderPolytope(lambdaPoset(pentagon()).order).h));
    CHECK(hibiLiEdges(lambdaPoset(pentagon()).order).size() == static_cast<size_t>(pentLambda[1]));
}

TEST_CASE("facets recovered from the filter vertices") {
    // Feeding the nine filter vertices of the pentagon's parallel-pair poset
    // back through facet enumeration recovers the cover-reduced description.
    Poset q = lambdaPoset(pentagon()).order;
    VRep filters = geissingerVertices(q);
    REQUIRE(filters.verts.size() == 9);
    HRep viaVerts = facetsOf(filters);
    HRep direct = orderPolytope(q, OrderPolytopePresentation::CoverReduced).h;
    auto sorted = [](std::vector<LinRow> rows) {
        for (auto& r : rows) normalizeInequality(r);
        std::sort(rows.begin(), rows.end());
        return rows;
    };
    CHECK(viaVerts.eqs.empty());
    CHECK(sorted(viaVerts.ineqs) == sorted(direct.ineqs));
}

TEST_CASE("order polytope volume counts extensions") {
    for (const Poset& q : {makeChain(2), makeChain(3), makeAntichain(3),
                           productPoset(makeChain(2), makeChain(2)), lambdaPoset(pentagon()).order}) {
        PolytopePair pair = makePair(orderPolytope(q).h);
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(q.size()));
        Rat expected = Rat(countLinearExtensions(q)) / Rat(fact);
        CHECK(volume(pair) == expected);
    }
    // The diamond as base poset: 2 extensions over 4! cells.
    PolytopePair diamondOrder = makePair(orderPolytope(productPoset(makeChain(2), makeChain(2))).h);
    CHECK(volume(diamondOrder) == ratio(1, 12));
}

TEST_CASE("probability polytope of the pentagon") {
    PrpSpec spec = prp(pentagon());
    CHECK(spec.full.dim == 2);
    CHECK(spec.full.v.verts.size() == 3);
    CHECK(spec.allIntegral);
    CHECK(spec.lambda.pairCount == 2);
    CHECK(spec.full.h.ineqs.size() == 3);
    CHECK(spec.full.h.eqs.size() == 2);
    CHECK(fVector(spec.full) == FVector{3, 3});
    CHECK(fVector(spec.reduced) == FVector{3, 3});
    CHECK(spec.reduced.v.verts.size() == 3);
    CHECK(combEquivalent(spec.full, spec.reduced));
    // Projection keeps the representative coordinates (1,2) and (1,3).
    std::set<RatVec> reduced = vertexSet(spec.reduced.v);
    std::set<RatVec> triangle = {{Rat(0), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
    CHECK(reduced == triangle);
    // No new vertices beyond the complementary filters.
    CHECK(vertexSet(spec.full.v) == vertexSet(integralVerticesByFilters(pentagon())));
}

TEST_CASE("probability polytope of chains and the diamond") {
    for (int n = 1; n <= 6; ++n) {
        PrpSpec spec = prp(makeChain(n));
        CHECK(spec.full.dim == 0);
        CHECK(spec.full.v.verts.size() == 1);
        CHECK(spec.allIntegral);
    }
    PrpSpec diamond = prp(productPoset(makeChain(2), makeChain(2)));
    CHECK(diamond.full.dim == 1);
    CHECK(diamond.full.v.verts.size() == 2);
    CHECK(fVector(diamond.full) == FVector{2});
}

TEST_CASE("probability polytope of antichains is a hypercube") {
    for (int d = 2; d <= 4; ++d) {
        PrpSpec spec = prp(makeAntichain(d));
        int m = d * (d - 1) / 2;
        CHECK(spec.full.dim == m);
        CHECK(spec.full.v.verts.size() == (uint64_t(1) << m));
        HRep box;
        box.dim = m;
        for (int i = 0; i < m; ++i) {
            LinRow lo, hi;
            lo.a.assign(m, Rat(0));
            lo.a[i] = 1;
            lo.b = 0;
            hi.a.assign(m, Rat(0));
            hi.a[i] = -1;
            hi.b = -1;
            box.ineqs.push_back(lo);
            box.ineqs.push_back(hi);
        }
        CHECK(combEquivalent(spec.full, makePair(box)));
    }
    CHECK(fVector(prp(makeAntichain(3)).full) == FVector{8, 12, 6});
}

TEST_CASE("3-cube probability polytope has a non-integral vertex") {
    PrpSpec spec = prp(cube3());
    CHECK(spec.full.dim == 9);
    CHECK(spec.full.v.verts.size() == 77);
    CHECK(!spec.allIntegral);
    CHECK(spec.full.h.ineqs.size() == 15);
    CHECK(spec.full.h.eqs.size() == 9);
    int nonIntegral = 0;
    RatVec half(18, ratio(1, 2));
    bool sawHalf = false;
    for (const auto& v : spec.full.v.verts) {
        bool integral = true;
        for (const Rat& c : v)
            if (!isZeroOne(c)) integral = false;
        if (!integral) {
            ++nonIntegral;
            sawHalf = sawHalf || v == half;
        }
    }
    CHECK(nonIntegral == 1);
    CHECK(sawHalf);
    CHECK(integralVerticesByFilters(cube3()).verts.size() == 76);
}

TEST_CASE("reduced polytope incidence is aligned with its rows") {
    for (const Poset& p : {pentagon(), productPoset(makeChain(2), makeChain(3)), cube3()}) {
        PrpSpec spec = prp(p);
        const PolytopePair& r = spec.reduced;
        REQUIRE(r.facetVerts.size() == r.h.ineqs.size());
        for (size_t f = 0; f < r.h.ineqs.size(); ++f)
            for (size_t i = 0; i < r.v.verts.size(); ++i) {
                Rat s(0);
                for (size_t c = 0; c < r.v.verts[i].size(); ++c)
                    s += r.h.ineqs[f].a[c] * r.v.verts[i][c];
                CHECK(r.facetVerts[f].test(i) == (s == r.h.ineqs[f].b));
                CHECK(s >= r.h.ineqs[f].b);
            }
    }
}

TEST_CASE("middle levels of the 3-cube force the same polytope") {
    // Parallel pairs of the 3-cube involve only its six middle elements, so
    // the crown on those elements has the identical parallel-pair poset and
    // an equivalent polytope; the non-integral vertex already appears with
    // six base elements.
    Poset crown = posetFromCovers(6, {{0, 3}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {2, 5}});
    LambdaPoset lc = lambdaPoset(crown), lq = lambdaPoset(cube3());
    CHECK(isomorphism(lc.order, lq.order));
    PrpSpec pc = prp(crown);
    CHECK(pc.full.v.verts.size() == 77);
    CHECK(!pc.allIntegral);
    CHECK(combEquivalent(pc.full, prp(cube3()).full));
}

TEST_CASE("complementary filters are exactly the integral vertices") {
    for (const Poset& p : {pentagon(), makeAntichain(3), productPoset(makeChain(2), makeChain(3)),
                           disjointUnion(makeChain(2), makeChain(2)), cube3()}) {
        PrpSpec spec = prp(p);
        std::set<RatVec> integral;
        for (const auto& v : spec.full.v.verts) {
            bool zeroOne = true;
            for (const Rat& c : v)
                if (!isZeroOne(c)) zeroOne = false;
            if (zeroOne) integral.insert(v);
        }
        CHECK(integral == vertexSet(integralVerticesByFilters(p)));
    }
    // Antichain pair: two complementary filters, the segment's endpoints.
    VRep seg = integralVerticesByFilters(makeAntichain(2));
    REQUIRE(seg.verts.size() == 2);
    CHECK(seg.verts[0] == RatVec{Rat(0), Rat(1)});
    CHECK(seg.verts[1] == RatVec{Rat(1), Rat(0)});
}

TEST_CASE("probability polytopes multiply over ordinal sums") {
    std::vector<std::pair<Poset, Poset>> cases;
    cases.emplace_back(productPoset(makeChain(2), makeChain(2)), makeAntichain(2));
    cases.emplace_back(makeAntichain(2), pentagon());
    cases.emplace_back(makeChain(2), productPoset(makeChain(2), makeChain(2)));
    for (const auto& [p, q] : cases) {
        PrpSpec sum = prp(ordinalSum(p, q));
        PolytopePair prod = productPolytope(prp(p).full, prp(q).full);
        CHECK(sum.full.v.verts.size() == prod.v.verts.size());
        CHECK(combEquivalent(sum.full, prod));
    }
}

TEST_CASE("linear extension polytope") {
    LinExtPolytopeSpec c2 = linextPolytope(makeChain(2));
    REQUIRE(c2.v.verts.size() == 1);
    CHECK(c2.v.verts[0] == RatVec{Rat(1), Rat(0)});

    LinExtPolytopeSpec anti = linextPolytope(makeAntichain(2));
    CHECK(anti.v.verts.size() == 2);
    CHECK(affineDimension(anti.v.verts) == 1);

    // Dimension equals the number of unordered incomparable pairs, and the
    // computed affine hull matches the pinned/complementary row system.
    for (const Poset& p : {productPoset(makeChain(2), makeChain(2)), pentagon(), makeAntichain(3)}) {
        LinExtPolytopeSpec spec = linextPolytope(p);
        CHECK(affineDimension(spec.v.verts) == p.parallelPairCount());
        RatMat expected;
        int n = p.size();
        int dim = n * (n - 1);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (x == y) continue;
                RatVec row(dim + 1, Rat(0));
                if (p.less(x, y)) {
                    row[ProbMatrix::pairIndex(n, x, y)] = 1;
                    row[dim] = 1;
                } else if (p.less(y, x)) {
                    row[ProbMatrix::pairIndex(n, x, y)] = 1;
                    row[dim] = 0;
                } else if (x < y) {
                    row[ProbMatrix::pairIndex(n, x, y)] = 1;
                    row[ProbMatrix::pairIndex(n, y, x)] = 1;
                    row[dim] = 1;
                } else {
                    continue;
                }
                expected.push_back(row);
            }
        RatMat computed;
        for (const auto& r : spec.hullEqs) {
            RatVec row = r.a;
            row.push_back(r.b);
            computed.push_back(row);
        }
        int rankExpected = rankOf(expected);
        int rankComputed = rankOf(computed);
        RatMat joint = expected;
        joint.insert(joint.end(), computed.begin(), computed.end());
        CHECK(rankExpected == rankComputed);
        CHECK(rankOf(joint) == rankExpected);
        CHECK(rankComputed == dim - p.parallelPairCount());
    }

    CHECK_THROWS_AS(linextPolytope(makeAntichain(5), 10), ScaleError);
}
