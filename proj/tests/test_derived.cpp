#include <doctest.h>

#include <algorithm>

#include "posetpoly/derived.hpp"

using namespace posetpoly;

namespace {

Poset diamond() { return productPoset(makeChain(2), makeChain(2)); }

Poset pentagon() { return posetFromCovers(5, {{0, 1}, {0, 2}, {1, 4}, {2, 3}, {3, 4}}); }

Poset cube3() { return productPoset(productPoset(makeChain(2), makeChain(2)), makeChain(2)); }

} // namespace

TEST_CASE("pairs poset of the diamond") {
    DerivedPairsPoset d = pairsPoset(diamond());
    CHECK(d.elements.size() == 12);
    // Unique minimum (top,bottom), unique maximum (bottom,top).
    int minIdx = d.indexOf({3, 0}), maxIdx = d.indexOf({0, 3});
    for (int i = 0; i < d.order.size(); ++i) {
        CHECK(d.order.leq(minIdx, i));
        CHECK(d.order.leq(i, maxIdx));
    }
}

TEST_CASE("pairs poset of antichains and tiny chains") {
    DerivedPairsPoset a = pairsPoset(makeAntichain(3));
    CHECK(a.elements.size() == 6);
    CHECK(a.order.isAntichain());

    // For the two-chain both generator families dead-end on the excluded
    // diagonal, so (1,0) and (0,1) end up incomparable.
    DerivedPairsPoset c = pairsPoset(makeChain(2));
    CHECK(c.elements.size() == 2);
    CHECK(c.order.isAntichain());

    // From the three-chain on, the comparable pairs chain up: (2,0) climbs
    // through (2,1) and (1,0) side-steps through the middle element.
    DerivedPairsPoset c3 = pairsPoset(makeChain(3));
    CHECK(c3.order.less(c3.indexOf({2, 0}), c3.indexOf({2, 1})));
    CHECK(c3.order.less(c3.indexOf({2, 0}), c3.indexOf({0, 2})));

    CHECK_THROWS_AS(pairsPoset(makeChain(1)), ArgError);
}

TEST_CASE("pairs order never relates pairs both ways") {
    // Strict steps either lower the first component or raise the second, so
    // the generated relation must close into a genuine order.
    for (const Poset& p : {diamond(), pentagon(), makeChain(4),
                           disjointUnion(makeChain(2), makeChain(2))}) {
        DerivedPairsPoset d = pairsPoset(p);
        for (int i = 0; i < d.order.size(); ++i)
            for (int j = 0; j < d.order.size(); ++j)
                if (i != j && d.order.leq(i, j)) {
                    CHECK(!d.order.leq(j, i));
                    // Going up weakly lowers the first component and raises
                    // the second, strictly in at least one of the two.
                    CHECK(p.leq(d.elements[j].first, d.elements[i].first));
                    CHECK(p.leq(d.elements[i].second, d.elements[j].second));
                    CHECK((d.elements[j].first != d.elements[i].first ||
                           d.elements[i].second != d.elements[j].second));
                }
    }
}

TEST_CASE("quotient of chains, diamonds, antichains") {
    QuotientSummary chainQ = pairsQuotient(makeChain(4));
    CHECK(isomorphism(chainQ.quotient, makeChain(2)));
    REQUIRE(chainQ.bottom);
    REQUIRE(chainQ.top);
    CHECK(chainQ.quotient.less(*chainQ.bottom, *chainQ.top));

    QuotientSummary diamondQ = pairsQuotient(diamond());
    CHECK(diamondQ.quotient.size() == 4);
    CHECK(isomorphism(diamondQ.quotient, diamond()));
    // Bottom and top are the unique extremes.
    for (int i = 0; i < 4; ++i) {
        CHECK(diamondQ.quotient.leq(*diamondQ.bottom, i));
        CHECK(diamondQ.quotient.leq(i, *diamondQ.top));
    }

    QuotientSummary antiQ = pairsQuotient(makeAntichain(2));
    CHECK(antiQ.quotient.size() == 2);
    CHECK(antiQ.quotient.isAntichain());
    CHECK(!antiQ.bottom);
    CHECK(!antiQ.top);
}

TEST_CASE("parallel-pair poset of the pentagon") {
    LambdaPoset l = lambdaPoset(pentagon());
    REQUIRE(l.elements.size() == 4);
    CHECK(l.pairCount == 2);
    // Two disjoint two-chains.
    CHECK(l.order.covers().size() == 2);
    CHECK(l.order.less(l.indexOf({3, 1}), l.indexOf({2, 1})));
    CHECK(l.order.less(l.indexOf({1, 2}), l.indexOf({1, 3})));
    CHECK(isomorphism(l.order, disjointUnion(makeChain(2), makeChain(2))));
    CHECK(checkTauAntitone(l));
}

TEST_CASE("parallel-pair poset of the 3-cube") {
    LambdaPoset l = lambdaPoset(cube3());
    CHECK(l.elements.size() == 18);
    CHECK(l.pairCount == 9);
    // Cross relation linking the two halves.
    CHECK(l.order.less(l.indexOf({5, 2}), l.indexOf({1, 2})));
    CHECK(checkTauAntitone(l));
}

TEST_CASE("parallel-pair poset of small antichains and chains") {
    LambdaPoset l = lambdaPoset(makeAntichain(2));
    REQUIRE(l.elements.size() == 2);
    CHECK(l.tau[0] == 1);
    CHECK(l.tau[1] == 0);
    CHECK(l.order.isAntichain());
    CHECK(checkTauAntitone(l));
    CHECK(checkTauAntitone(lambdaPoset(makeAntichain(3))));

    LambdaPoset chainL = lambdaPoset(makeChain(4));
    CHECK(chainL.elements.empty());
    CHECK(chainL.pairCount == 0);
}

TEST_CASE("a broken order is caught by the antitone check") {
    LambdaPoset l = lambdaPoset(pentagon());
    LambdaPoset broken = l;
    // Drop one of the two covers.
    auto covers = l.order.covers();
    REQUIRE(covers.size() == 2);
    covers.pop_back();
    broken.order = posetFromCovers(l.order.size(), covers);
    CHECK(!checkTauAntitone(broken));
}

TEST_CASE("rank formula on chain pairs") {
    CHECK(chainPairsRank(4, 4, 1) == 1);
    CHECK(chainPairsRank(4, 1, 4) == 6);
    CHECK(chainPairsRank(2, 2, 1) == 1);
    CHECK(chainPairsRank(2, 1, 2) == 2);
    CHECK_THROWS_AS(chainPairsRank(4, 2, 2), ArgError);
    CHECK_THROWS_AS(chainPairsRank(4, 0, 2), ArgError);
}

TEST_CASE("chain pairs are graded by the rank formula") {
    for (int n = 2; n <= 7; ++n) {
        DerivedPairsPoset d = pairsPoset(makeChain(n));
        for (auto [a, b] : d.order.covers()) {
            int ra = chainPairsRank(n, d.elements[a].first + 1, d.elements[a].second + 1);
            int rb = chainPairsRank(n, d.elements[b].first + 1, d.elements[b].second + 1);
            CHECK(rb == ra + 1);
        }
        if (n >= 3) {
            // Unique minimum (n,1) of rank 1; for n = 2 the two pairs are
            // incomparable and there is nothing to grade.
            int minCount = 0;
            for (int i = 0; i < d.order.size(); ++i)
                if (d.order.isMinimal(i)) {
                    ++minCount;
                    CHECK(chainPairsRank(n, d.elements[i].first + 1, d.elements[i].second + 1) == 1);
                }
            CHECK(minCount == 1);
        }
    }
}

TEST_CASE("swap involution is antitone on the full pairs poset") {
    for (const Poset& p : {diamond(), pentagon(), makeAntichain(3),
                           disjointUnion(makeChain(2), makeChain(1))}) {
        DerivedPairsPoset d = pairsPoset(p);
        for (int i = 0; i < d.order.size(); ++i)
            for (int j = 0; j < d.order.size(); ++j) {
                int ti = d.indexOf({d.elements[i].second, d.elements[i].first});
                int tj = d.indexOf({d.elements[j].second, d.elements[j].first});
                CHECK(d.order.leq(i, j) == d.order.leq(tj, ti));
            }
    }
}

namespace {

// Induced subposet of the quotient on its parallel-pair blocks.
Poset quotientMiddle(const QuotientSummary& q) {
    int k = static_cast<int>(q.middlePairs.size());
    std::vector<uint64_t> up(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (q.quotient.leq(q.middleBlock(i), q.middleBlock(j))) up[i] |= uint64_t(1) << j;
    return Poset::fromClosedRelation(k, std::move(up));
}

} // namespace

TEST_CASE("quotient minus the comparable blocks is the parallel-pair poset") {
    for (const Poset& p : {diamond(), pentagon(), productPoset(makeChain(2), makeChain(3)),
                           disjointUnion(makeChain(2), makeChain(2)),
                           posetFromCovers(4, {{0, 2}, {0, 3}, {1, 3}})}) {
        QuotientSummary q = pairsQuotient(p);
        LambdaPoset l = lambdaPoset(p);
        CHECK(isomorphism(quotientMiddle(q), l.order));
    }
}

TEST_CASE("bounded quotients for bounded posets") {
    // When the base poset has a unique minimum and maximum, the comparable
    // blocks become the extremes of the quotient.
    for (const Poset& p : {diamond(), pentagon(), productPoset(makeChain(2), makeChain(3))}) {
        LambdaPoset l = lambdaPoset(p);
        Poset hatted = ordinalSum(ordinalSum(makeChain(1), l.order), makeChain(1));
        QuotientSummary q = pairsQuotient(p);
        CHECK(isomorphism(hatted, q.quotient));
    }
    // Not so when a maximal element is parallel to a minimal one: in the
    // N-shaped poset the pair (top-of-one-leg, bottom-of-other) is minimal in
    // the whole pairs poset, so the bottom block cannot sit below it.
    Poset nShape = posetFromCovers(4, {{0, 2}, {0, 3}, {1, 3}});
    QuotientSummary q = pairsQuotient(nShape);
    LambdaPoset l = lambdaPoset(nShape);
    Poset hatted = ordinalSum(ordinalSum(makeChain(1), l.order), makeChain(1));
    CHECK(!isomorphism(hatted, q.quotient));
    REQUIRE(q.bottom);
    int minimalBlocks = 0;
    for (int i = 0; i < q.quotient.size(); ++i)
        if (q.quotient.isMinimal(i)) ++minimalBlocks;
    CHECK(minimalBlocks == 2);
}

TEST_CASE("parallel-pair poset distributes over ordinal sums") {
    std::vector<std::pair<Poset, Poset>> pairs;
    pairs.emplace_back(diamond(), makeAntichain(2));
    pairs.emplace_back(makeAntichain(2), makeAntichain(3));
    pairs.emplace_back(makeChain(2), diamond());
    for (const auto& [p, q] : pairs) {
        LambdaPoset sum = lambdaPoset(ordinalSum(p, q));
        Poset expected = disjointUnion(lambdaPoset(p).order, lambdaPoset(q).order);
        CHECK(isomorphism(sum.order, expected));
    }
}
