#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "posetpoly/poset.hpp"

using namespace posetpoly;

namespace {

Poset diamond() { return productPoset(makeChain(2), makeChain(2)); }

// Brute-force oracle: all permutations that respect the order.
std::set<std::vector<int>> extensionsByPermutations(const Poset& p) {
    std::vector<int> perm(p.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::vector<int>> out;
    do {
        if (isLinearExtensionOf(p, perm)) out.insert(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Brute-force oracle: all upward-closed subsets by direct scan.
std::set<uint64_t> filtersByMaskScan(const Poset& p) {
    std::set<uint64_t> out;
    for (uint64_t mask = 0; mask < (uint64_t(1) << p.size()); ++mask) {
        bool ok = true;
        for (int a = 0; a < p.size() && ok; ++a)
            for (int b = 0; b < p.size() && ok; ++b)
                if (((mask >> a) & 1u) && p.leq(a, b) && !((mask >> b) & 1u)) ok = false;
        if (ok) out.insert(mask);
    }
    return out;
}

void checkAxioms(const Poset& p) {
    for (int i = 0; i < p.size(); ++i) CHECK(p.leq(i, i));
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j) {
            if (i != j && p.leq(i, j)) CHECK(!p.leq(j, i));
            for (int k = 0; k < p.size(); ++k)
                if (p.leq(i, j) && p.leq(j, k)) CHECK(p.leq(i, k));
        }
}

} // namespace

TEST_CASE("covers closure builds the diamond") {
    Poset p = posetFromCovers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(p.leq(0, 3));
    CHECK(p.parallel(1, 2));
    CHECK(p.covers().size() == 4);
    auto iso = isomorphism(p, diamond());
    REQUIRE(iso);
}

TEST_CASE("single point and cycles") {
    Poset p = posetFromCovers(1, {});
    CHECK(p.size() == 1);
    CHECK(p.leq(0, 0));
    CHECK_THROWS_AS(posetFromCovers(3, {{0, 1}, {1, 2}, {2, 0}}), CycleError);
    CHECK_THROWS_AS(posetFromCovers(2, {{0, 5}}), IndexError);
}

TEST_CASE("standard posets") {
    Poset c3 = makeChain(3);
    int related = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (c3.leq(i, j)) ++related;
    CHECK(related == 6);
    Poset a3 = makeAntichain(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(a3.leq(i, j) == (i == j));
    CHECK(isomorphism(makeChain(1), makeAntichain(1)));
    CHECK_THROWS_AS(makeChain(0), ArgError);
}

TEST_CASE("combinations") {
    Poset d = diamond();
    CHECK(d.size() == 4);
    CHECK(d.covers().size() == 4);
    CHECK(isomorphism(ordinalSum(makeChain(1), makeChain(1)), makeChain(2)));
    Poset two = disjointUnion(makeChain(2), makeChain(2));
    CHECK(two.size() == 4);
    CHECK(two.covers().size() == 2);
    CHECK(two.parallel(0, 2));
    checkAxioms(d);
    checkAxioms(two);
    checkAxioms(productPoset(makeChain(2), makeChain(3)));
}

TEST_CASE("pair classification") {
    Poset d = diamond();
    CHECK(classifyPair(d, 1, 2) == PairOrder::Parallel);
    CHECK(classifyPair(d, 1, 1) == PairOrder::Equal);
    CHECK(classifyPair(makeChain(3), 0, 2) == PairOrder::Less);
    CHECK(classifyPair(makeChain(3), 2, 0) == PairOrder::Greater);
    CHECK_THROWS_AS(classifyPair(d, 0, 9), IndexError);
}

TEST_CASE("linear extensions") {
    CHECK(linearExtensions(makeAntichain(3)).size() == 6);
    CHECK(linearExtensions(makeChain(4)).size() == 1);

    Poset d = diamond();
    auto oracle = extensionsByPermutations(d);
    CHECK(oracle.size() == 2); // frozen from the permutation filter
    auto exts = linearExtensions(d);
    CHECK(std::set<std::vector<int>>(exts.begin(), exts.end()) == oracle);
    CHECK(std::is_sorted(exts.begin(), exts.end()));
    CHECK(countLinearExtensions(d) == 2);
}

TEST_CASE("extension counting matches enumeration and multiplies over ordinal sums") {
    for (const Poset& p : {makeChain(3), makeAntichain(4), diamond(),
                           disjointUnion(makeChain(2), makeChain(3))}) {
        CHECK(countLinearExtensions(p) == mpz_class(linearExtensions(p).size()));
    }
    CHECK(countLinearExtensions(makeChain(6)) == 1);
    CHECK(countLinearExtensions(makeAntichain(6)) == 720);
    Poset p = diamond(), q = makeAntichain(2);
    CHECK(countLinearExtensions(ordinalSum(p, q)) ==
          countLinearExtensions(p) * countLinearExtensions(q));
}

TEST_CASE("order filters") {
    CHECK(orderFilters(makeAntichain(2)).size() == 4);
    auto c3Filters = orderFilters(makeChain(3));
    CHECK(c3Filters == std::vector<uint64_t>{0b000, 0b100, 0b110, 0b111});

    Poset d = diamond();
    auto oracle = filtersByMaskScan(d);
    CHECK(oracle.size() == 6); // frozen from the subset scan
    auto filters = orderFilters(d);
    CHECK(std::set<uint64_t>(filters.begin(), filters.end()) == oracle);
    CHECK(std::is_sorted(filters.begin(), filters.end()));
}

TEST_CASE("filters are complements of ideals") {
    for (const Poset& p : {diamond(), makeChain(4), makeAntichain(4)}) {
        std::set<uint64_t> filters = filtersByMaskScan(p);
        size_t ideals = 0;
        for (uint64_t mask = 0; mask < (uint64_t(1) << p.size()); ++mask)
            if (filters.count(~mask & p.groundMask())) ++ideals;
        CHECK(ideals == filters.size());
    }
    CHECK(orderFilters(makeAntichain(5)).size() == 32);
}

TEST_CASE("isomorphism") {
    CHECK(isomorphism(makeChain(3), makeChain(3)));
    CHECK(!isomorphism(disjointUnion(makeChain(2), makeChain(2)), makeChain(4)));

    // Oracle: brute force over all bijections for diamond vs its dual.
    Poset d = diamond();
    Poset dual = posetFromCovers(4, {{3, 1}, {3, 2}, {1, 0}, {2, 0}});
    bool oracleFound = false;
    std::vector<int> perm{0, 1, 2, 3};
    do {
        bool ok = true;
        for (int a = 0; a < 4 && ok; ++a)
            for (int b = 0; b < 4 && ok; ++b)
                if (d.leq(a, b) != dual.leq(perm[a], perm[b])) ok = false;
        oracleFound = oracleFound || ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(oracleFound);
    auto iso = isomorphism(d, dual);
    REQUIRE(iso);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(d.leq(a, b) == dual.leq((*iso)[a], (*iso)[b]));
}

TEST_CASE("quotients") {
    Poset c3 = makeChain(3);
    Poset q = quotientByPartition(c3, {{{0, 1}, {2}}});
    CHECK(isomorphism(q, makeChain(2)));

    // Oracle for the diamond quotient: closure computed by double loop.
    Poset d = diamond();
    SetPartition part{{{0}, {1, 2}, {3}}};
    bool block01 = false, block12 = false;
    for (int a : part.blocks[0])
        for (int b : part.blocks[1])
            if (d.leq(a, b)) block01 = true;
    for (int a : part.blocks[1])
        for (int b : part.blocks[2])
            if (d.leq(a, b)) block12 = true;
    CHECK(block01);
    CHECK(block12);
    CHECK(isomorphism(quotientByPartition(d, part), makeChain(3)));

    CHECK_THROWS_AS(quotientByPartition(c3, {{{0, 2}, {1}}}), IncompatiblePartition);
}

TEST_CASE("connected subsets") {
    Poset d = diamond();
    CHECK(!isConnectedSubset(d, 0b0110)); // the two parallel middles
    CHECK(isConnectedSubset(d, 0b1011)); // bottom, one middle, top
    CHECK(isConnectedSubset(d, 0b0010));
    CHECK(isConnectedSubset(d, 0));
}

TEST_CASE("cover round trip") {
    for (const Poset& p : {diamond(), makeChain(5), makeAntichain(4),
                           productPoset(makeChain(2), makeChain(3)),
                           ordinalSum(diamond(), makeAntichain(2))}) {
        Poset rebuilt = posetFromCovers(p.size(), p.covers());
        CHECK(rebuilt.covers() == p.covers());
        for (int i = 0; i < p.size(); ++i) CHECK(rebuilt.upSet(i) == p.upSet(i));
    }
}
