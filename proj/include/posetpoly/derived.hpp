#ifndef POSETPOLY_DERIVED_HPP
#define POSETPOLY_DERIVED_HPP

#include <optional>
#include <vector>

#include "posetpoly/poset.hpp"

namespace posetpoly {

/// Ordered pair of distinct elements of the base poset.
struct PairElement {
    int first = 0;
    int second = 0;

    friend bool operator==(const PairElement&, const PairElement&) = default;
    friend auto operator<=>(const PairElement&, const PairElement&) = default;
};

/// Poset on all ordered non-equal pairs. Moving up either raises the second
/// component or lowers the first; the order is the transitive closure of
/// those generator relations. Elements are listed lexicographically.
struct DerivedPairsPoset {
    Poset base;
    std::vector<PairElement> elements;
    Poset order;

    int indexOf(const PairElement& e) const;
};

DerivedPairsPoset pairsPoset(const Poset& p);

/// Induced subposet of the pairs poset on ordered parallel pairs, together
/// with the swap involution tau. Chains yield an empty poset.
struct LambdaPoset {
    Poset base;
    std::vector<PairElement> elements; // lexicographic
    Poset order;
    std::vector<int> tau; // index permutation, tau[(x,y)] = (y,x)
    int pairCount = 0;    // number of unordered parallel pairs m; |elements| == 2m

    int indexOf(const PairElement& e) const;
};

LambdaPoset lambdaPoset(const Poset& p);

/// Quotient of the pairs poset collapsing the comparable pairs: all (x,y)
/// with x>y into a bottom block, all (x,y) with x<y into a top block,
/// parallel pairs staying as singletons. For antichains both blocks are
/// empty and the quotient equals the pairs poset; for chains it is the
/// two-element chain.
struct QuotientSummary {
    Poset quotient;
    std::optional<int> bottom; // block id of the {x>y} class, if nonempty
    std::optional<int> top;    // block id of the {x<y} class, if nonempty
    std::vector<PairElement> middlePairs; // parallel pairs, block id = position + (bottom ? 1 : 0)

    int middleBlock(int i) const { return (bottom ? 1 : 0) + i; }
};

QuotientSummary pairsQuotient(const Poset& p);

/// True iff u <= v exactly when tau(v) <= tau(u), for all pairs.
bool checkTauAntitone(const LambdaPoset& lambda);

/// Rank of the pair (i,j), 1 <= i,j <= n, i != j, in the pairs poset of the
/// n-chain: n-i+j below the middle gap, n-i+j-1 above it.
int chainPairsRank(int n, int i, int j);

} // namespace posetpoly

#endif
