#ifndef POSETPOLY_BUILDERS_HPP
#define POSETPOLY_BUILDERS_HPP

#include "posetpoly/derived.hpp"
#include "posetpoly/polyhedra.hpp"
#include "posetpoly/poset.hpp"

namespace posetpoly {

enum class OrderPolytopePresentation {
    Box,          // 0 <= x_i <= 1 for every element plus one row per related pair
    CoverReduced, // bounds only at minimal/maximal elements plus one row per cover
    Hatted        // two extra coordinates pinned to 0 and 1, comparisons against them included
};

struct OrderPolytopeSpec {
    Poset source;
    OrderPolytopePresentation presentation = OrderPolytopePresentation::CoverReduced;
    HRep h;
};

/// H-description of the monotone maps source -> [0,1], coordinate i for
/// element i. The cover-reduced presentation is irredundant by construction.
OrderPolytopeSpec orderPolytope(const Poset& q,
                                OrderPolytopePresentation pres = OrderPolytopePresentation::CoverReduced);

/// Vertices as characteristic vectors of order filters, sorted. Equals the
/// vertex set of the order polytope.
VRep geissingerVertices(const Poset& q);

/// Unordered filter pairs {S,T} with S strictly inside T and T \ S connected;
/// exactly the 1-faces of the order polytope. Pairs come sorted.
std::vector<std::pair<uint64_t, uint64_t>> hibiLiEdges(const Poset& q);

/// The polytope of probability functions in its two coordinatizations: the
/// full one over all ordered parallel pairs, and the reduced one over one
/// representative per unordered pair.
struct PrpSpec {
    Poset source;
    LambdaPoset lambda;
    std::vector<LinRow> pairingEqs; // x_u + x_{tau(u)} = 1 per unordered pair
    PolytopePair full;              // order polytope of lambda cut by the pairing equalities
    PolytopePair reduced;           // paired coordinates eliminated
    bool allIntegral = false;       // every vertex coordinate in {0,1}
};

PrpSpec prp(const Poset& p, const VertexEnumOptions& opt = {});

/// Characteristic vectors of filters S of the parallel-pair poset that pick
/// exactly one of u, tau(u) from every pair; these are exactly the 0/1
/// vertices of the probability-functions polytope.
VRep integralVerticesByFilters(const Poset& p);

struct LinExtPolytopeSpec {
    Poset source;
    VRep v;                      // characteristic vectors over all ordered non-equal pairs
    std::vector<LinRow> hullEqs; // affine hull, canonical rows
};

/// Convex hull of the linear-extension indicator vectors. Throws ScaleError
/// when e(P) exceeds the cap.
LinExtPolytopeSpec linextPolytope(const Poset& p, long extensionCap = 10000);

} // namespace posetpoly

#endif
