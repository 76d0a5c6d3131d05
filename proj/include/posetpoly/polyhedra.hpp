#ifndef POSETPOLY_POLYHEDRA_HPP
#define POSETPOLY_POLYHEDRA_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "posetpoly/errors.hpp"
#include "posetpoly/rational.hpp"

namespace posetpoly {

/// Dynamic bitset used for vertex and facet incidence sets.
class Bits {
public:
    Bits() = default;
    explicit Bits(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    size_t size() const { return n_; }
    void set(size_t i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(size_t i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    Bits& operator&=(const Bits& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    /// sub is a subset of *this
    bool containsAll(const Bits& sub) const {
        for (size_t k = 0; k < w_.size(); ++k)
            if (sub.w_[k] & ~w_[k]) return false;
        return true;
    }
    size_t count() const;
    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }
    void forEach(const std::function<void(size_t)>& f) const;

    const std::vector<uint64_t>& words() const { return w_; }

    friend bool operator==(const Bits&, const Bits&) = default;
    friend bool operator<(const Bits& a, const Bits& b) { return a.w_ < b.w_; }

private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

/// One affine constraint: a . x >= b for inequalities, a . x == b for
/// equalities. Which one it is depends on which HRep list it sits in.
struct LinRow {
    RatVec a;
    Rat b;

    friend bool operator==(const LinRow&, const LinRow&) = default;
    friend bool operator<(const LinRow& l, const LinRow& r) {
        if (l.a != r.a) return l.a < r.a;
        return l.b < r.b;
    }
};

struct HRep {
    int dim = 0;
    std::vector<LinRow> ineqs;
    std::vector<LinRow> eqs;
};

struct VRep {
    int dim = 0;
    std::vector<RatVec> verts;
};

/// Matched exact H- and V-descriptions plus vertex-facet incidence.
/// h is irredundant: its equalities span the affine hull and every
/// inequality induces a facet.
struct PolytopePair {
    HRep h;
    VRep v;
    int dim = 0;                 // dimension of the polytope itself
    std::vector<Bits> facetVerts; // facet -> incident vertices
    std::vector<Bits> vertFacets; // vertex -> tight facets
};

/// Scales an inequality by a positive rational so that all coefficients and
/// the constant are coprime integers. Orientation is preserved.
void normalizeInequality(LinRow& row);
/// Same, but also flips sign so the leading nonzero coefficient is positive.
void normalizeEquality(LinRow& row);

struct VertexEnumOptions {
    std::optional<std::chrono::steady_clock::time_point> deadline;
    size_t maxRays = 1'000'000;
};

/// Exact vertex enumeration by the double description method: equalities are
/// substituted away, the inequality system is homogenized to a pointed cone,
/// and constraints are inserted in lexicographic order with adjacency-tested
/// ray combination. Throws UnboundedError when a recession ray is found and
/// InfeasibleError when the region is empty. Vertices come out sorted.
VRep verticesOf(const HRep& h, const VertexEnumOptions& opt = {});

/// Facet enumeration of a point set: affine hull by exact elimination, then
/// vertex enumeration of the polar body in hull coordinates. Rows come out
/// canonical: reduced modulo the hull equalities and scaled to coprime
/// integers.
HRep facetsOf(const VRep& v);

/// Canonical irredundant description: implied inequalities removed, implicit
/// equalities lifted into the equality list.
HRep irredundant(const HRep& h);

HRep intersectWithEquations(const HRep& h, const std::vector<LinRow>& eqs);

/// Substitutes x_{tau(u)} = 1 - x_u for the lexicographically smaller member
/// u of every pair, producing an affinely isomorphic description in half the
/// coordinates. The pairing equalities must all be present in h.eqs.
HRep eliminatePairedCoordinates(const HRep& h, const std::vector<int>& pairing);
/// The matching projection of a point.
RatVec projectPairedPoint(const RatVec& x, const std::vector<int>& pairing);

PolytopePair makePair(const HRep& h, const VertexEnumOptions& opt = {});
PolytopePair makePairFromVertices(const VRep& v);

using FVector = std::vector<long long>;

struct FaceEnumOptions {
    size_t maxFaces = 5'000'000;
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct FaceRec {
    Bits verts;
    Bits facets;
    int dim = 0;
};

/// All proper nonempty faces, found as closures in the vertex-facet
/// incidence. Throws ScaleError past maxFaces or the deadline.
std::vector<FaceRec> enumerateFaces(const PolytopePair& p, const FaceEnumOptions& opt = {});

/// Counts of proper nonempty faces by dimension, f_0 .. f_{d-1}.
FVector fVector(const PolytopePair& p, const FaceEnumOptions& opt = {});

bool eulerRelationHolds(const FVector& f);

/// Vertex index pairs forming 1-faces.
std::vector<std::pair<int, int>> polytopeEdges(const PolytopePair& p);

/// Face-lattice isomorphism, decided on the vertex-facet incidence structure
/// by color refinement plus backtracking. Throws SizeError above the vertex
/// cap.
bool combEquivalent(const PolytopePair& p, const PolytopePair& q, size_t maxVertices = 2000);

/// Exact volume by recursive triangulation over the face lattice, relative
/// to the coordinate chart on the affine hull. For full-dimensional input
/// this is the Euclidean volume.
Rat volume(const PolytopePair& p);

/// Cartesian product with concatenated coordinates.
PolytopePair productPolytope(const PolytopePair& p, const PolytopePair& q);

/// Affine rank of a point set minus one; dimension of its hull.
int affineDimension(const std::vector<RatVec>& points);

} // namespace posetpoly

#endif
