#ifndef POSETPOLY_POSET_HPP
#define POSETPOLY_POSET_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "posetpoly/errors.hpp"

namespace posetpoly {

/// Finite poset on elements 0..n-1. The relation is stored closed
/// (reflexive + transitive) as one 64-bit up-set mask per element, so
/// membership queries are O(1) and n is capped at 64. Instances are
/// immutable once built; share freely across threads.
class Poset {
public:
    static constexpr int kMaxElements = 64;

    Poset() = default;

    int size() const { return n_; }
    bool empty() const { return n_ == 0; }

    bool leq(int a, int b) const { return (up_[a] >> b) & 1u; }
    bool less(int a, int b) const { return a != b && leq(a, b); }
    bool parallel(int a, int b) const { return !leq(a, b) && !leq(b, a); }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

    /// Mask of {b : a <= b}, including a itself.
    uint64_t upSet(int a) const { return up_[a]; }
    /// Mask of {b : b <= a}, including a itself.
    uint64_t downSet(int a) const { return down_[a]; }
    uint64_t groundMask() const { return n_ == 64 ? ~uint64_t(0) : ((uint64_t(1) << n_) - 1); }

    bool isMinimal(int a) const { return down_[a] == (uint64_t(1) << a); }
    bool isMaximal(int a) const { return up_[a] == (uint64_t(1) << a); }

    bool isChain() const;
    bool isAntichain() const;

    /// Transitive reduction of the strict part, (lower, upper) pairs
    /// sorted lexicographically.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int a) const { return labels_[a]; }
    void setLabels(std::vector<std::string> labels);

    /// Count of unordered parallel pairs {x,y}.
    int parallelPairCount() const;

    void checkIndex(int a) const {
        if (a < 0 || a >= n_)
            throw IndexError("element index " + std::to_string(a) + " out of range for poset of size " +
                             std::to_string(n_));
    }

    /// Builds from an already closed relation. Internal constructor used by
    /// the factories below; validates the order axioms.
    static Poset fromClosedRelation(int n, std::vector<uint64_t> up);

private:
    int n_ = 0;
    std::vector<uint64_t> up_;
    std::vector<uint64_t> down_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::string> labels_;
};

enum class PairOrder { Equal, Less, Greater, Parallel };

/// Closes the given cover relations reflexively and transitively.
/// Throws CycleError when the input digraph has a directed cycle and
/// IndexError for out-of-range labels.
Poset posetFromCovers(int n, const std::vector<std::pair<int, int>>& covers);

Poset makeChain(int n);
Poset makeAntichain(int n);

/// Componentwise order on pairs (p,q), labeled row-major: (p,q) -> p*|Q|+q.
Poset productPoset(const Poset& p, const Poset& q);
/// P keeps labels 0..|P|-1, Q is shifted up; everything in P below everything in Q.
Poset ordinalSum(const Poset& p, const Poset& q);
/// Same relabeling as ordinalSum but with no cross relations.
Poset disjointUnion(const Poset& p, const Poset& q);

PairOrder classifyPair(const Poset& p, int x, int y);

/// Visits every linear extension (bottom to top) in lexicographic order of
/// the emitted permutation. The visitor returns false to stop early.
void forEachLinearExtension(const Poset& p, const std::function<bool(const std::vector<int>&)>& visit);
std::vector<std::vector<int>> linearExtensions(const Poset& p);

/// e(P) by dynamic programming over order ideals; scales past enumeration.
mpz_class countLinearExtensions(const Poset& p);

bool isLinearExtensionOf(const Poset& p, const std::vector<int>& order);

/// All upward-closed subsets as masks, sorted by mask value. Includes the
/// empty set and the full ground set. Throws ScaleError for n > maxElements.
std::vector<uint64_t> orderFilters(const Poset& p, int maxElements = 25);
mpz_class countOrderFilters(const Poset& p);

/// Relation-preserving bijection P -> Q in both directions, or nullopt.
/// Deterministic: first bijection found by backtracking ordered by a
/// degree-profile refinement.
std::optional<std::vector<int>> isomorphism(const Poset& p, const Poset& q);

/// Isomorphism-invariant fingerprint (refined color multiset); unequal
/// signatures rule an isomorphism out cheaply.
std::vector<long> isoSignature(const Poset& p);

struct SetPartition {
    std::vector<std::vector<int>> blocks;
};

/// Blocks ordered by "some member below some member", then closed
/// transitively. Throws IncompatiblePartition when the closure fails
/// antisymmetry.
Poset quotientByPartition(const Poset& p, const SetPartition& part);

/// True iff the induced subposet on `members` is connected (as the
/// undirected graph of its Hasse diagram). Empty sets and singletons count
/// as connected.
bool isConnectedSubset(const Poset& p, uint64_t members);

} // namespace posetpoly

#endif
