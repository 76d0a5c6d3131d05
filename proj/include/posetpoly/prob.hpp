#ifndef POSETPOLY_PROB_HPP
#define POSETPOLY_PROB_HPP

#include <utility>
#include <vector>

#include "posetpoly/poset.hpp"
#include "posetpoly/rational.hpp"

namespace posetpoly {

/// Rational-valued function on ordered non-equal pairs of the base poset,
/// a candidate probability function. Values are stored in lexicographic
/// pair order: index of (a,b) is a*(n-1) + b - (b > a).
class ProbMatrix {
public:
    ProbMatrix() = default;
    explicit ProbMatrix(Poset base);

    const Poset& base() const { return base_; }
    int pairCount() const { return static_cast<int>(values_.size()); }

    const Rat& at(int x, int y) const;
    void set(int x, int y, Rat value);

    static int pairIndex(int n, int x, int y);
    static std::pair<int, int> pairAt(int n, int index);

    const std::vector<Rat>& values() const { return values_; }

private:
    Poset base_;
    std::vector<Rat> values_;
};

struct Violation {
    int axiom = 0;            // 1..4 of the reduced axioms, 0 for range
    std::pair<int, int> pair; // primary witness pair
    int third = -1;           // second witness element for the monotonicity axioms
    Rat lhs, rhs;
};

struct ViolationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the reduced probability-function axioms with exact comparisons:
/// comparable pairs pinned to 1/0, complementary values summing to 1, and
/// the two monotonicity families. Throws DomainError when the matrix is not
/// defined over the given poset.
ViolationReport validate(const Poset& p, const ProbMatrix& pi);

/// 1 on strictly related pairs (in order), 1/2 on parallel ones, 0 reversed.
ProbMatrix nuFunction(const Poset& p);

/// Indicator of the order imposed by one linear extension.
ProbMatrix linextIndicator(const Poset& p, const std::vector<int>& ell);

/// Fraction of linear extensions placing x before y, as exact rationals.
ProbMatrix sortingProbability(const Poset& p);

/// Pointwise convex combination. Throws WeightError on invalid weights.
ProbMatrix mix(const std::vector<ProbMatrix>& pis, const std::vector<Rat>& weights);

struct BalancePair {
    Rat value;
    std::pair<int, int> pair;
};

/// max over unordered pairs {x,y} of min(pi(x,y), pi(y,x)) for the sorting
/// probability. Throws ChainError on total orders.
BalancePair minBalance(const Poset& p);

} // namespace posetpoly

#endif
