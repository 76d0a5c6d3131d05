#include "posetpoly/derived.hpp"

#include <algorithm>

namespace posetpoly {

namespace {

std::vector<PairElement> allOrderedPairs(int n) {
    std::vector<PairElement> out;
    out.reserve(static_cast<size_t>(n) * (n - 1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) out.push_back({a, b});
    return out;
}

// Generator relation on ordered pairs: same first and second goes up, or
// same second and first goes down.
bool generatorLeq(const Poset& p, const PairElement& u, const PairElement& v) {
    if (u.first == v.first && p.leq(u.second, v.second)) return true;
    if (u.second == v.second && p.leq(v.first, u.first)) return true;
    return false;
}

Poset closureOfGenerators(const Poset& p, const std::vector<PairElement>& elems) {
    int k = static_cast<int>(elems.size());
    if (k > Poset::kMaxElements)
        throw ScaleError("derived pair poset with " + std::to_string(k) + " elements exceeds the 64-element cap");
    std::vector<uint64_t> up(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (generatorLeq(p, elems[i], elems[j])) up[i] |= uint64_t(1) << j;
    for (int c = 0; c < k; ++c)
        for (int i = 0; i < k; ++i)
            if ((up[i] >> c) & 1u) up[i] |= up[c];
    return Poset::fromClosedRelation(k, std::move(up)); // throws CycleError if antisymmetry fails
}

std::vector<std::string> pairLabels(const Poset& base, const std::vector<PairElement>& elems) {
    std::vector<std::string> labels;
    labels.reserve(elems.size());
    for (const auto& e : elems) labels.push_back("(" + base.label(e.first) + "," + base.label(e.second) + ")");
    return labels;
}

} // namespace

int DerivedPairsPoset::indexOf(const PairElement& e) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), e);
    if (it == elements.end() || !(*it == e)) throw IndexError("pair not present in pairs poset");
    return static_cast<int>(it - elements.begin());
}

int LambdaPoset::indexOf(const PairElement& e) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), e);
    if (it == elements.end() || !(*it == e)) throw IndexError("pair not present in parallel-pair poset");
    return static_cast<int>(it - elements.begin());
}

DerivedPairsPoset pairsPoset(const Poset& p) {
    if (p.size() < 2) throw ArgError("pairs poset needs at least two elements");
    DerivedPairsPoset d;
    d.base = p;
    d.elements = allOrderedPairs(p.size());
    d.order = closureOfGenerators(p, d.elements);
    d.order.setLabels(pairLabels(p, d.elements));
    return d;
}

LambdaPoset lambdaPoset(const Poset& p) {
    LambdaPoset l;
    l.base = p;
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (a != b && p.parallel(a, b)) l.elements.push_back({a, b});
    l.pairCount = static_cast<int>(l.elements.size()) / 2;
    if (l.elements.empty()) {
        l.order = Poset();
        return l;
    }
    l.order = closureOfGenerators(p, l.elements);
    l.order.setLabels(pairLabels(p, l.elements));
    l.tau.resize(l.elements.size());
    for (size_t i = 0; i < l.elements.size(); ++i)
        l.tau[i] = l.indexOf({l.elements[i].second, l.elements[i].first});

    // The closure of the generators restricted to parallel pairs must agree
    // with the restriction of the full pairs-poset order. Only checkable
    // while the full pairs poset fits in the element cap.
    if (p.size() >= 2 && p.size() * (p.size() - 1) <= Poset::kMaxElements) {
        DerivedPairsPoset d = pairsPoset(p);
        for (size_t i = 0; i < l.elements.size(); ++i)
            for (size_t j = 0; j < l.elements.size(); ++j) {
                bool induced = d.order.leq(d.indexOf(l.elements[i]), d.indexOf(l.elements[j]));
                if (induced != l.order.leq(static_cast<int>(i), static_cast<int>(j)))
                    throw InternalError("parallel-pair order disagrees with induced pairs-poset order");
            }
    }
    return l;
}

QuotientSummary pairsQuotient(const Poset& p) {
    DerivedPairsPoset d = pairsPoset(p);
    SetPartition part;
    std::vector<int> bottomBlock, topBlock;
    QuotientSummary out;
    for (size_t i = 0; i < d.elements.size(); ++i) {
        const auto& e = d.elements[i];
        if (p.less(e.second, e.first)) bottomBlock.push_back(static_cast<int>(i));
        else if (p.less(e.first, e.second)) topBlock.push_back(static_cast<int>(i));
        else out.middlePairs.push_back(e);
    }
    if (!bottomBlock.empty()) {
        out.bottom = static_cast<int>(part.blocks.size());
        part.blocks.push_back(bottomBlock);
    }
    for (const auto& e : out.middlePairs) part.blocks.push_back({d.indexOf(e)});
    if (!topBlock.empty()) {
        out.top = static_cast<int>(part.blocks.size());
        part.blocks.push_back(topBlock);
    }
    out.quotient = quotientByPartition(d.order, part);
    std::vector<std::string> labels(out.quotient.size());
    if (out.bottom) labels[*out.bottom] = "bot";
    if (out.top) labels[*out.top] = "top";
    for (size_t i = 0; i < out.middlePairs.size(); ++i)
        labels[out.middleBlock(static_cast<int>(i))] =
            "(" + p.label(out.middlePairs[i].first) + "," + p.label(out.middlePairs[i].second) + ")";
    out.quotient.setLabels(std::move(labels));
    return out;
}

bool checkTauAntitone(const LambdaPoset& lambda) {
    int k = static_cast<int>(lambda.elements.size());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (lambda.order.leq(i, j) != lambda.order.leq(lambda.tau[j], lambda.tau[i])) return false;
    return true;
}

int chainPairsRank(int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n) throw ArgError("chain pair coordinates out of range");
    if (i == j) throw ArgError("chain pair coordinates must differ");
    return i > j ? n - i + j : n - i + j - 1;
}

} // namespace posetpoly
