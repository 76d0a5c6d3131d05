#include "posetpoly/prob.hpp"

#include <algorithm>

namespace posetpoly {

ProbMatrix::ProbMatrix(Poset base) : base_(std::move(base)) {
    values_.assign(static_cast<size_t>(base_.size()) * (base_.size() - 1), Rat(0));
}

int ProbMatrix::pairIndex(int n, int x, int y) {
    if (x < 0 || x >= n || y < 0 || y >= n || x == y)
        throw IndexError("not an ordered non-equal pair: (" + std::to_string(x) + "," + std::to_string(y) + ")");
    return x * (n - 1) + y - (y > x ? 1 : 0);
}

std::pair<int, int> ProbMatrix::pairAt(int n, int index) {
    int x = index / (n - 1);
    int r = index % (n - 1);
    int y = r >= x ? r + 1 : r;
    return {x, y};
}

const Rat& ProbMatrix::at(int x, int y) const { return values_[pairIndex(base_.size(), x, y)]; }

void ProbMatrix::set(int x, int y, Rat value) { values_[pairIndex(base_.size(), x, y)] = std::move(value); }

ViolationReport validate(const Poset& p, const ProbMatrix& pi) {
    int n = p.size();
    if (pi.base().size() != n || pi.pairCount() != n * (n - 1))
        throw DomainError("probability matrix not defined on all ordered pairs of the poset");
    ViolationReport report;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            const Rat& v = pi.at(x, y);
            if (v < 0 || v > 1) report.violations.push_back({0, {x, y}, -1, v, Rat(0)});
            if (p.less(x, y) && v != 1) report.violations.push_back({1, {x, y}, -1, v, Rat(1)});
            if (x < y && pi.at(x, y) + pi.at(y, x) != 1)
                report.violations.push_back({2, {x, y}, -1, pi.at(x, y) + pi.at(y, x), Rat(1)});
        }
    for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
            if (!p.less(y, z)) continue;
            for (int x = 0; x < n; ++x) {
                if (x == y || x == z) continue;
                if (pi.at(x, y) > pi.at(x, z))
                    report.violations.push_back({3, {x, y}, z, pi.at(x, y), pi.at(x, z)});
                if (pi.at(z, x) > pi.at(y, x))
                    report.violations.push_back({4, {z, x}, y, pi.at(z, x), pi.at(y, x)});
            }
        }
    return report;
}

ProbMatrix nuFunction(const Poset& p) {
    ProbMatrix pi(p);
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y) {
            if (x == y) continue;
            if (p.less(x, y)) pi.set(x, y, Rat(1));
            else if (p.less(y, x)) pi.set(x, y, Rat(0));
            else pi.set(x, y, ratio(1, 2));
        }
    return pi;
}

ProbMatrix linextIndicator(const Poset& p, const std::vector<int>& ell) {
    if (!isLinearExtensionOf(p, ell)) throw NotAnExtension("permutation is not a linear extension of the poset");
    int n = p.size();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[ell[i]] = i;
    ProbMatrix pi(p);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) pi.set(x, y, Rat(pos[x] < pos[y] ? 1 : 0));
    return pi;
}

ProbMatrix sortingProbability(const Poset& p) {
    int n = p.size();
    if (n < 1) throw ArgError("sorting probability needs a nonempty poset");
    std::vector<long long> before(static_cast<size_t>(n) * n, 0);
    long long total = 0;
    std::vector<int> pos(n);
    forEachLinearExtension(p, [&](const std::vector<int>& ext) {
        ++total;
        for (int i = 0; i < n; ++i) pos[ext[i]] = i;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != y && pos[x] < pos[y]) ++before[x * n + y];
        return true;
    });
    ProbMatrix pi(p);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) pi.set(x, y, ratio(before[x * n + y], total));
    return pi;
}

ProbMatrix mix(const std::vector<ProbMatrix>& pis, const std::vector<Rat>& weights) {
    if (pis.empty() || pis.size() != weights.size()) throw WeightError("need one weight per matrix");
    Rat sum(0);
    for (const Rat& w : weights) {
        if (w < 0) throw WeightError("negative mixing weight");
        sum += w;
    }
    if (sum != 1) throw WeightError("mixing weights must sum to 1");
    int n = pis[0].base().size();
    for (const auto& pi : pis) {
        if (pi.base().size() != n) throw WeightError("mixed matrices live over different posets");
        for (int i = 0; i < n; ++i)
            if (pi.base().upSet(i) != pis[0].base().upSet(i))
                throw WeightError("mixed matrices live over different posets");
    }
    ProbMatrix out(pis[0].base());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            Rat v(0);
            for (size_t k = 0; k < pis.size(); ++k) v += weights[k] * pis[k].at(x, y);
            out.set(x, y, v);
        }
    return out;
}

BalancePair minBalance(const Poset& p) {
    if (p.isChain()) throw ChainError("total orders have no parallel pair to balance");
    ProbMatrix pi = sortingProbability(p);
    BalancePair best{Rat(-1), {-1, -1}};
    for (int x = 0; x < p.size(); ++x)
        for (int y = x + 1; y < p.size(); ++y) {
            Rat v = std::min(pi.at(x, y), pi.at(y, x));
            if (v > best.value) best = {v, {x, y}};
        }
    return best;
}

} // namespace posetpoly
