#include "posetpoly/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace posetpoly {

namespace {

int popcount64(uint64_t x) { return std::popcount(x); }

std::vector<std::string> defaultLabels(int n) {
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return labels;
}

// In-place reflexive-transitive closure of up-set masks.
void closeRelation(int n, std::vector<uint64_t>& up) {
    for (int i = 0; i < n; ++i) up[i] |= uint64_t(1) << i;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if ((up[i] >> k) & 1u) up[i] |= up[k];
}

} // namespace

Poset Poset::fromClosedRelation(int n, std::vector<uint64_t> up) {
    if (n < 0 || n > kMaxElements)
        throw ArgError("poset size " + std::to_string(n) + " outside supported range 0.." +
                       std::to_string(kMaxElements));
    Poset p;
    p.n_ = n;
    p.up_ = std::move(up);
    p.down_.assign(n, 0);
    uint64_t ground = p.groundMask();
    for (int i = 0; i < n; ++i) {
        if (p.up_[i] & ~ground) throw InternalError("relation mask out of range");
        if (!((p.up_[i] >> i) & 1u)) throw InternalError("relation not reflexive");
        for (int j = 0; j < n; ++j)
            if ((p.up_[i] >> j) & 1u) p.down_[j] |= uint64_t(1) << i;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool ij = (p.up_[i] >> j) & 1u;
            if (ij && i != j && ((p.up_[j] >> i) & 1u))
                throw CycleError("relation closure violates antisymmetry between " + std::to_string(i) +
                                 " and " + std::to_string(j));
            if (ij && (p.up_[j] & ~p.up_[i])) throw InternalError("relation not transitive");
        }
    // Transitive reduction: i covers-below j iff nothing sits strictly between.
    for (int i = 0; i < n; ++i) {
        uint64_t strictUp = p.up_[i] & ~(uint64_t(1) << i);
        for (int j = 0; j < n; ++j) {
            if (!((strictUp >> j) & 1u)) continue;
            uint64_t between = strictUp & p.down_[j] & ~(uint64_t(1) << j);
            if (between == 0) p.covers_.emplace_back(i, j);
        }
    }
    std::sort(p.covers_.begin(), p.covers_.end());
    p.labels_ = defaultLabels(n);
    return p;
}

void Poset::setLabels(std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != n_) throw ArgError("label count does not match poset size");
    labels_ = std::move(labels);
}

bool Poset::isChain() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (parallel(i, j)) return false;
    return true;
}

bool Poset::isAntichain() const {
    for (int i = 0; i < n_; ++i)
        if (up_[i] != (uint64_t(1) << i)) return false;
    return true;
}

int Poset::parallelPairCount() const {
    int m = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (parallel(i, j)) ++m;
    return m;
}

Poset posetFromCovers(int n, const std::vector<std::pair<int, int>>& covers) {
    if (n < 0 || n > Poset::kMaxElements)
        throw ArgError("poset size " + std::to_string(n) + " outside supported range");
    std::vector<uint64_t> up(n, 0);
    for (auto [a, b] : covers) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw IndexError("cover (" + std::to_string(a) + "," + std::to_string(b) +
                             ") out of range for n=" + std::to_string(n));
        if (a == b) throw CycleError("self-loop cover (" + std::to_string(a) + "," + std::to_string(a) + ")");
        up[a] |= uint64_t(1) << b;
    }
    closeRelation(n, up);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (((up[i] >> j) & 1u) && ((up[j] >> i) & 1u))
                throw CycleError("covers contain a directed cycle through " + std::to_string(i) + " and " +
                                 std::to_string(j));
    return Poset::fromClosedRelation(n, std::move(up));
}

Poset makeChain(int n) {
    if (n < 1) throw ArgError("chain needs at least one element");
    std::vector<uint64_t> up(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) up[i] |= uint64_t(1) << j;
    return Poset::fromClosedRelation(n, std::move(up));
}

Poset makeAntichain(int n) {
    if (n < 1) throw ArgError("antichain needs at least one element");
    std::vector<uint64_t> up(n, 0);
    for (int i = 0; i < n; ++i) up[i] = uint64_t(1) << i;
    return Poset::fromClosedRelation(n, std::move(up));
}

Poset productPoset(const Poset& p, const Poset& q) {
    int n = p.size() * q.size();
    if (n > Poset::kMaxElements) throw ArgError("product poset too large");
    std::vector<uint64_t> up(n, 0);
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < q.size(); ++b)
            for (int c = 0; c < p.size(); ++c)
                for (int d = 0; d < q.size(); ++d)
                    if (p.leq(a, c) && q.leq(b, d)) up[a * q.size() + b] |= uint64_t(1) << (c * q.size() + d);
    return Poset::fromClosedRelation(n, std::move(up));
}

namespace {

Poset combineSideBySide(const Poset& p, const Poset& q, bool stack) {
    int n = p.size() + q.size();
    if (n > Poset::kMaxElements) throw ArgError("combined poset too large");
    std::vector<uint64_t> up(n, 0);
    for (int i = 0; i < p.size(); ++i) up[i] = p.upSet(i);
    for (int i = 0; i < q.size(); ++i) up[p.size() + i] = q.upSet(i) << p.size();
    if (stack) {
        uint64_t allQ = (q.size() == 0) ? 0 : (((uint64_t(1) << q.size()) - 1) << p.size());
        for (int i = 0; i < p.size(); ++i) up[i] |= allQ;
    }
    return Poset::fromClosedRelation(n, std::move(up));
}

} // namespace

Poset ordinalSum(const Poset& p, const Poset& q) { return combineSideBySide(p, q, true); }
Poset disjointUnion(const Poset& p, const Poset& q) { return combineSideBySide(p, q, false); }

PairOrder classifyPair(const Poset& p, int x, int y) {
    p.checkIndex(x);
    p.checkIndex(y);
    if (x == y) return PairOrder::Equal;
    if (p.leq(x, y)) return PairOrder::Less;
    if (p.leq(y, x)) return PairOrder::Greater;
    return PairOrder::Parallel;
}

void forEachLinearExtension(const Poset& p, const std::function<bool(const std::vector<int>&)>& visit) {
    int n = p.size();
    std::vector<int> order;
    order.reserve(n);
    uint64_t placed = 0;
    // Backtracking over minimal elements of the remaining subposet, smallest
    // label first, which yields lexicographic emission order.
    std::function<bool()> rec = [&]() -> bool {
        if (static_cast<int>(order.size()) == n) return visit(order);
        for (int i = 0; i < n; ++i) {
            if ((placed >> i) & 1u) continue;
            if (p.downSet(i) & ~placed & ~(uint64_t(1) << i)) continue;
            placed |= uint64_t(1) << i;
            order.push_back(i);
            bool cont = rec();
            order.pop_back();
            placed &= ~(uint64_t(1) << i);
            if (!cont) return false;
        }
        return true;
    };
    rec();
}

std::vector<std::vector<int>> linearExtensions(const Poset& p) {
    std::vector<std::vector<int>> out;
    forEachLinearExtension(p, [&](const std::vector<int>& ext) {
        out.push_back(ext);
        return true;
    });
    return out;
}

mpz_class countLinearExtensions(const Poset& p) {
    int n = p.size();
    if (n == 0) return 1;
    // Count chains in the ideal lattice: extensions of an ideal I are built by
    // appending a maximal element of I.
    std::map<uint64_t, mpz_class> memo;
    std::function<mpz_class(uint64_t)> count = [&](uint64_t ideal) -> mpz_class {
        if (ideal == 0) return 1;
        auto it = memo.find(ideal);
        if (it != memo.end()) return it->second;
        mpz_class total = 0;
        for (int i = 0; i < n; ++i) {
            if (!((ideal >> i) & 1u)) continue;
            if (p.upSet(i) & ideal & ~(uint64_t(1) << i)) continue; // not maximal in the ideal
            total += count(ideal & ~(uint64_t(1) << i));
        }
        memo.emplace(ideal, total);
        return total;
    };
    return count(p.groundMask());
}

bool isLinearExtensionOf(const Poset& p, const std::vector<int>& order) {
    int n = p.size();
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n || pos[order[i]] != -1) return false;
        pos[order[i]] = i;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && p.leq(a, b) && pos[a] > pos[b]) return false;
    return true;
}

std::vector<uint64_t> orderFilters(const Poset& p, int maxElements) {
    int n = p.size();
    if (n > maxElements)
        throw ScaleError("filter enumeration capped at " + std::to_string(maxElements) + " elements");
    std::vector<uint64_t> out;
    uint64_t ground = p.groundMask();
    for (uint64_t mask = 0;; ++mask) {
        bool closed = true;
        for (int i = 0; i < n && closed; ++i)
            if (((mask >> i) & 1u) && (p.upSet(i) & ~mask)) closed = false;
        if (closed) out.push_back(mask);
        if (mask == ground) break;
    }
    return out;
}

mpz_class countOrderFilters(const Poset& p) {
    // Filters are complements of ideals; count ideals by peeling minimal
    // elements would still be exponential, so just scan masks (n <= 64 but
    // practical up to ~25).
    int n = p.size();
    if (n > 25) throw ScaleError("filter counting capped at 25 elements");
    mpz_class total = 0;
    uint64_t ground = p.groundMask();
    for (uint64_t mask = 0;; ++mask) {
        bool closed = true;
        for (int i = 0; i < n && closed; ++i)
            if (((mask >> i) & 1u) && (p.upSet(i) & ~mask)) closed = false;
        if (closed) ++total;
        if (mask == ground) break;
    }
    return total;
}

namespace {

struct IsoProfile {
    std::vector<long> color;
};

// Iterated degree-profile refinement: start from (|up|, |down|, cover
// degrees) and fold in sorted neighbor colors until stable.
IsoProfile refine(const Poset& p) {
    int n = p.size();
    std::vector<int> coverOut(n, 0), coverIn(n, 0);
    for (auto [a, b] : p.covers()) {
        ++coverOut[a];
        ++coverIn[b];
    }
    std::vector<std::vector<long>> key(n);
    for (int i = 0; i < n; ++i)
        key[i] = {popcount64(p.upSet(i)), popcount64(p.downSet(i)), coverOut[i], coverIn[i]};
    IsoProfile prof;
    prof.color.assign(n, 0);
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<long>> extKeys(n);
        for (int i = 0; i < n; ++i) {
            std::vector<long> ext = key[i];
            std::vector<long> upColors, downColors;
            for (int j = 0; j < n; ++j) {
                if (i != j && p.leq(i, j)) upColors.push_back(prof.color[j]);
                if (i != j && p.leq(j, i)) downColors.push_back(prof.color[j]);
            }
            std::sort(upColors.begin(), upColors.end());
            std::sort(downColors.begin(), downColors.end());
            ext.push_back(-1);
            ext.insert(ext.end(), upColors.begin(), upColors.end());
            ext.push_back(-2);
            ext.insert(ext.end(), downColors.begin(), downColors.end());
            extKeys[i] = std::move(ext);
        }
        // Canonical ids: rank of the key among sorted distinct keys, so two
        // posets refine to comparable colors.
        std::vector<std::vector<long>> sortedKeys = extKeys;
        std::sort(sortedKeys.begin(), sortedKeys.end());
        sortedKeys.erase(std::unique(sortedKeys.begin(), sortedKeys.end()), sortedKeys.end());
        std::vector<long> next(n);
        for (int i = 0; i < n; ++i)
            next[i] = static_cast<long>(std::lower_bound(sortedKeys.begin(), sortedKeys.end(), extKeys[i]) -
                                        sortedKeys.begin());
        if (next == prof.color) break;
        prof.color = std::move(next);
    }
    return prof;
}

} // namespace

std::vector<long> isoSignature(const Poset& p) {
    IsoProfile prof = refine(p);
    std::vector<long> sig = prof.color;
    std::sort(sig.begin(), sig.end());
    sig.push_back(p.size());
    sig.push_back(static_cast<long>(p.covers().size()));
    return sig;
}

std::optional<std::vector<int>> isomorphism(const Poset& p, const Poset& q) {
    int n = p.size();
    if (n != q.size()) return std::nullopt;
    if (n == 0) return std::vector<int>{};
    IsoProfile pp = refine(p), qp = refine(q);
    {
        std::vector<long> a = pp.color, b = qp.color;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    // Map the most constrained elements first.
    std::vector<int> orderP(n);
    std::iota(orderP.begin(), orderP.end(), 0);
    std::vector<int> classSize(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (pp.color[j] == pp.color[i]) ++classSize[i];
    std::sort(orderP.begin(), orderP.end(), [&](int a, int b) {
        if (classSize[a] != classSize[b]) return classSize[a] < classSize[b];
        return a < b;
    });
    std::vector<int> map(n, -1), used(n, 0);
    std::function<bool(int)> rec = [&](int idx) -> bool {
        if (idx == n) return true;
        int a = orderP[idx];
        for (int b = 0; b < n; ++b) {
            if (used[b] || qp.color[b] != pp.color[a]) continue;
            bool ok = true;
            for (int prevIdx = 0; prevIdx < idx && ok; ++prevIdx) {
                int c = orderP[prevIdx];
                if (p.leq(a, c) != q.leq(b, map[c])) ok = false;
                if (p.leq(c, a) != q.leq(map[c], b)) ok = false;
            }
            if (!ok) continue;
            map[a] = b;
            used[b] = 1;
            if (rec(idx + 1)) return true;
            used[b] = 0;
            map[a] = -1;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return map;
}

Poset quotientByPartition(const Poset& p, const SetPartition& part) {
    int n = p.size();
    int k = static_cast<int>(part.blocks.size());
    if (k > Poset::kMaxElements) throw ArgError("too many blocks");
    std::vector<int> blockOf(n, -1);
    for (int b = 0; b < k; ++b) {
        if (part.blocks[b].empty()) throw ArgError("partition has an empty block");
        for (int e : part.blocks[b]) {
            p.checkIndex(e);
            if (blockOf[e] != -1) throw ArgError("partition blocks overlap at element " + std::to_string(e));
            blockOf[e] = b;
        }
    }
    for (int e = 0; e < n; ++e)
        if (blockOf[e] == -1) throw ArgError("partition does not cover element " + std::to_string(e));

    std::vector<uint64_t> up(k, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p.leq(a, b)) up[blockOf[a]] |= uint64_t(1) << blockOf[b];
    for (int i = 0; i < k; ++i) up[i] |= uint64_t(1) << i;
    for (int c = 0; c < k; ++c)
        for (int i = 0; i < k; ++i)
            if ((up[i] >> c) & 1u) up[i] |= up[c];
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (((up[i] >> j) & 1u) && ((up[j] >> i) & 1u))
                throw IncompatiblePartition("block order closure is not antisymmetric (blocks " +
                                            std::to_string(i) + ", " + std::to_string(j) + ")");
    return Poset::fromClosedRelation(k, std::move(up));
}

bool isConnectedSubset(const Poset& p, uint64_t members) {
    members &= p.groundMask();
    if (members == 0) return true;
    int start = std::countr_zero(members);
    uint64_t seen = uint64_t(1) << start;
    uint64_t frontier = seen;
    while (frontier) {
        uint64_t next = 0;
        for (int i = 0; i < p.size(); ++i) {
            if (!((frontier >> i) & 1u)) continue;
            next |= (p.upSet(i) | p.downSet(i)) & members & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen == members;
}

} // namespace posetpoly
