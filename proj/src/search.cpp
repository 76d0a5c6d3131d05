#include "posetpoly/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <thread>

namespace posetpoly {

namespace {

// All order ideals (downward-closed masks) of p.
std::vector<uint64_t> orderIdeals(const Poset& p) {
    int n = p.size();
    std::vector<uint64_t> out;
    uint64_t ground = p.groundMask();
    for (uint64_t mask = 0;; ++mask) {
        bool closed = true;
        for (int i = 0; i < n && closed; ++i)
            if (((mask >> i) & 1u) && (p.downSet(i) & ~mask)) closed = false;
        if (closed) out.push_back(mask);
        if (mask == ground) break;
    }
    return out;
}

Poset adjoinMaximalOver(const Poset& p, uint64_t ideal) {
    int n = p.size();
    std::vector<std::pair<int, int>> covers = p.covers();
    // New element n sits above exactly the ideal; add covers from its maximal
    // elements and close.
    for (int i = 0; i < n; ++i) {
        if (!((ideal >> i) & 1u)) continue;
        if (p.upSet(i) & ideal & ~(uint64_t(1) << i)) continue;
        covers.emplace_back(i, n);
    }
    return posetFromCovers(n + 1, covers);
}

} // namespace

std::vector<Poset> enumeratePosets(int n, int cap) {
    if (n < 1 || n > cap)
        throw ScaleError("poset enumeration supports 1.." + std::to_string(cap) + " elements");
    std::vector<Poset> level = {makeChain(1)};
    for (int size = 2; size <= n; ++size) {
        std::vector<Poset> next;
        // Bucket representatives by an isomorphism-invariant signature so
        // most duplicate candidates are rejected without a backtracking run.
        std::map<std::vector<long>, std::vector<size_t>> buckets;
        for (const Poset& p : level)
            for (uint64_t ideal : orderIdeals(p)) {
                Poset candidate = adjoinMaximalOver(p, ideal);
                auto sig = isoSignature(candidate);
                auto& bucket = buckets[sig];
                bool fresh = true;
                for (size_t idx : bucket)
                    if (isomorphism(candidate, next[idx])) {
                        fresh = false;
                        break;
                    }
                if (fresh) {
                    bucket.push_back(next.size());
                    next.push_back(std::move(candidate));
                }
            }
        std::sort(next.begin(), next.end(), [](const Poset& a, const Poset& b) {
            return a.covers() < b.covers();
        });
        level = std::move(next);
    }
    return level;
}

namespace {

int threadCountFromEnv(int requested, size_t jobs) {
    int threads = requested;
    if (threads <= 0) {
        if (const char* env = std::getenv("POSET_POLY_THREADS")) threads = std::atoi(env);
        if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads <= 0) threads = 1;
    }
    return std::max(1, std::min<int>(threads, static_cast<int>(jobs)));
}

ScanRecord scanOne(const Poset& p, int id, double budgetSeconds) {
    auto start = std::chrono::steady_clock::now();
    auto deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                std::chrono::duration<double>(budgetSeconds));
    ScanRecord rec;
    rec.id = id;
    rec.n = p.size();
    rec.covers = p.covers();
    rec.m = p.parallelPairCount();
    if (!p.isChain()) rec.minBalanceValue = minBalance(p).value;
    try {
        VertexEnumOptions vopt;
        vopt.deadline = deadline;
        PrpSpec spec = prp(p, vopt);
        rec.prpDim = spec.full.dim;
        rec.vertexCount = static_cast<long long>(spec.full.v.verts.size());
        rec.allIntegral = spec.allIntegral;
        try {
            FaceEnumOptions fopt;
            fopt.deadline = deadline;
            fopt.maxFaces = 600'000; // bounds memory; the time budget usually hits first
            rec.fvec = fVector(spec.full, fopt);
        } catch (const ScaleError&) {
            rec.timedOut = true;
        }
    } catch (const ScaleError&) {
        rec.timedOut = true;
    }
    rec.wallSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

} // namespace

std::vector<ScanRecord> scanPrp(const ScanOptions& opt) {
    if (opt.maxN < 1 || opt.maxN > 7) throw ScaleError("scan supports 1..7 elements");
    struct Job {
        Poset poset;
        int id;
    };
    std::vector<Job> jobs;
    std::vector<ScanRecord> done;
    int id = 0;
    for (int n = 1; n <= opt.maxN; ++n)
        for (Poset& p : enumeratePosets(n)) {
            bool resumed = false;
            for (const ScanRecord& r : opt.resume)
                if (r.id == id && r.n == n && r.covers == p.covers()) {
                    done.push_back(r);
                    resumed = true;
                    break;
                }
            if (!resumed) jobs.push_back({std::move(p), id});
            ++id;
        }

    int threads = threadCountFromEnv(opt.threads, jobs.size());
    std::vector<ScanRecord> fresh(jobs.size());
    if (threads <= 1) {
        for (size_t i = 0; i < jobs.size(); ++i)
            fresh[i] = scanOne(jobs[i].poset, jobs[i].id, opt.timeBudgetSeconds);
    } else {
        std::atomic<size_t> cursor{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&]() {
                for (;;) {
                    size_t i = cursor.fetch_add(1);
                    if (i >= jobs.size()) break;
                    fresh[i] = scanOne(jobs[i].poset, jobs[i].id, opt.timeBudgetSeconds);
                }
            });
        for (auto& t : pool) t.join();
    }
    for (auto& r : fresh) done.push_back(std::move(r));
    std::sort(done.begin(), done.end(), [](const ScanRecord& a, const ScanRecord& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.covers != b.covers) return a.covers < b.covers;
        return a.id < b.id;
    });
    return done;
}

std::vector<CatalogueEntry> catalogueSmall(int n) {
    if (n < 2 || n > 4) throw ArgError("catalogue covers sizes 2..4");
    std::vector<CatalogueEntry> out;
    int id = 0;
    for (const Poset& p : enumeratePosets(n)) {
        CatalogueEntry entry;
        entry.id = id++;
        entry.poset = p;
        PrpSpec spec = prp(p);
        entry.lambda = std::move(spec.lambda);
        entry.prpDim = spec.full.dim;
        entry.vertexCount = static_cast<long long>(spec.full.v.verts.size());
        entry.allIntegral = spec.allIntegral;
        entry.fvec = fVector(spec.full);
        entry.edges = polytopeEdges(spec.full);
        out.push_back(std::move(entry));
    }
    return out;
}

BalanceScanResult balanceScan(int maxN) {
    if (maxN < 2 || maxN > 6) throw ScaleError("balance scan supports 2..6 elements");
    std::optional<BalanceScanResult> best;
    int scanned = 0;
    for (int n = 2; n <= maxN; ++n)
        for (const Poset& p : enumeratePosets(n)) {
            if (p.isChain()) continue;
            ++scanned;
            BalancePair bp = minBalance(p);
            if (!best || bp.value < best->value) {
                best = BalanceScanResult{bp.value, p, bp.pair, 0};
            }
        }
    if (!best) throw InternalError("no non-chain poset scanned");
    best->classesScanned = scanned;
    return *best;
}

} // namespace posetpoly
