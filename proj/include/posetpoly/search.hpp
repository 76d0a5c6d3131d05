#ifndef POSETPOLY_SEARCH_HPP
#define POSETPOLY_SEARCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "posetpoly/builders.hpp"
#include "posetpoly/poset.hpp"
#include "posetpoly/prob.hpp"

namespace posetpoly {

/// One representative per isomorphism class, generated by repeatedly
/// adjoining a new maximal element over each order ideal and rejecting
/// isomorphic duplicates. Deterministic order. Capped at n = 7.
std::vector<Poset> enumeratePosets(int n, int cap = 7);

struct ScanRecord {
    int id = 0;
    int n = 0;
    std::vector<std::pair<int, int>> covers; // canonical cover list of the representative
    int m = 0;                               // unordered parallel pairs
    int prpDim = 0;
    long long vertexCount = 0;
    bool allIntegral = false;
    std::optional<FVector> fvec;             // absent when the budget ran out
    std::optional<Rat> minBalanceValue;      // absent for chains
    bool timedOut = false;
    double wallSeconds = 0.0;
};

struct ScanOptions {
    int maxN = 4;
    double timeBudgetSeconds = 60.0; // per poset
    int threads = 0;                 // 0: POSET_POLY_THREADS env or hardware count
    std::vector<ScanRecord> resume;  // records to keep instead of recomputing
};

/// Probability-functions polytope summary for every poset class with at
/// most maxN elements. Per-poset failures or timeouts mark the record
/// instead of aborting the scan. Records are sorted by (n, cover list).
std::vector<ScanRecord> scanPrp(const ScanOptions& opt);

struct CatalogueEntry {
    int id = 0;
    Poset poset;
    LambdaPoset lambda;
    int prpDim = 0;
    long long vertexCount = 0;
    bool allIntegral = false;
    FVector fvec;
    std::vector<std::pair<int, int>> edges; // edge graph of the polytope, vertex indices
};

/// Full polytope catalogue for all poset classes of the given size.
std::vector<CatalogueEntry> catalogueSmall(int n);

struct BalanceScanResult {
    Rat value;                // minimum over classes of the balance constant
    Poset witness;            // first class attaining it (n ascending)
    std::pair<int, int> pair; // witnessing element pair inside that class
    int classesScanned = 0;
};

/// Worst balance constant over all non-chain classes with at most maxN
/// elements. The balance conjecture predicts a result of at least 1/3.
BalanceScanResult balanceScan(int maxN);

} // namespace posetpoly

#endif
