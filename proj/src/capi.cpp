#include "posetpoly.h"

#include <cstring>
#include <string>

#include "posetpoly/io.hpp"

using namespace posetpoly;

struct pp_poset {
    Poset poset;
};

namespace {

thread_local std::string g_lastError;

pp_status statusOf(const Error& e) {
    switch (e.category()) {
    case Error::Category::Validation: return PP_ERR_VALIDATION;
    case Error::Category::Geometry: return PP_ERR_GEOMETRY;
    case Error::Category::Scale: return PP_ERR_SCALE;
    case Error::Category::Internal: return PP_ERR_INTERNAL;
    }
    return PP_ERR_INTERNAL;
}

char* copyOut(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
pp_status guarded(Fn&& fn) {
    try {
        fn();
        g_lastError.clear();
        return PP_OK;
    } catch (const Error& e) {
        g_lastError = e.what();
        return statusOf(e);
    } catch (const std::exception& e) {
        g_lastError = e.what();
        return PP_ERR_INTERNAL;
    }
}

pp_status reportWith(const pp_poset* p, const char* format, char** out,
                     std::string (*fn)(const Poset&, OutputFormat)) {
    if (!p || !format || !out) {
        g_lastError = "null argument";
        return PP_ERR_VALIDATION;
    }
    return guarded([&]() { *out = copyOut(fn(p->poset, outputFormatFromString(format))); });
}

} // namespace

extern "C" {

const char* pp_last_error(void) { return g_lastError.c_str(); }

void pp_string_free(char* s) { delete[] s; }

pp_status pp_poset_from_covers(int n, const int* covers, size_t ncovers, pp_poset** out) {
    if (!out || (ncovers > 0 && !covers)) {
        g_lastError = "null argument";
        return PP_ERR_VALIDATION;
    }
    return guarded([&]() {
        std::vector<std::pair<int, int>> cv;
        for (size_t i = 0; i < ncovers; ++i) cv.emplace_back(covers[2 * i], covers[2 * i + 1]);
        *out = new pp_poset{posetFromCovers(n, cv)};
    });
}

pp_status pp_poset_parse(const char* text, pp_poset** out) {
    if (!text || !out) {
        g_lastError = "null argument";
        return PP_ERR_VALIDATION;
    }
    return guarded([&]() { *out = new pp_poset{parsePosetAuto(text)}; });
}

pp_status pp_poset_builtin(const char* name, pp_poset** out) {
    if (!name || !out) {
        g_lastError = "null argument";
        return PP_ERR_VALIDATION;
    }
    return guarded([&]() { *out = new pp_poset{builtinPoset(name)}; });
}

void pp_poset_free(pp_poset* p) { delete p; }

int pp_poset_size(const pp_poset* p) { return p ? p->poset.size() : -1; }

pp_status pp_report_poset(const pp_poset* p, const char* format, char** out) {
    return reportWith(p, format, out, &reportPoset);
}

pp_status pp_report_derive(const pp_poset* p, const char* format, char** out) {
    return reportWith(p, format, out, &reportDerive);
}

pp_status pp_report_prob(const pp_poset* p, const char* format, char** out) {
    return reportWith(p, format, out, &reportProb);
}

pp_status pp_report_polytope(const pp_poset* p, const char* format, char** out) {
    return reportWith(p, format, out, &reportOrderPolytope);
}

pp_status pp_report_prp(const pp_poset* p, const char* format, char** out) {
    return reportWith(p, format, out, &reportPrp);
}

pp_status pp_scan(int max_n, double time_budget_seconds, const char* resume_jsonl, int threads,
                  int include_timings, char** out_jsonl) {
    if (!out_jsonl) {
        g_lastError = "null argument";
        return PP_ERR_VALIDATION;
    }
    return guarded([&]() {
        ScanOptions opt;
        opt.maxN = max_n;
        opt.timeBudgetSeconds = time_budget_seconds > 0 ? time_budget_seconds : 60.0;
        opt.threads = threads;
        if (resume_jsonl) opt.resume = scanRecordsFromJsonLines(resume_jsonl);
        *out_jsonl = copyOut(scanRecordsToJsonLines(scanPrp(opt), include_timings != 0));
    });
}

pp_status pp_catalogue(int n, char** out_json) {
    if (!out_json) {
        g_lastError = "null argument";
        return PP_ERR_VALIDATION;
    }
    return guarded([&]() { *out_json = copyOut(catalogueToJson(catalogueSmall(n))); });
}

pp_status pp_balance_scan(int max_n, char** out_json) {
    if (!out_json) {
        g_lastError = "null argument";
        return PP_ERR_VALIDATION;
    }
    return guarded([&]() { *out_json = copyOut(balanceResultToJson(balanceScan(max_n))); });
}

} // extern "C"
