// Command-line front end. Talks to the library exclusively through the
// public C interface in posetpoly.h.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "posetpoly.h"

namespace {

int exitCodeFor(pp_status status) {
    switch (status) {
    case PP_OK: return 0;
    case PP_ERR_VALIDATION: return 2;
    case PP_ERR_GEOMETRY: return 3;
    case PP_ERR_SCALE: return 4;
    default: return 1;
    }
}

int fail(pp_status status) {
    std::cerr << "error: " << pp_last_error() << "\n";
    return exitCodeFor(status);
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

bool writeOutput(const std::string& path, const char* data) {
    if (path.empty()) {
        std::cout << data;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return false;
    }
    out << data;
    return true;
}

struct PosetInput {
    std::string file;
    std::string builtin;

    void attach(CLI::App* cmd) {
        cmd->add_option("--poset", file, "poset file (text or JSON)");
        cmd->add_option("--builtin", builtin,
                        "builtin poset: diamond, pentagon, c2c3, c2c4, c2c2c2, chainN, antichainN");
    }

    int load(pp_poset** out) const {
        if (file.empty() == builtin.empty()) {
            std::cerr << "error: need exactly one of --poset or --builtin\n";
            return 2;
        }
        pp_status st;
        if (!builtin.empty()) {
            st = pp_poset_builtin(builtin.c_str(), out);
        } else {
            std::string text;
            try {
                text = readFile(file);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
            st = pp_poset_parse(text.c_str(), out);
        }
        if (st != PP_OK) return fail(st);
        return 0;
    }
};

int runReport(const PosetInput& input, const std::string& format, const std::string& outPath,
              pp_status (*report)(const pp_poset*, const char*, char**)) {
    pp_poset* poset = nullptr;
    if (int rc = input.load(&poset)) return rc;
    char* text = nullptr;
    pp_status st = report(poset, format.c_str(), &text);
    pp_poset_free(poset);
    if (st != PP_OK) return fail(st);
    bool ok = writeOutput(outPath, text);
    pp_string_free(text);
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact poset and probability-functions-polytope toolkit"};
    app.require_subcommand(1);

    PosetInput posetIn, deriveIn, probIn, polyIn, prpIn;
    std::string posetFmt = "json", deriveFmt = "json", probFmt = "json", polyFmt = "json", prpFmt = "json";
    std::string posetOut, deriveOut, probOut, polyOut, prpOut;
    bool deriveDot = false;

    auto* cmdPoset = app.add_subcommand("poset", "parse a poset and summarize it");
    posetIn.attach(cmdPoset);
    cmdPoset->add_option("--format", posetFmt, "json or dot");
    cmdPoset->add_option("--out", posetOut, "output file (default stdout)");

    auto* cmdDerive = app.add_subcommand("derive", "pairs poset, quotient and parallel-pair poset");
    deriveIn.attach(cmdDerive);
    cmdDerive->add_option("--format", deriveFmt, "json or dot");
    cmdDerive->add_flag("--dot", deriveDot, "shorthand for --format dot");
    cmdDerive->add_option("--out", deriveOut, "output file (default stdout)");

    auto* cmdProb = app.add_subcommand("prob", "canonical probability functions and balance");
    probIn.attach(cmdProb);
    cmdProb->add_option("--format", probFmt, "json or csv");
    cmdProb->add_option("--out", probOut, "output file (default stdout)");

    auto* cmdPoly = app.add_subcommand("polytope", "order polytope of the input poset");
    polyIn.attach(cmdPoly);
    cmdPoly->add_option("--format", polyFmt, "json, ine or ext");
    cmdPoly->add_option("--out", polyOut, "output file (default stdout)");

    auto* cmdPrp = app.add_subcommand("prp", "probability-functions polytope");
    prpIn.attach(cmdPrp);
    cmdPrp->add_option("--format", prpFmt, "json, ine, ext or dot");
    cmdPrp->add_option("--out", prpOut, "output file (default stdout)");

    auto* cmdScan = app.add_subcommand("scan", "scan all poset classes up to a size bound");
    int scanMaxN = 4;
    double scanBudget = 60.0;
    int scanThreads = 0;
    bool scanTimings = false;
    std::string scanOut, scanResume;
    cmdScan->add_option("--max-n", scanMaxN, "largest poset size (1..7)");
    cmdScan->add_option("--time-budget", scanBudget, "per-poset budget in seconds");
    cmdScan->add_option("--threads", scanThreads, "worker threads (default POSET_POLY_THREADS)");
    cmdScan->add_option("--resume", scanResume, "previous report to resume from");
    cmdScan->add_flag("--timings", scanTimings, "include wall-clock times (non-reproducible)");
    cmdScan->add_option("--out", scanOut, "output file (default stdout)");

    auto* cmdCat = app.add_subcommand("catalogue", "per-class polytope catalogue (n = 3 or 4)");
    int catN = 3;
    std::string catOut;
    cmdCat->add_option("-n,--n", catN, "poset size (3 or 4)");
    cmdCat->add_option("--out", catOut, "output file (default stdout)");

    auto* cmdBalance = app.add_subcommand("balance", "worst balance constant up to a size bound");
    int balanceMaxN = 4;
    std::string balanceOut;
    cmdBalance->add_option("--max-n", balanceMaxN, "largest poset size (2..6)");
    cmdBalance->add_option("--out", balanceOut, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    if (cmdPoset->parsed()) return runReport(posetIn, posetFmt, posetOut, &pp_report_poset);
    if (cmdDerive->parsed())
        return runReport(deriveIn, deriveDot ? "dot" : deriveFmt, deriveOut, &pp_report_derive);
    if (cmdProb->parsed()) return runReport(probIn, probFmt, probOut, &pp_report_prob);
    if (cmdPoly->parsed()) return runReport(polyIn, polyFmt, polyOut, &pp_report_polytope);
    if (cmdPrp->parsed()) return runReport(prpIn, prpFmt, prpOut, &pp_report_prp);

    if (cmdScan->parsed()) {
        std::string resumeText;
        const char* resumePtr = nullptr;
        if (!scanResume.empty()) {
            try {
                resumeText = readFile(scanResume);
                resumePtr = resumeText.c_str();
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
        }
        char* text = nullptr;
        pp_status st = pp_scan(scanMaxN, scanBudget, resumePtr, scanThreads, scanTimings ? 1 : 0, &text);
        if (st != PP_OK) return fail(st);
        bool ok = writeOutput(scanOut, text);
        pp_string_free(text);
        return ok ? 0 : 1;
    }
    if (cmdCat->parsed()) {
        char* text = nullptr;
        pp_status st = pp_catalogue(catN, &text);
        if (st != PP_OK) return fail(st);
        bool ok = writeOutput(catOut, text);
        pp_string_free(text);
        return ok ? 0 : 1;
    }
    if (cmdBalance->parsed()) {
        char* text = nullptr;
        pp_status st = pp_balance_scan(balanceMaxN, &text);
        if (st != PP_OK) return fail(st);
        bool ok = writeOutput(balanceOut, text);
        pp_string_free(text);
        return ok ? 0 : 1;
    }
    return 0;
}
