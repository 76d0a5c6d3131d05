#ifndef POSETPOLY_IO_HPP
#define POSETPOLY_IO_HPP

#include <string>
#include <vector>

#include "posetpoly/builders.hpp"
#include "posetpoly/derived.hpp"
#include "posetpoly/poset.hpp"
#include "posetpoly/prob.hpp"
#include "posetpoly/search.hpp"

namespace posetpoly {

enum class OutputFormat { Json, Dot, Csv, Ine, Ext };
OutputFormat outputFormatFromString(const std::string& s);

/// Text format: first line "n=<count>", then one cover "a<b" per line;
/// '#' starts a comment. Tokens may be indices or arbitrary labels.
Poset parsePosetText(const std::string& text);
/// {"n":..., "covers":[[a,b],...], "labels":[...]?}
Poset parsePosetJson(const std::string& text);
/// Dispatches on the leading non-space character ('{' means JSON).
Poset parsePosetAuto(const std::string& text);

/// diamond, pentagon, c2c3, c2c4, c2c2c2, chainN, antichainN.
Poset builtinPoset(const std::string& name);

std::string posetToJson(const Poset& p);
std::string posetToDot(const Poset& p, const std::string& name = "poset");

std::string hrepToIne(const HRep& h);
std::string vrepToExt(const VRep& v);

/// Hasse diagrams of the base poset, the pairs poset, the quotient and the
/// parallel-pair poset as one DOT document.
std::string deriveToDot(const Poset& p);

std::string probMatrixToCsv(const ProbMatrix& pi);

// CLI verb reports; each throws FormatError on unsupported combinations.
std::string reportPoset(const Poset& p, OutputFormat fmt);
std::string reportDerive(const Poset& p, OutputFormat fmt);
std::string reportProb(const Poset& p, OutputFormat fmt);
std::string reportOrderPolytope(const Poset& p, OutputFormat fmt);
std::string reportPrp(const Poset& p, OutputFormat fmt);

std::string scanRecordsToJsonLines(const std::vector<ScanRecord>& records, bool includeTimings = false);
std::vector<ScanRecord> scanRecordsFromJsonLines(const std::string& text);

std::string catalogueToJson(const std::vector<CatalogueEntry>& entries);
std::string balanceResultToJson(const BalanceScanResult& r);

} // namespace posetpoly

#endif
