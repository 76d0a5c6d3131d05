#include "posetpoly/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace posetpoly {

using OrderedJson = nlohmann::ordered_json;

OutputFormat outputFormatFromString(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "dot") return OutputFormat::Dot;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "ine") return OutputFormat::Ine;
    if (s == "ext") return OutputFormat::Ext;
    throw FormatError("unknown output format: " + s);
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

bool isInteger(const std::string& tok) {
    if (tok.empty()) return false;
    for (char c : tok)
        if (c < '0' || c > '9') return false;
    return true;
}

} // namespace

Poset parsePosetText(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    int n = -1;
    std::vector<std::pair<std::string, std::string>> coverTokens;
    std::vector<int> coverLines;
    bool allNumeric = true;
    while (std::getline(in, line)) {
        ++lineNo;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (n < 0) {
            if (line.rfind("n=", 0) != 0)
                throw ParseError("line " + std::to_string(lineNo) + ": expected n=<count>");
            std::string num = trim(line.substr(2));
            if (!isInteger(num)) throw ParseError("line " + std::to_string(lineNo) + ": bad element count");
            n = std::stoi(num);
            continue;
        }
        auto lt = line.find('<');
        if (lt == std::string::npos)
            throw ParseError("line " + std::to_string(lineNo) + ": expected a cover a<b");
        std::string a = trim(line.substr(0, lt));
        std::string b = trim(line.substr(lt + 1));
        if (a.empty() || b.empty())
            throw ParseError("line " + std::to_string(lineNo) + ": expected a cover a<b");
        if (a == b) throw ParseError("line " + std::to_string(lineNo) + ": element below itself");
        allNumeric = allNumeric && isInteger(a) && isInteger(b);
        coverTokens.emplace_back(a, b);
        coverLines.push_back(lineNo);
    }
    if (n < 0) throw ParseError("missing n=<count> header");

    std::vector<std::pair<int, int>> covers;
    std::vector<std::string> labels;
    if (allNumeric) {
        for (size_t k = 0; k < coverTokens.size(); ++k) {
            int a = std::stoi(coverTokens[k].first);
            int b = std::stoi(coverTokens[k].second);
            if (a >= n || b >= n)
                throw ParseError("line " + std::to_string(coverLines[k]) + ": element out of range");
            covers.emplace_back(a, b);
        }
        for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    } else {
        std::map<std::string, int> index;
        auto lookup = [&](const std::string& tok, int lineRef) {
            auto it = index.find(tok);
            if (it != index.end()) return it->second;
            int id = static_cast<int>(index.size());
            if (id >= n)
                throw ParseError("line " + std::to_string(lineRef) + ": more than " + std::to_string(n) +
                                 " distinct labels");
            index.emplace(tok, id);
            labels.push_back(tok);
            return id;
        };
        for (size_t k = 0; k < coverTokens.size(); ++k) {
            int a = lookup(coverTokens[k].first, coverLines[k]);
            int b = lookup(coverTokens[k].second, coverLines[k]);
            covers.emplace_back(a, b);
        }
        while (static_cast<int>(labels.size()) < n) labels.push_back(std::to_string(labels.size()));
    }
    Poset p;
    try {
        p = posetFromCovers(n, covers);
    } catch (const IndexError& e) {
        throw ParseError(e.what());
    }
    p.setLabels(std::move(labels));
    return p;
}

Poset parsePosetJson(const std::string& text) {
    OrderedJson j;
    try {
        j = OrderedJson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("poset JSON needs an integer field n");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> covers;
    if (j.contains("covers")) {
        for (const auto& c : j["covers"]) {
            if (!c.is_array() || c.size() != 2) throw ParseError("covers must be pairs");
            covers.emplace_back(c[0].get<int>(), c[1].get<int>());
        }
    }
    Poset p;
    try {
        p = posetFromCovers(n, covers);
    } catch (const IndexError& e) {
        throw ParseError(e.what());
    }
    if (j.contains("labels")) {
        std::vector<std::string> labels;
        for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
        if (static_cast<int>(labels.size()) != n) throw ParseError("labels length must equal n");
        p.setLabels(std::move(labels));
    }
    return p;
}

Poset parsePosetAuto(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
        if (c == '{') return parsePosetJson(text);
        break;
    }
    return parsePosetText(text);
}

Poset builtinPoset(const std::string& name) {
    if (name == "diamond") return productPoset(makeChain(2), makeChain(2));
    if (name == "pentagon")
        return posetFromCovers(5, {{0, 1}, {0, 2}, {1, 4}, {2, 3}, {3, 4}});
    if (name == "c2c3") return productPoset(makeChain(2), makeChain(3));
    if (name == "c2c4") return productPoset(makeChain(2), makeChain(4));
    if (name == "c2c2c2") return productPoset(productPoset(makeChain(2), makeChain(2)), makeChain(2));
    for (const char* prefix : {"chain", "antichain"}) {
        std::string pre(prefix);
        if (name.rfind(pre, 0) == 0 && name.size() > pre.size() && isInteger(name.substr(pre.size()))) {
            int n = std::stoi(name.substr(pre.size()));
            if (n < 1 || n > Poset::kMaxElements) throw ParseError("builtin size out of range: " + name);
            return pre == "chain" ? makeChain(n) : makeAntichain(n);
        }
    }
    throw ParseError("unknown builtin poset: " + name);
}

namespace {

OrderedJson posetJson(const Poset& p) {
    OrderedJson j;
    j["n"] = p.size();
    OrderedJson covers = OrderedJson::array();
    for (auto [a, b] : p.covers()) covers.push_back({a, b});
    j["covers"] = std::move(covers);
    j["labels"] = p.labels();
    return j;
}

std::string dotId(const std::string& label) {
    std::string out = "\"";
    for (char c : label) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string hasseDot(const Poset& p, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n  rankdir=BT;\n";
    for (int i = 0; i < p.size(); ++i)
        out << "  n" << i << " [label=" << dotId(p.label(i)) << "];\n";
    for (auto [a, b] : p.covers()) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

OrderedJson ratVecJson(const RatVec& v) {
    OrderedJson arr = OrderedJson::array();
    for (const Rat& x : v) arr.push_back(ratToString(x));
    return arr;
}

OrderedJson rowJson(const LinRow& row) {
    OrderedJson j;
    j["a"] = ratVecJson(row.a);
    j["b"] = ratToString(row.b);
    return j;
}

OrderedJson hrepJson(const HRep& h) {
    OrderedJson j;
    j["dim"] = h.dim;
    OrderedJson ineqs = OrderedJson::array(), eqs = OrderedJson::array();
    for (const auto& r : h.ineqs) ineqs.push_back(rowJson(r));
    for (const auto& r : h.eqs) eqs.push_back(rowJson(r));
    j["inequalities"] = std::move(ineqs);
    j["equalities"] = std::move(eqs);
    return j;
}

OrderedJson vrepJson(const VRep& v) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& x : v.verts) arr.push_back(ratVecJson(x));
    return arr;
}

} // namespace

std::string posetToJson(const Poset& p) { return posetJson(p).dump(2) + "\n"; }

std::string posetToDot(const Poset& p, const std::string& name) { return hasseDot(p, name); }

std::string hrepToIne(const HRep& h) {
    // cdd polyhedra format: rows are [b | a] meaning b + a.x >= 0, equalities
    // flagged through the 1-based linearity list.
    std::ostringstream out;
    out << "H-representation\n";
    if (!h.eqs.empty()) {
        out << "linearity " << h.eqs.size();
        for (size_t i = 0; i < h.eqs.size(); ++i) out << " " << (i + 1);
        out << "\n";
    }
    out << "begin\n";
    out << " " << (h.eqs.size() + h.ineqs.size()) << " " << (h.dim + 1) << " rational\n";
    auto row = [&](const LinRow& r) {
        out << " " << ratToString(-r.b);
        for (const Rat& x : r.a) out << " " << ratToString(x);
        out << "\n";
    };
    for (const auto& r : h.eqs) row(r);
    for (const auto& r : h.ineqs) row(r);
    out << "end\n";
    return out.str();
}

std::string vrepToExt(const VRep& v) {
    std::ostringstream out;
    out << "V-representation\nbegin\n";
    out << " " << v.verts.size() << " " << (v.dim + 1) << " rational\n";
    for (const auto& x : v.verts) {
        out << " 1";
        for (const Rat& c : x) out << " " << ratToString(c);
        out << "\n";
    }
    out << "end\n";
    return out.str();
}

std::string deriveToDot(const Poset& p) {
    std::ostringstream out;
    out << hasseDot(p, "poset");
    if (p.size() >= 2) {
        DerivedPairsPoset d = pairsPoset(p);
        out << hasseDot(d.order, "pairs");
        QuotientSummary q = pairsQuotient(p);
        out << hasseDot(q.quotient, "quotient");
    }
    LambdaPoset l = lambdaPoset(p);
    out << hasseDot(l.order, "parallel_pairs");
    return out.str();
}

std::string probMatrixToCsv(const ProbMatrix& pi) {
    std::ostringstream out;
    out << "x,y,value\n";
    int n = pi.base().size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            out << pi.base().label(x) << "," << pi.base().label(y) << "," << ratToString(pi.at(x, y))
                << "\n";
        }
    return out.str();
}

namespace {

OrderedJson probMatrixJson(const ProbMatrix& pi) {
    OrderedJson arr = OrderedJson::array();
    int n = pi.base().size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            OrderedJson e;
            e["x"] = pi.base().label(x);
            e["y"] = pi.base().label(y);
            e["value"] = ratToString(pi.at(x, y));
            arr.push_back(std::move(e));
        }
    return arr;
}

} // namespace

std::string reportPoset(const Poset& p, OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::Json: {
        OrderedJson j = posetJson(p);
        j["is_chain"] = p.isChain();
        j["is_antichain"] = p.isAntichain();
        j["parallel_pairs"] = p.parallelPairCount();
        if (p.size() <= 20) {
            j["linear_extensions"] = countLinearExtensions(p).get_str();
            j["filters"] = countOrderFilters(p).get_str();
        }
        return j.dump(2) + "\n";
    }
    case OutputFormat::Dot:
        return posetToDot(p);
    default:
        throw FormatError("poset reports support json and dot");
    }
}

std::string reportDerive(const Poset& p, OutputFormat fmt) {
    switch (fmt) {
    case OutputFormat::Json: {
        OrderedJson j;
        j["poset"] = posetJson(p);
        if (p.size() >= 2) {
            DerivedPairsPoset d = pairsPoset(p);
            OrderedJson dj;
            dj["elements"] = d.order.size();
            dj["covers"] = OrderedJson::array();
            for (auto [a, b] : d.order.covers())
                dj["covers"].push_back({d.order.label(a), d.order.label(b)});
            j["pairs"] = std::move(dj);
            QuotientSummary q = pairsQuotient(p);
            OrderedJson qj;
            qj["elements"] = q.quotient.size();
            qj["covers"] = OrderedJson::array();
            for (auto [a, b] : q.quotient.covers())
                qj["covers"].push_back({q.quotient.label(a), q.quotient.label(b)});
            j["quotient"] = std::move(qj);
        }
        LambdaPoset l = lambdaPoset(p);
        OrderedJson lj;
        lj["elements"] = static_cast<int>(l.elements.size());
        lj["pair_count"] = l.pairCount;
        lj["covers"] = OrderedJson::array();
        for (auto [a, b] : l.order.covers()) lj["covers"].push_back({l.order.label(a), l.order.label(b)});
        OrderedJson tau = OrderedJson::array();
        for (int t : l.tau) tau.push_back(t);
        lj["tau"] = std::move(tau);
        j["parallel_pairs"] = std::move(lj);
        return j.dump(2) + "\n";
    }
    case OutputFormat::Dot:
        return deriveToDot(p);
    default:
        throw FormatError("derive reports support json and dot");
    }
}

std::string reportProb(const Poset& p, OutputFormat fmt) {
    ProbMatrix sorting = sortingProbability(p);
    switch (fmt) {
    case OutputFormat::Json: {
        OrderedJson j;
        j["poset"] = posetJson(p);
        j["nu"] = probMatrixJson(nuFunction(p));
        j["sorting_probability"] = probMatrixJson(sorting);
        if (!p.isChain()) {
            BalancePair bp = minBalance(p);
            OrderedJson bj;
            bj["pair"] = {p.label(bp.pair.first), p.label(bp.pair.second)};
            bj["min_prob_num"] = bp.value.get_num().get_str();
            bj["min_prob_den"] = bp.value.get_den().get_str();
            j["balance"] = std::move(bj);
        }
        return j.dump(2) + "\n";
    }
    case OutputFormat::Csv:
        return probMatrixToCsv(sorting);
    default:
        throw FormatError("prob reports support json and csv");
    }
}

namespace {

OrderedJson pairSummaryJson(const PolytopePair& pair) {
    OrderedJson j;
    j["ambient_dim"] = pair.v.dim;
    j["dim"] = pair.dim;
    j["vertices"] = vrepJson(pair.v);
    j["inequalities"] = OrderedJson::array();
    for (const auto& r : pair.h.ineqs) j["inequalities"].push_back(rowJson(r));
    j["equalities"] = OrderedJson::array();
    for (const auto& r : pair.h.eqs) j["equalities"].push_back(rowJson(r));
    return j;
}

} // namespace

std::string reportOrderPolytope(const Poset& p, OutputFormat fmt) {
    OrderPolytopeSpec spec = orderPolytope(p);
    switch (fmt) {
    case OutputFormat::Json: {
        PolytopePair pair = makePair(spec.h);
        OrderedJson j;
        j["poset"] = posetJson(p);
        j["polytope"] = pairSummaryJson(pair);
        // Face counts and volume blow up combinatorially; omit them past the
        // library caps rather than failing the whole report.
        try {
            j["f_vector"] = fVector(pair);
            j["volume"] = ratToString(volume(pair));
        } catch (const ScaleError&) {
        }
        return j.dump(2) + "\n";
    }
    case OutputFormat::Ine:
        return hrepToIne(irredundant(spec.h));
    case OutputFormat::Ext:
        return vrepToExt(verticesOf(spec.h));
    default:
        throw FormatError("polytope reports support json, ine and ext");
    }
}

std::string reportPrp(const Poset& p, OutputFormat fmt) {
    PrpSpec spec = prp(p);
    switch (fmt) {
    case OutputFormat::Json: {
        OrderedJson j;
        j["poset"] = posetJson(p);
        OrderedJson pairsArr = OrderedJson::array();
        for (const auto& e : spec.lambda.elements)
            pairsArr.push_back("(" + p.label(e.first) + "," + p.label(e.second) + ")");
        j["coordinates"] = std::move(pairsArr);
        j["m"] = spec.lambda.pairCount;
        j["full"] = pairSummaryJson(spec.full);
        j["reduced"] = pairSummaryJson(spec.reduced);
        j["f_vector"] = fVector(spec.full);
        j["all_integral"] = spec.allIntegral;
        return j.dump(2) + "\n";
    }
    case OutputFormat::Ine:
        return hrepToIne(spec.full.h);
    case OutputFormat::Ext:
        return vrepToExt(spec.full.v);
    case OutputFormat::Dot: {
        std::ostringstream out;
        out << "graph prp_edges {\n";
        for (size_t i = 0; i < spec.full.v.verts.size(); ++i) out << "  v" << i << ";\n";
        for (auto [a, b] : polytopeEdges(spec.full)) out << "  v" << a << " -- v" << b << ";\n";
        out << "}\n";
        return out.str();
    }
    default:
        throw FormatError("prp reports support json, ine, ext and dot");
    }
}

std::string scanRecordsToJsonLines(const std::vector<ScanRecord>& records, bool includeTimings) {
    std::ostringstream out;
    for (const auto& r : records) {
        OrderedJson j;
        j["id"] = r.id;
        j["n"] = r.n;
        OrderedJson covers = OrderedJson::array();
        for (auto [a, b] : r.covers) covers.push_back({a, b});
        j["covers"] = std::move(covers);
        j["m"] = r.m;
        j["prp_dim"] = r.prpDim;
        j["vertex_count"] = r.vertexCount;
        j["all_integral"] = r.allIntegral;
        if (r.fvec) j["f_vector"] = *r.fvec;
        if (r.minBalanceValue) j["min_balance"] = ratToString(*r.minBalanceValue);
        if (r.timedOut) j["timed_out"] = true;
        if (includeTimings) j["wall_seconds"] = r.wallSeconds;
        out << j.dump() << "\n";
    }
    return out.str();
}

std::vector<ScanRecord> scanRecordsFromJsonLines(const std::string& text) {
    std::vector<ScanRecord> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        OrderedJson j;
        try {
            j = OrderedJson::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("bad scan record: ") + e.what());
        }
        ScanRecord r;
        r.id = j.at("id").get<int>();
        r.n = j.at("n").get<int>();
        for (const auto& c : j.at("covers")) r.covers.emplace_back(c[0].get<int>(), c[1].get<int>());
        r.m = j.at("m").get<int>();
        r.prpDim = j.at("prp_dim").get<int>();
        r.vertexCount = j.at("vertex_count").get<long long>();
        r.allIntegral = j.at("all_integral").get<bool>();
        if (j.contains("f_vector")) r.fvec = j["f_vector"].get<FVector>();
        if (j.contains("min_balance")) r.minBalanceValue = ratFromString(j["min_balance"].get<std::string>());
        if (j.contains("timed_out")) r.timedOut = j["timed_out"].get<bool>();
        if (j.contains("wall_seconds")) r.wallSeconds = j["wall_seconds"].get<double>();
        out.push_back(std::move(r));
    }
    return out;
}

std::string catalogueToJson(const std::vector<CatalogueEntry>& entries) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& e : entries) {
        OrderedJson j;
        j["id"] = e.id;
        j["poset"] = posetJson(e.poset);
        j["poset_dot"] = posetToDot(e.poset);
        j["parallel_pairs_dot"] = posetToDot(e.lambda.order, "parallel_pairs");
        j["prp_dim"] = e.prpDim;
        j["vertex_count"] = e.vertexCount;
        j["all_integral"] = e.allIntegral;
        j["f_vector"] = e.fvec;
        OrderedJson edges = OrderedJson::array();
        for (auto [a, b] : e.edges) edges.push_back({a, b});
        j["edge_graph"] = std::move(edges);
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string balanceResultToJson(const BalanceScanResult& r) {
    OrderedJson j;
    OrderedJson covers = OrderedJson::array();
    for (auto [a, b] : r.witness.covers()) covers.push_back({a, b});
    j["min_balance"] = ratToString(r.value);
    j["witness_n"] = r.witness.size();
    j["witness_covers"] = std::move(covers);
    j["pair"] = {r.witness.label(r.pair.first), r.witness.label(r.pair.second)};
    j["min_prob_num"] = r.value.get_num().get_str();
    j["min_prob_den"] = r.value.get_den().get_str();
    j["classes_scanned"] = r.classesScanned;
    return j.dump(2) + "\n";
}

} // namespace posetpoly
