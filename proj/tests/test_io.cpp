#include <doctest.h>

#include "posetpoly/io.hpp"

using namespace posetpoly;

TEST_CASE("rational strings") {
    CHECK(ratToString(ratio(1, 2)) == "1/2");
    CHECK(ratToString(Rat(3)) == "3");
    CHECK(ratToString(ratio(-2, 4)) == "-1/2");
    CHECK(ratFromString("7/2") == ratio(7, 2));
    CHECK(ratFromString("-3") == Rat(-3));
    CHECK_THROWS_AS(ratFromString("1.5"), ParseError);
    CHECK_THROWS_AS(ratFromString(""), ParseError);
}

TEST_CASE("poset text format") {
    Poset p = parsePosetText("# two-chain\nn=2\n0<1\n");
    CHECK(p.size() == 2);
    CHECK(p.less(0, 1));

    Poset labeled = parsePosetText("n=3\na<b\nb<c\n");
    CHECK(labeled.label(0) == "a");
    CHECK(labeled.label(2) == "c");
    CHECK(labeled.less(0, 2));

    CHECK_THROWS_AS(parsePosetText("n=1\n0<0\n"), ParseError);
    CHECK_THROWS_AS(parsePosetText("0<1\n"), ParseError);
    CHECK_THROWS_AS(parsePosetText("n=2\n0<5\n"), ParseError);
    CHECK_THROWS_AS(parsePosetText("n=3\n0<1\n1<2\n2<0\n"), CycleError);
}

TEST_CASE("poset json round trip") {
    Poset p = parsePosetText("n=4\nw<x\nw<y\nx<z\ny<z\n");
    std::string json = posetToJson(p);
    Poset q = parsePosetJson(json);
    CHECK(q.size() == p.size());
    CHECK(q.covers() == p.covers());
    CHECK(q.labels() == p.labels());
    CHECK(isomorphism(p, q));

    CHECK(parsePosetAuto(json).size() == 4);
    CHECK(parsePosetAuto("n=1\n").size() == 1);
    CHECK_THROWS_AS(parsePosetJson("{"), ParseError);
}

TEST_CASE("builtins") {
    CHECK(builtinPoset("diamond").size() == 4);
    CHECK(builtinPoset("pentagon").size() == 5);
    CHECK(builtinPoset("c2c3").size() == 6);
    CHECK(builtinPoset("c2c4").size() == 8);
    CHECK(builtinPoset("c2c2c2").size() == 8);
    CHECK(builtinPoset("chain4").size() == 4);
    CHECK(builtinPoset("antichain3").isAntichain());
    CHECK_THROWS_AS(builtinPoset("dodecahedron"), ParseError);
}

TEST_CASE("dot output") {
    std::string dot = posetToDot(builtinPoset("diamond"));
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("n0 -> n1") != std::string::npos);

    // Parallel-pair poset of the diamond: two isolated nodes, no arrows.
    std::string derived = deriveToDot(builtinPoset("diamond"));
    auto lambdaPos = derived.find("digraph parallel_pairs");
    REQUIRE(lambdaPos != std::string::npos);
    CHECK(derived.find("->", lambdaPos) == std::string::npos);
    CHECK(derived.find("\"(1,2)\"", lambdaPos) != std::string::npos);
}

TEST_CASE("cdd-style formats") {
    HRep h;
    h.dim = 2;
    h.ineqs.push_back({{Rat(1), Rat(0)}, Rat(0)});
    h.ineqs.push_back({{Rat(0), Rat(1)}, Rat(0)});
    h.eqs.push_back({{Rat(1), Rat(1)}, Rat(1)});
    std::string ine = hrepToIne(h);
    CHECK(ine.find("H-representation") == 0);
    CHECK(ine.find("linearity 1 1") != std::string::npos);
    CHECK(ine.find(" 3 3 rational") != std::string::npos);

    VRep v;
    v.dim = 2;
    v.verts = {{Rat(0), Rat(1)}, {ratio(1, 2), ratio(1, 2)}};
    std::string ext = vrepToExt(v);
    CHECK(ext.find("V-representation") == 0);
    CHECK(ext.find(" 1 1/2 1/2") != std::string::npos);
}

TEST_CASE("prob reports") {
    Poset p = builtinPoset("diamond");
    std::string csv = probMatrixToCsv(sortingProbability(p));
    CHECK(csv.find("x,y,value") == 0);
    CHECK(csv.find("1,2,1/2") != std::string::npos);

    // A one-element poset has no pairs: header-only CSV.
    CHECK(probMatrixToCsv(sortingProbability(makeChain(1))) == "x,y,value\n");

    std::string json = reportProb(p, OutputFormat::Json);
    CHECK(json.find("\"balance\"") != std::string::npos);
    CHECK(json.find("\"min_prob_num\": \"1\"") != std::string::npos);
    CHECK(json.find("\"min_prob_den\": \"2\"") != std::string::npos);

    CHECK_THROWS_AS(reportProb(p, OutputFormat::Ine), FormatError);
}

TEST_CASE("prp report") {
    std::string json = reportPrp(builtinPoset("pentagon"), OutputFormat::Json);
    CHECK(json.find("\"all_integral\": true") != std::string::npos);
    CHECK(json.find("\"m\": 2") != std::string::npos);

    std::string ine = reportPrp(builtinPoset("diamond"), OutputFormat::Ine);
    CHECK(ine.find("H-representation") == 0);
    std::string dot = reportPrp(builtinPoset("diamond"), OutputFormat::Dot);
    CHECK(dot.find("v0 -- v1") != std::string::npos);
}

TEST_CASE("reports are byte-deterministic") {
    Poset p = builtinPoset("c2c3");
    for (int i = 0; i < 3; ++i) {
        CHECK(reportPrp(p, OutputFormat::Json) == reportPrp(p, OutputFormat::Json));
        CHECK(reportDerive(p, OutputFormat::Dot) == reportDerive(p, OutputFormat::Dot));
    }
}

TEST_CASE("scan record lines round trip") {
    ScanOptions opt;
    opt.maxN = 3;
    auto records = scanPrp(opt);
    std::string lines = scanRecordsToJsonLines(records);
    auto parsed = scanRecordsFromJsonLines(lines);
    REQUIRE(parsed.size() == records.size());
    for (size_t i = 0; i < records.size(); ++i) {
        CHECK(parsed[i].covers == records[i].covers);
        CHECK(parsed[i].vertexCount == records[i].vertexCount);
        CHECK(parsed[i].fvec == records[i].fvec);
        CHECK(parsed[i].minBalanceValue == records[i].minBalanceValue);
    }
    // Default serialization carries no wall-clock fields.
    CHECK(lines.find("wall_seconds") == std::string::npos);
    CHECK(scanRecordsToJsonLines(records) == lines);
}
