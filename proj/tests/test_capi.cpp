#include <doctest.h>

#include <cstring>
#include <string>

#include "posetpoly.h"

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    pp_string_free(s);
    return out;
}

} // namespace

TEST_CASE("poset handles") {
    pp_poset* p = nullptr;
    REQUIRE(pp_poset_builtin("pentagon", &p) == PP_OK);
    CHECK(pp_poset_size(p) == 5);
    pp_poset_free(p);

    int covers[] = {0, 1, 1, 2};
    REQUIRE(pp_poset_from_covers(3, covers, 2, &p) == PP_OK);
    CHECK(pp_poset_size(p) == 3);
    pp_poset_free(p);

    REQUIRE(pp_poset_parse("n=2\n0<1\n", &p) == PP_OK);
    CHECK(pp_poset_size(p) == 2);
    pp_poset_free(p);
}

TEST_CASE("error codes and messages") {
    pp_poset* p = nullptr;
    CHECK(pp_poset_builtin("nonsense", &p) == PP_ERR_VALIDATION);
    CHECK(std::strlen(pp_last_error()) > 0);

    int cyc[] = {0, 1, 1, 0};
    CHECK(pp_poset_from_covers(2, cyc, 2, &p) == PP_ERR_VALIDATION);

    REQUIRE(pp_poset_builtin("diamond", &p) == PP_OK);
    char* out = nullptr;
    CHECK(pp_report_prob(p, "ine", &out) == PP_ERR_VALIDATION);
    CHECK(pp_report_prp(p, "nope", &out) == PP_ERR_VALIDATION);
    pp_poset_free(p);

    CHECK(pp_scan(99, 1.0, nullptr, 1, 0, &out) == PP_ERR_SCALE);
    CHECK(pp_catalogue(7, &out) == PP_ERR_VALIDATION);
}

TEST_CASE("prp report through the shared library") {
    pp_poset* p = nullptr;
    REQUIRE(pp_poset_builtin("pentagon", &p) == PP_OK);
    char* out = nullptr;
    REQUIRE(pp_report_prp(p, "json", &out) == PP_OK);
    std::string json = take(out);
    CHECK(json.find("\"all_integral\": true") != std::string::npos);
    CHECK(json.find("\"dim\": 2") != std::string::npos);
    pp_poset_free(p);
}

TEST_CASE("scan and balance through the shared library") {
    char* out = nullptr;
    REQUIRE(pp_scan(3, 10.0, nullptr, 1, 0, &out) == PP_OK);
    std::string jsonl = take(out);
    CHECK(jsonl.find("\"all_integral\":true") != std::string::npos);

    // Resume with the previous output reproduces it.
    char* again = nullptr;
    REQUIRE(pp_scan(3, 10.0, jsonl.c_str(), 1, 0, &again) == PP_OK);
    CHECK(take(again) == jsonl);

    REQUIRE(pp_balance_scan(3, &out) == PP_OK);
    std::string balance = take(out);
    CHECK(balance.find("\"min_balance\": \"1/3\"") != std::string::npos);
}

TEST_CASE("catalogue through the shared library") {
    char* out = nullptr;
    REQUIRE(pp_catalogue(3, &out) == PP_OK);
    std::string json = take(out);
    CHECK(json.find("\"f_vector\"") != std::string::npos);
}
