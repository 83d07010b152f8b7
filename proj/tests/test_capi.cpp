#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "cyclicbound/cyclicbound.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    cb_string_free(s);
    return out;
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("code handle") {
    const int64_t reps[] = {1, 3, 7, 9};
    cb_code* c = nullptr;
    REQUIRE(cb_code_from_reps(2, 21, reps, 4, "ex", &c) == CB_OK);
    CHECK(cb_code_length(c) == 21);
    CHECK(cb_code_dimension(c) == 7);
    char* js = nullptr;
    REQUIRE(cb_code_json(c, &js) == CB_OK);
    const auto j = nlohmann::json::parse(take(js));
    CHECK(j["name"] == "ex");
    cb_code_free(c);
    CHECK(cb_code_length(nullptr) == 0);
}

TEST_CASE("errors set a status and a message") {
    const int64_t reps[] = {1, 2};
    cb_code* c = nullptr;
    CHECK(cb_code_from_reps(2, 21, reps, 2, nullptr, &c) == CB_DUPLICATE_COSET);
    CHECK(std::string(cb_last_error()).size() > 0);
    CHECK(std::string(cb_status_name(CB_DUPLICATE_COSET)) == "DuplicateCoset");
    CHECK(cb_code_from_json("{", &c, nullptr) == CB_PARSE_ERROR);
    CHECK(cb_code_json(nullptr, nullptr) == CB_INVALID_ARGUMENT);
    CHECK(cb_cosets_json(20, 2, nullptr) == CB_INVALID_ARGUMENT);
    char* out = nullptr;
    CHECK(cb_cosets_json(20, 2, &out) == CB_NOT_COPRIME);
    CHECK(cb_ratio_grid_csv(1, 1, 2, 3, 1, 2, &out) == CB_INVALID_GEOMETRY);
}

TEST_CASE("bound report and decoding") {
    cb_code* c = nullptr;
    char* warn = nullptr;
    REQUIRE(cb_code_from_json(R"({"q":2,"n":21,"coset_reps":[1,3,7,9]})", &c, &warn) == CB_OK);
    CHECK(take(warn) == "[]");
    cb_bound_options o;
    cb_bound_options_default(&o);
    o.threads = 1;
    char* out = nullptr;
    REQUIRE(cb_bound_report_json(c, &o, &out) == CB_OK);
    const auto rep = nlohmann::json::parse(take(out));
    CHECK(rep["nzl"]["d_star"] == 7);
    CHECK(rep["oracle"]["d"] == 8);

    cb_decoder* d = nullptr;
    REQUIRE(cb_decoder_new(c, "spc:5", &o, &d) == CB_OK);
    REQUIRE(cb_encode(c, "1011001", &out) == CB_OK);
    std::string cw = take(out);
    CHECK(cw.size() == 21);
    std::string r = cw;
    for (int p : {0, 7, 13}) r[p] = r[p] == '0' ? '1' : '0';
    REQUIRE(cb_decode_json(d, r.c_str(), &out) == CB_OK);
    const auto res = nlohmann::json::parse(take(out));
    CHECK(res["status"] == "success");
    CHECK(res["corrected"] == cw);
    CHECK(res["positions"] == nlohmann::json::array({0, 7, 13}));
    CHECK(cb_decode_json(d, "0101", &out) == CB_LENGTH_MISMATCH);
    REQUIRE(cb_decoder_json(d, &out) == CB_OK);
    CHECK(nlohmann::json::parse(take(out))["capability"] == 3);
    cb_decoder_free(d);

    cb_decoder* best = nullptr;
    REQUIRE(cb_decoder_new(c, nullptr, nullptr, &best) == CB_OK);
    cb_decoder_free(best);
    cb_code_free(c);
}

TEST_CASE("cosets, grid and checks") {
    char* out = nullptr;
    REQUIRE(cb_cosets_json(21, 2, &out) == CB_OK);
    const auto j = nlohmann::json::parse(take(out));
    CHECK(j["cosets"].size() == 6);
    REQUIRE(cb_ratio_grid_csv(0, 0, 2, 3, 2, 2, &out) == CB_OK);
    CHECK(take(out) == "nu,d0,m,d_star,ht,ratio\n0,2,2,2,2,1.000000\n0,3,2,3,3,1.000000\n");
    int passed = 0;
    REQUIRE(cb_paper_check_json("gf", &out, &passed) == CB_OK);
    take(out);
    CHECK(passed == 1);
    CHECK(cb_paper_check_json("nope", &out, &passed) == CB_INVALID_ARGUMENT);
}

}  // TEST_SUITE
