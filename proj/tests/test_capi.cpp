#include "doctest.h"

#include <cstdint>
#include <cstring>
#include <string>

#include "json.hpp"

#include "apxalg/apxalg.h"

namespace {

// RAII wrapper so failed CHECKs cannot leak handles
struct handle {
    apx_scenario* s = nullptr;
    ~handle() { apx_scenario_free(s); }
};

std::string take(char* text) {
    REQUIRE(text != nullptr);
    std::string out(text);
    apx_string_free(text);
    return out;
}

}  // namespace

TEST_SUITE("c_api") {

TEST_CASE("lifecycle: preset, name, serialize, reload") {
    handle h;
    REQUIRE(apx_scenario_preset("chen", &h.s) == APX_OK);
    char* name = nullptr;
    REQUIRE(apx_scenario_name(h.s, &name) == APX_OK);
    CHECK(take(name) == "chen");

    char* text = nullptr;
    REQUIRE(apx_scenario_to_text(h.s, &text) == APX_OK);
    const std::string doc = take(text);
    handle back;
    REQUIRE(apx_scenario_from_text(doc.c_str(), &back.s) == APX_OK);
    char* text2 = nullptr;
    REQUIRE(apx_scenario_to_text(back.s, &text2) == APX_OK);
    CHECK(take(text2) == doc);
}

TEST_CASE("scalar queries match the library closed forms") {
    handle h;
    REQUIRE(apx_scenario_preset("chen", &h.s) == APX_OK);
    std::int64_t degree = 0;
    CHECK(apx_floor_degree(h.s, 20, &degree) == APX_OK);
    CHECK(degree == 38);
    std::uint64_t dim = 0;
    CHECK(apx_dim_piece(h.s, 16, &dim) == APX_OK);
    CHECK(dim == 32);
    std::uint64_t image = 0;
    CHECK(apx_image_dim(h.s, 4, 2, &image) == APX_OK);
    CHECK(image == 15);
    char* ratio = nullptr;
    CHECK(apx_approx_ratio(h.s, 16, 2, &ratio) == APX_OK);
    CHECK(take(ratio) == "63/64");
    std::uint64_t count = 0;
    CHECK(apx_support_count(h.s, 1024, &count) == APX_OK);
    CHECK(count == 11);
    std::int64_t deficiency = 0;
    int within = 0;
    CHECK(apx_deficiency(1023, &deficiency, &within) == APX_OK);
    CHECK(deficiency == 10);
    CHECK(within == 1);
}

TEST_CASE("status codes by failure class") {
    handle h;
    // usage: unknown preset
    CHECK(apx_scenario_preset("bogus", &h.s) == APX_ERROR_USAGE);
    CHECK(h.s == nullptr);
    CHECK(std::strlen(apx_last_error()) > 0);
    // validation: structurally valid JSON with a broken scenario
    CHECK(apx_scenario_from_text(R"({"name": "t", "points": ["0", "0"],
                                     "rule": {"kind": "finite-table", "values": ["1", "1"]}})",
                                 &h.s) == APX_ERROR_VALIDATION);
    CHECK(std::string(apx_last_error()).find("duplicate") != std::string::npos);
    // validation: file that does not exist
    CHECK(apx_scenario_from_file("/nonexistent/nowhere.json", &h.s) == APX_ERROR_VALIDATION);
    // usage: null out-pointers and null handles
    CHECK(apx_scenario_preset("chen", nullptr) == APX_ERROR_USAGE);
    std::uint64_t dim = 0;
    CHECK(apx_dim_piece(nullptr, 1, &dim) == APX_ERROR_USAGE);
    REQUIRE(apx_scenario_preset("chen", &h.s) == APX_OK);
    CHECK(apx_dim_piece(h.s, 1, nullptr) == APX_ERROR_USAGE);
    // usage: malformed epsilon reaches the parser and comes back as usage
    char* text = nullptr;
    const std::uint64_t ps[] = {2};
    CHECK(apx_cmd_certify(h.s, "0.25", ps, 1, 8, 1, APX_FORMAT_JSON, &text) == APX_ERROR_USAGE);
    CHECK(apx_cmd_certify(h.s, "3/2", ps, 1, 8, 1, APX_FORMAT_JSON, &text) == APX_ERROR_USAGE);
    CHECK(text == nullptr);
}

TEST_CASE("command documents render through the boundary") {
    handle h;
    REQUIRE(apx_scenario_preset("harmonic", &h.s) == APX_OK);
    char* text = nullptr;
    REQUIRE(apx_cmd_seq(h.s, 4, APX_FORMAT_JSON, &text) == APX_OK);
    const auto seq = nlohmann::json::parse(take(text));
    CHECK(seq["command"] == "seq");
    CHECK(seq["rows"].size() == 4);
    CHECK(seq["rows"][3]["entries"] == "(4, 2, 1, 1)");

    REQUIRE(apx_cmd_support(h.s, 6, APX_FORMAT_CSV, &text) == APX_OK);
    const std::string csv = take(text);
    CHECK(csv.substr(0, csv.find('\n')) == "n,count");

    const std::uint64_t ps[] = {4};
    REQUIRE(apx_cmd_certify(h.s, "1/2", ps, 1, 64, 2, APX_FORMAT_JSON, &text) == APX_OK);
    const auto cert = nlohmann::json::parse(take(text));
    CHECK(cert["summary"]["verdict"] == "refuted-at(p=4, n=64)");

    REQUIRE(apx_cmd_volume(h.s, 6, 1, APX_FORMAT_TABLE, &text) == APX_OK);
    CHECK(take(text).find("command: volume") == 0);
}

TEST_CASE("oracle check and bundled report set the mismatch flag to clean") {
    handle h;
    REQUIRE(apx_scenario_preset("finite:2", &h.s) == APX_OK);
    char* text = nullptr;
    int mismatch = 1;
    REQUIRE(apx_cmd_oracle_check(h.s, 8, APX_FORMAT_JSON, &text, &mismatch) == APX_OK);
    CHECK(mismatch == 0);
    const auto doc = nlohmann::json::parse(take(text));
    CHECK(doc["summary"]["result"] == "all checks match");

    mismatch = 1;
    REQUIRE(apx_cmd_report(h.s, 2, &text, &mismatch) == APX_OK);
    CHECK(mismatch == 0);
    const auto bundle = nlohmann::json::parse(take(text));
    CHECK(bundle["sections"].size() == 6);
    CHECK(bundle["oracle_mismatch"] == false);
}

TEST_CASE("version is a dotted triple") {
    const std::string v = apx_version();
    CHECK(v.find('.') != std::string::npos);
}

}  // TEST_SUITE
