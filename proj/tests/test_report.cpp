#include "doctest.h"

#include <string>

#include "json.hpp"

#include "error.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "scenario.hpp"

using apxalg::cmd_certify;
using apxalg::cmd_dim;
using apxalg::cmd_oracle_check;
using apxalg::cmd_report;
using apxalg::cmd_seq;
using apxalg::cmd_support;
using apxalg::cmd_volume;
using apxalg::preset_scenario;
using apxalg::rational;
using apxalg::render;
using apxalg::render_format;
using apxalg::report_document;
using apxalg::scenario;

TEST_SUITE("report") {

TEST_CASE("seq rows carry the floor entries and the degree") {
    const scenario s = preset_scenario("chen");
    const report_document doc = cmd_seq(s, 5);
    REQUIRE(doc.rows.size() == 5);
    CHECK(doc.rows[4][0] == "5");
    CHECK(doc.rows[4][1] == "(5, 2, 1)");
    CHECK(doc.rows[4][2] == "8");
    CHECK(doc.rows[0][1] == "(1)");
}

TEST_CASE("dim rows are the closed-form dimensions") {
    const report_document doc = cmd_dim(preset_scenario("harmonic"), 4);
    REQUIRE(doc.rows.size() == 4);
    CHECK(doc.rows[2][1] == "6");  // J_h(3) = 5
    CHECK(doc.rows[3][1] == "9");  // J_h(4) = 8
}

TEST_CASE("certify document: exact ratios with display shadows") {
    const report_document doc =
        cmd_certify(preset_scenario("chen"), rational(1, 16), {16}, 100, 1);
    REQUIRE(doc.rows.size() == 1);
    CHECK(doc.rows[0][0] == "16");
    CHECK(doc.rows[0][1].find('/') != std::string::npos);  // exact rational string
    CHECK(doc.rows[0][4] == "1");  // deficiency of 2^4
    CHECK(doc.summary[0] == std::pair<std::string, std::string>{"verdict",
                                                                "certified-up-to-samples"});
    CHECK(doc.summary[1] == std::pair<std::string, std::string>{"certified_from_p", "16"});
    CHECK(doc.summary[2] == std::pair<std::string, std::string>{"threshold", "15/16"});

    const report_document ref =
        cmd_certify(preset_scenario("harmonic"), rational(1, 2), {4}, 64, 1);
    CHECK(ref.summary[0].second == "refuted-at(p=4, n=64)");
    CHECK(ref.rows[0][4] == "-");  // no deficiency column content off the halving divisor
}

TEST_CASE("support and volume documents") {
    const report_document sup = cmd_support(preset_scenario("chen"), 8);
    REQUIRE(sup.rows.size() == 8);
    CHECK(sup.rows[0][1] == "1");
    CHECK(sup.rows[7][1] == "4");

    const report_document vol = cmd_volume(preset_scenario("finite:2"), 4, 1);
    CHECK(vol.rows[0][2] == "3");
    CHECK(vol.rows[2][2] == "7/3");
    CHECK(vol.columns[3] == "volume_display");
}

TEST_CASE("oracle check matrix agrees everywhere and sets no mismatch") {
    for (const char* name : {"chen", "harmonic", "finite:2"}) {
        bool mismatch = true;
        const report_document doc = cmd_oracle_check(preset_scenario(name), 8, &mismatch);
        CHECK_FALSE(mismatch);
        CHECK(doc.summary[0].second == "all checks match");
        for (const auto& row : doc.rows) CHECK(row[5] == "yes");
    }
}

TEST_CASE("table rendering aligns columns and marks display fields") {
    const std::string text = render(cmd_volume(preset_scenario("chen"), 3, 1),
                                    render_format::table);
    CHECK(text.find("command: volume") != std::string::npos);
    CHECK(text.find("volume_display") != std::string::npos);
    CHECK(text.find("decimal approximations") != std::string::npos);
    // no trailing spaces on any line
    std::size_t pos = 0;
    while ((pos = text.find('\n', pos)) != std::string::npos) {
        if (pos > 0) CHECK(text[pos - 1] != ' ');
        ++pos;
    }
}

TEST_CASE("csv rendering quotes cells with commas and doubles quotes") {
    const std::string text = render(cmd_seq(preset_scenario("chen"), 3), render_format::csv);
    CHECK(text.substr(0, text.find('\n')) == "n,entries,degree");
    CHECK(text.find("\"(3, 1)\"") != std::string::npos);
    CHECK(text.find("\n3,") != std::string::npos);
}

TEST_CASE("json rendering parses back and carries exact strings") {
    const std::string text =
        render(cmd_certify(preset_scenario("chen"), rational(1, 16), {4, 8}, 50, 1),
               render_format::json);
    const auto doc = nlohmann::json::parse(text);
    CHECK(doc["command"] == "certify");
    CHECK(doc["scenario"] == "chen");
    CHECK(doc["parameters"]["epsilon"] == "1/16");
    REQUIRE(doc["rows"].size() == 2);
    CHECK(doc["rows"][0]["p"] == "4");
    const std::string ratio = doc["rows"][0]["min_ratio"];
    CHECK(ratio.find('/') != std::string::npos);
    CHECK(doc["note"].get<std::string>().find("authoritative") != std::string::npos);
}

TEST_CASE("the bundled report is byte-identical across thread widths") {
    for (const char* name : {"chen", "harmonic", "finite:2"}) {
        const scenario s = preset_scenario(name);
        bool m1 = true, m4 = true;
        const std::string r1 = cmd_report(s, 1, &m1);
        const std::string r4 = cmd_report(s, 4, &m4);
        CHECK(r1 == r4);
        CHECK_FALSE(m1);
        CHECK_FALSE(m4);
        CHECK(nlohmann::json::parse(r1)["oracle_mismatch"] == false);
    }
}

TEST_CASE("parameter validation") {
    const scenario s = preset_scenario("chen");
    CHECK_THROWS_AS(cmd_seq(s, 0), apxalg::usage_error);
    CHECK_THROWS_AS(cmd_dim(s, 0), apxalg::usage_error);
    CHECK_THROWS_AS(cmd_volume(s, 0, 1), apxalg::usage_error);
    CHECK_THROWS_AS(cmd_oracle_check(s, 0, nullptr), apxalg::usage_error);
}

}  // TEST_SUITE
