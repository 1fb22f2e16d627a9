#include "doctest.h"

#include <fstream>
#include <sstream>

#include "cubiclinks/formats.hpp"
#include "json.hpp"

using namespace cubiclinks;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(CUBICLINKS_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file ", name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("line listing") {
    std::string md = render_lines(OutputFormat::Md);
    CHECK(md.substr(0, md.find('\n')) == "e1 = (0;-1,0,0,0,0,0)");
    CHECK(md.find("l12 = (1;1,1,0,0,0,0)") != std::string::npos);
    CHECK(md.find("c1 = (2;0,1,1,1,1,1)") != std::string::npos);
    int rows = 0;
    for (char ch : md)
        if (ch == '\n') ++rows;
    CHECK(rows == 27);
}

TEST_CASE("emitters are deterministic") {
    for (OutputFormat fmt : {OutputFormat::Md, OutputFormat::Csv, OutputFormat::Json}) {
        CHECK(render_enumerate(fmt) == render_enumerate(fmt));
        CHECK(render_tables(fmt) == render_tables(fmt));
    }
}

TEST_CASE("every renderer produces output in every format") {
    SurfaceClass c = parse_surface_class("(3;1,1,0,0,0,0)");
    for (OutputFormat fmt : {OutputFormat::Md, OutputFormat::Csv, OutputFormat::Json}) {
        CHECK_FALSE(render_lines(fmt).empty());
        CHECK_FALSE(render_secancy(c, fmt).empty());
        CHECK_FALSE(render_normalize(c, fmt).empty());
        CHECK_FALSE(render_h0(c, fmt).empty());
        CHECK_FALSE(render_cubics(c, fmt).empty());
        CHECK_FALSE(render_classify(c, fmt).empty());
        CHECK_FALSE(render_enumerate(fmt).empty());
        CHECK_FALSE(render_analyze(c, fmt).empty());
        CHECK_FALSE(render_tables(fmt).empty());
    }
}

TEST_CASE("analyze markdown fields") {
    std::string md = render_analyze(parse_surface_class("(3;1,1,0,0,0,0)"), OutputFormat::Md);
    CHECK(md.find("-Kx^3 = 8") != std::string::npos);
    CHECK(md.find("steps = 2 x Flip12; 4 x Flop") != std::string::npos);
    CHECK(md.find("basket = 3 x 1/2(1,1,1)") != std::string::npos);
    CHECK(md.find("flipped = c1, c2") != std::string::npos);
    CHECK(md.find("flopped = c3, c4, c5, c6") != std::string::npos);
    CHECK(md.find("-Ky^3 = 19/2") != std::string::npos);
    CHECK(md.find("Fano-Weil index = 1") != std::string::npos);

    std::string md6 = render_analyze(parse_surface_class("(5;3,1,1,1,1,1)"), OutputFormat::Md);
    CHECK(md6.find("flopped = (none)") != std::string::npos);
    CHECK(md6.find("del Pezzo fibration degree = 4") != std::string::npos);
    CHECK(md6.find("-Ky0^3 = 25/2") != std::string::npos);
}

TEST_CASE("enumerate matches the golden files byte for byte") {
    CHECK(render_enumerate(OutputFormat::Md) == slurp("enumerate.md"));
    CHECK(render_enumerate(OutputFormat::Csv) == slurp("enumerate.csv"));
    CHECK(render_enumerate(OutputFormat::Json) == slurp("enumerate.json"));
}

TEST_CASE("tables match the golden files byte for byte") {
    CHECK(render_tables(OutputFormat::Md) == slurp("tables.md"));
    CHECK(render_tables(OutputFormat::Csv) == slurp("tables.csv"));
    CHECK(render_tables(OutputFormat::Json) == slurp("tables.json"));
}

TEST_CASE("enumerate JSON fields") {
    auto j = nlohmann::json::parse(render_enumerate(OutputFormat::Json));
    REQUIRE(j.size() == 6);
    CHECK(j[1]["type"] == "(3;2,0,0,0,0,0)");
    CHECK(j[3]["degree"] == 8);
    CHECK(j[3]["genus"] == 5);
}

TEST_CASE("analyze JSON schema") {
    auto j = nlohmann::json::parse(
        render_analyze(parse_surface_class("(3;2,0,0,0,0,0)"), OutputFormat::Json));
    CHECK(j["type"] == "(3;2,0,0,0,0,0)");
    CHECK(j["kx3"] == "6/1");
    CHECK(j["linkKind"]["kind"] == "II");
    CHECK(j["linkKind"]["ky3"] == "55/6");
    CHECK(j["linkKind"]["fanoWeilIndex"] == 3);
    CHECK(j["steps"][0]["kind"] == "Flip13");
    CHECK(j["steps"][0]["count"] == 1);
    CHECK(j["steps"][1]["kind"] == "Flop");
    CHECK(j["steps"][1]["count"] == 5);
    CHECK(j["basket"] == nlohmann::json({"1/2(1,1,1)", "1/3(1,1,2)"}));
    CHECK(j["contractedLines"]["flipped"] == nlohmann::json({"c1"}));

    auto i = nlohmann::json::parse(
        render_analyze(parse_surface_class("(5;3,1,1,1,1,1)"), OutputFormat::Json));
    CHECK(i["linkKind"]["kind"] == "I");
    CHECK(i["linkKind"]["dpDegree"] == 4);
    CHECK(i["linkKind"]["ky03"] == "25/2");
}

TEST_CASE("printed type strings re-parse") {
    for (const auto& l : twenty_seven_lines())
        CHECK(parse_surface_class(to_string(l.cls)) == l.cls);
    auto j = nlohmann::json::parse(render_enumerate(OutputFormat::Json));
    for (const auto& row : j) {
        SurfaceClass c = parse_surface_class(row["type"].get<std::string>());
        CHECK(to_string(c) == row["type"].get<std::string>());
    }
}

TEST_CASE("csv row counts") {
    std::string csv = render_enumerate(OutputFormat::Csv);
    int rows = 0;
    for (char ch : csv)
        if (ch == '\n') ++rows;
    CHECK(rows == 7);  // header + six rows
}
