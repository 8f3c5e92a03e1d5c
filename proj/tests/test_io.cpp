#include <gtest/gtest.h>

#include <fstream>
#include <string>

#include "bn/errors.hpp"
#include "bn/io.hpp"

using namespace bn;
using nlohmann::json;

namespace {

std::string data(const std::string& rel) { return std::string(BN_DATA_DIR) + "/" + rel; }

json record() {
    return json::parse(R"({"genus": 9, "lhs": {"r": 3, "d": 8}, "rhs": {"r": 1, "d": 4},
                          "relation": "subset", "source": "cite"})");
}

std::string parse_error(const json& doc) {
    try {
        parse_facts(doc);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(Io, ShippedFactsLoad) {
    std::size_t counts[] = {0, 0, 2, 6, 9, 18};
    for (int g = 7; g <= 12; ++g) {
        auto f = load_facts(data("genus" + std::to_string(g) + ".json"));
        EXPECT_EQ(f.size(), counts[g - 7]) << g;
        for (const auto& x : f) {
            EXPECT_EQ(x.relation.lhs.g, g);
            EXPECT_FALSE(x.source.empty());
        }
    }
}

TEST(Io, FactsParse) {
    auto f = parse_facts(json::array({record()}));
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0].relation.lhs, (Locus{9, 3, 8}));
    EXPECT_EQ(f[0].relation.rhs, (Locus{9, 1, 4}));
    EXPECT_EQ(f[0].relation.kind, RelKind::ContainedIn);
    EXPECT_EQ(f[0].source, "cite");
}

TEST(Io, FactsRejections) {
    EXPECT_NE(parse_error(record()).find("array"), std::string::npos);

    auto extra = record();
    extra["note"] = 1;
    EXPECT_NE(parse_error(json::array({record(), extra})).find("record 1"), std::string::npos);
    EXPECT_NE(parse_error(json::array({extra})).find("unknown key"), std::string::npos);

    auto missing = record();
    missing.erase("source");
    EXPECT_NE(parse_error(json::array({missing})).find("missing key"), std::string::npos);

    auto bad_rel = record();
    bad_rel["relation"] = "contains";
    EXPECT_NE(parse_error(json::array({bad_rel})).find("relation"), std::string::npos);

    auto off_locus = record();
    off_locus["rhs"]["d"] = 6;  // rho(9,1,6) >= 0
    EXPECT_NE(parse_error(json::array({off_locus})).find("not an enumerated locus"), std::string::npos);

    auto empty = record();
    empty["source"] = "";
    EXPECT_NE(parse_error(json::array({empty})).find("citation"), std::string::npos);

    auto nested = record();
    nested["lhs"]["x"] = 1;
    EXPECT_NE(parse_error(json::array({nested})).find("unknown key"), std::string::npos);

    auto not_int = record();
    not_int["genus"] = "9";
    EXPECT_FALSE(parse_error(json::array({not_int})).empty());
}

TEST(Io, FactsFileErrors) {
    EXPECT_THROW(load_facts("/nonexistent/facts.json"), ParseError);
    std::string path = ::testing::TempDir() + "bad_facts.json";
    std::ofstream(path) << "[{\"genus\": 9,, }]";
    try {
        load_facts(path);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find(path), std::string::npos);
    }
}

TEST(Io, FixtureParse) {
    auto fx = load_fixture(data("fixtures/genus9.json"));
    EXPECT_EQ(fx.genus, 9);
    EXPECT_EQ(fx.expected.loci, enumerate_loci(9));
    EXPECT_EQ(fx.expected.unknown_count(), 0u);

    std::ifstream in(data("fixtures/genus9.json"));
    json doc = json::parse(in);
    auto dup = doc;
    dup["expected"].push_back(doc["expected"][0]);
    EXPECT_THROW(parse_fixture(dup), ParseError);
    auto gap = doc;
    gap["expected"].erase(gap["expected"].begin());
    EXPECT_THROW(parse_fixture(gap), ParseError);
    auto unknown = doc;
    unknown["expected"][0]["relation"] = "unknown";
    EXPECT_EQ(parse_fixture(unknown).expected.unknown_count(), 1u);
}

TEST(Io, PosetJsonRoundTrip) {
    PosetConfig cfg;
    cfg.k3_filters = FilterConfig::on();
    auto m = assemble(12, load_facts(data("genus12.json")), cfg);
    json j = poset_json(m);
    std::string text = j.dump(2);
    EXPECT_EQ(json::parse(text).dump(2), text);
    EXPECT_EQ(j["unknown_cells"], 0);
    EXPECT_EQ(j["cells"].size(), 23u * 22u);
    EXPECT_EQ(poset_json(assemble(12, load_facts(data("genus12.json")), cfg)).dump(2), text);
}

TEST(Io, DotDeterministicAscii) {
    auto m = assemble(10, load_facts(data("genus10.json")));
    std::string a = poset_dot(m), b = poset_dot(assemble(10, load_facts(data("genus10.json"))));
    EXPECT_EQ(a, b);
    for (unsigned char c : a) {
        EXPECT_LT(c, 128);
        EXPECT_NE(c, '\r');
    }
    EXPECT_NE(a.find("M^1_{10,2} = M^2_{10,4} = M^2_{10,5}"), std::string::npos);
    EXPECT_NE(a.find("n3_8 -> n1_4 [style=solid];"), std::string::npos);
    EXPECT_NE(a.find("rank=same"), std::string::npos);
    EXPECT_EQ(a.find("dir=none"), std::string::npos);

    auto m3 = assemble(3, {});
    std::string d3 = poset_dot(m3);
    EXPECT_NE(d3.find("n1_2 [label=\"M^1_{3,2}\""), std::string::npos);
    EXPECT_EQ(d3.find("->"), std::string::npos);
}

TEST(Io, EnumerationJson) {
    LatticeBasis b{100, 9, 57};
    auto en = enumerate_assignments(b, 4, FilterConfig::off());
    json j = enumeration_json(b, 4, FilterConfig::off(), en);
    std::string text = j.dump(2);
    EXPECT_EQ(json::parse(text).dump(2), text);
    bool seen = false;
    for (const auto& a : j["assignments"])
        if (a["type"] == "1<5" && a["c1_sub_aH+bL"][0] == "H-L") {
            EXPECT_EQ(a["c2_bound"], "203/4");
            EXPECT_EQ(a["c1_quotient_xH-yL"][0], "x=0,y=-1");
            seen = true;
        }
    EXPECT_TRUE(seen);
    EXPECT_EQ(j["lattice"]["delta"], delta(b));
}
