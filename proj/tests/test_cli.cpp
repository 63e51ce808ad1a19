#include <doctest.h>

#include "fanorigid/members.hpp"
#include "fanorigid/report.hpp"

using namespace fr;

namespace {

const GoldenData& golden() {
    static const GoldenData g = GoldenData::load(GoldenData::default_dir());
    return g;
}

const std::vector<Family>& families() {
    static const auto f = enumerate_families(33);
    return f;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("golden data loads") {
    CHECK(golden().rows.size() == 300);
    CHECK(golden().headers.size() == 93);
    CHECK(golden().printed_list.size() == 95);
    CHECK(golden().errata.size() == 2);
}

TEST_CASE("table type strings") {
    auto t = TableType::parse("1/3(1_x,2_y,1_t)");
    CHECK(t.r == 3);
    CHECK(t.residues == std::array<int, 3>{1, 2, 1});
    REQUIRE(t.coords);
    CHECK(*t.coords == std::array<int, 3>{0, 1, 3});
    CHECK_FALSE(TableType::parse("1/2(1,1,1)").coords);
    CHECK_THROWS_AS(TableType::parse("1/2(1,1)"), EngineError);
}

TEST_CASE("monomial lists") {
    CHECK(parse_monomial_list("w or yt").size() == 2);
    CHECK(parse_monomial_list("x^2, y").size() == 2);
    CHECK(monomial_str(leading_surface_monomial("y-α_i z")) == "y");
    CHECK(monomial_str(leading_surface_monomial("w+yt")) == "w");
}

TEST_CASE("family selection") {
    CHECK(select_family("23", families()).weights == Weights5{1, 2, 3, 4, 5});
    CHECK(select_family("5,6,22,33", families()).entry_no == 95);
    CHECK(select_family("1,5,33,22,6", families()).entry_no == 95);
    CHECK_THROWS_AS(select_family("96", families()), EngineError);
    CHECK_THROWS_AS(select_family("1,2,3", families()), EngineError);
}

TEST_CASE("printed list differences") {
    auto diffs = printed_list_differences(families(), golden());
    REQUIRE(diffs.size() == 2);
    CHECK(diffs[0].family_no == 45);
    CHECK(diffs[1].family_no == 93);
    CHECK(diffs[0].confirmed_by_table);
    CHECK(diffs[1].confirmed_by_table);
}

TEST_CASE("reports") {
    auto r1 = build_report(families()[0], golden());
    CHECK(r1.points.empty());
    CHECK(r1.notes == std::vector<std::string>{"smooth"});
    CHECK(r1.discrepancies.empty());

    auto r95 = build_report(families()[94], golden());
    CHECK(r95.points.size() == 4);
    CHECK(r95.super_rigid);
    CHECK(r95.discrepancies.empty());
    for (const auto& p : r95.points)
        for (const auto& c : p.certificates) CHECK(c.label.kind == MethodKind::Exclude);

    auto r23 = build_report(families()[22], golden(), Variant::parse("a1=0,c=0"));
    bool iota1 = false;
    for (const auto& p : r23.points)
        for (const auto& c : p.certificates) iota1 = iota1 || c.label.method == Method::IOTA1;
    CHECK(iota1);
    CHECK_THROWS_AS(build_report(families()[22], golden(), Variant::parse("zz=0")), EngineError);
}

TEST_CASE("table errata are applied only with proof") {
    auto r74 = build_report(families()[73], golden());
    REQUIRE(r74.errata.size() == 1);
    CHECK(r74.errata[0].expected == "1/13(1,3,7)");
    CHECK(r74.discrepancies.empty());
    CHECK_FALSE(printed_type_possible(families()[73], "1/13(1,3,7)"));
    CHECK(printed_type_possible(families()[73], "1/13(1,3,10)"));
    CHECK_FALSE(printed_type_possible(families()[34], "1/2(1_x,1_y,1_t)"));

    // Without the erratum file the misprint is a plain discrepancy.
    GoldenData bare = golden();
    bare.errata.clear();
    auto raw = build_report(families()[73], bare);
    CHECK(raw.errata.empty());
    CHECK(raw.discrepancies.size() == 1);

    // An erratum for a possible value is refused.
    GoldenData lying = golden();
    for (auto& r : lying.rows)
        if (r.family_no == 23 && r.point == "O_w") r.type = "1/5(1,1,4)";
    lying.errata.push_back({0, 23, "O_w", "type", "1/5(1,1,4)", "1/5(1,2,3)", "forged"});
    auto r23 = build_report(families()[22], lying);
    bool refused = false;
    for (const auto& d : r23.discrepancies) refused = refused || d.check == "erratum";
    CHECK(refused);
}

TEST_CASE("json and text views agree") {
    for (int no : {7, 23, 52, 95}) {
        auto r = build_report(families()[static_cast<size_t>(no - 1)], golden());
        auto j = to_json(r);
        CHECK(j["entry_no"] == no);
        CHECK(j["points"].size() == r.points.size());
        CHECK(j["discrepancies"].size() == r.discrepancies.size());
        auto text = to_text(r);
        for (const auto& p : j["points"]) CHECK(text.find(p["point"].get<std::string>()) != std::string::npos);
    }
}

TEST_CASE("generic members") {
    for (const auto& f : families()) {
        auto p = generic_member(f, 9);
        CHECK(p.homogeneous_degree(f.weights) == f.d);
        CHECK(p.terms().size() == general_support(f).size());
    }
    auto s = special_member_23();
    CHECK(s.homogeneous_degree({1, 2, 3, 4, 5}) == 14);
    CHECK(eliminated_in(s, families()[22], 2) == 1);
}

}  // TEST_SUITE
