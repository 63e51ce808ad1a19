#include <doctest.h>

#include <random>

#include "fanorigid/report.hpp"

using namespace fr;

namespace {

// Enumerated family, so that entry-number lists apply.
Family fam(int a1, int a2, int a3, int a4) {
    static const auto all = enumerate_families(33);
    for (const auto& f : all)
        if (f.a(1) == a1 && f.a(2) == a2 && f.a(3) == a3 && f.a(4) == a4) return f;
    return make_family({a1, a2, a3, a4});
}

QuotientSingularity point(const Family& f, const std::string& id) {
    for (const auto& q : census(f))
        if (q.location == Location::parse(id)) return q;
    FAIL("no census point " << id);
    return {};
}

const GoldenData& golden() {
    static const GoldenData g = GoldenData::load(GoldenData::default_dir());
    return g;
}

std::vector<const GoldenRow*> rows_at(int no, const std::string& id) {
    std::vector<const GoldenRow*> out;
    for (const auto* r : golden().rows_for(no))
        if (r->location() == Location::parse(id)) out.push_back(r);
    return out;
}

}  // namespace

TEST_SUITE("rigidity") {

TEST_CASE("test_b examples") {
    Family f9 = fam(1, 2, 3, 3);
    auto c9 = BlowupContext::make(f9, point(f9, "O_z"));
    auto r9 = test_b(c9, 1, 1, 1);
    CHECK(r9.holds);
    CHECK(r9.lhs == Rat(1));
    Family f95 = fam(5, 6, 22, 33);
    auto r95 = test_b(BlowupContext::make(f95, point(f95, "O_zO_t")), 5, 1, 1);
    CHECK(r95.holds);
    CHECK(r95.lhs == Rat(5, 33));
    Family f2 = fam(1, 1, 1, 2);
    CHECK_FALSE(test_b(BlowupContext::make(f2, point(f2, "O_w")), 1, 1, 1).holds);
}

TEST_CASE("test_n examples") {
    Family f38 = fam(2, 3, 5, 8);
    auto r38 = test_n(BlowupContext::make(f38, point(f38, "O_yO_w")), 5, 1, 1);
    CHECK(r38.holds);
    CHECK(r38.lhs == Rat(3, 4));
    Family f44 = fam(2, 5, 6, 7);
    auto r44 = test_n(BlowupContext::make(f44, point(f44, "O_yO_t")), 7, 1, 1);
    CHECK(r44.holds);
    CHECK(r44.lhs == Rat(2, 3));
    Family f2 = fam(1, 1, 1, 2);
    CHECK_FALSE(test_n(BlowupContext::make(f2, point(f2, "O_w")), 1, 1, 1).holds);
}

TEST_CASE("test_b is monotone in m and antitone in A cubed") {
    std::mt19937 rng(41);
    for (const auto& f : enumerate_families(33))
        for (const auto& q : census(f)) {
            auto ctx = BlowupContext::make(f, q);
            int c = 1 + static_cast<int>(rng() % 12), k = rng() % 2 ? 1 : ctx.r + 1;
            for (int m = 1; m < c; ++m)
                if (test_b(ctx, c, m, k).holds) CHECK(test_b(ctx, c, m + 1, k).holds);
            auto smaller = ctx;
            smaller.a_cubed = ctx.a_cubed / Rat(2);
            int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(c));
            if (test_b(ctx, c, m, k).holds) CHECK(test_b(smaller, c, m, k).holds);
        }
}

TEST_CASE("test_p examples") {
    Family f10 = fam(1, 1, 3, 5);
    CHECK(test_p(f10, point(f10, "O_t")).holds);
    Family f21 = fam(1, 2, 4, 7);
    CHECK(test_p(f21, point(f21, "O_t")).holds);
    Family f7 = fam(1, 2, 2, 3);
    CHECK_FALSE(test_p(f7, point(f7, "O_w")).holds);
}

TEST_CASE("smooth point status") {
    std::set<int> not_lemma1, mpim;
    for (const auto& f : enumerate_families(33)) {
        auto s = smooth_point_status(f);
        if (s.status != SmoothStatus::LEMMA1) not_lemma1.insert(*f.entry_no);
        if (s.status == SmoothStatus::MPIM_PAIR) mpim.insert(*f.entry_no);
        if (s.status == SmoothStatus::SPECIAL) CHECK(s.case_id == *f.entry_no);
    }
    CHECK(not_lemma1 == std::set<int>{2, 5, 12, 13, 20, 23, 25, 33, 40, 58, 61, 76});
    CHECK(mpim == std::set<int>{33, 58});
    CHECK(smooth_point_status(fam(1, 1, 1, 2)).status == SmoothStatus::SPECIAL);
}

TEST_CASE("curve status") {
    CHECK(curve_status(fam(1, 1, 1, 2)).special);
    CHECK(curve_status(fam(1, 1, 1, 2)).max_curve_degree == 2);
    CHECK(curve_status(fam(1, 1, 2, 2)).max_curve_degree == 1);
    CHECK_FALSE(curve_status(fam(1, 2, 2, 3)).special);
    CHECK_FALSE(curve_status(fam(5, 6, 22, 33)).special);
    // The smooth quartic and sextic double solid sit apart despite A^3 = 4 and 2.
    for (auto a : {std::array<int, 4>{1, 1, 1, 1}, std::array<int, 4>{1, 1, 1, 3}}) {
        auto c = curve_status(fam(a[0], a[1], a[2], a[3]));
        CHECK(c.smooth_member);
        CHECK_FALSE(c.special);
        CHECK(std::string(curve_status_name(c)) == "SMOOTH");
    }
}

TEST_CASE("involution cases") {
    Family f2 = fam(1, 1, 1, 2);
    auto t2 = involution_case(f2, point(f2, "O_w"), Variant());
    CHECK(t2.label.method == Method::TAU);
    CHECK(t2.label.kind == MethodKind::Untwist);
    REQUIRE(t2.monomial);
    CHECK(monomial_str(*t2.monomial) == "tw^2");

    Family f23 = fam(2, 3, 4, 5);
    CHECK(involution_case(f23, point(f23, "O_t"), Variant()).label.method == Method::EPS);
    CHECK(involution_case(f23, point(f23, "O_z"), Variant::parse("special")).label.method == Method::IOTA1);

    Family f7 = fam(1, 2, 2, 3);
    CHECK(involution_case(f7, point(f7, "O_zO_t"), Variant::parse("type=II")).label.method == Method::IOTA);

    Family f95 = fam(5, 6, 22, 33);
    CHECK_THROWS_AS(involution_case(f95, point(f95, "O_y"), Variant()), EngineError);
}

TEST_CASE("negative definiteness") {
    CHECK(neg_definite({{Rat(-7, 12), Rat(2, 3)}, {Rat(2, 3), Rat(-5, 6)}}));
    CHECK_FALSE(neg_definite({{Rat(-5, 6), Rat(1)}, {Rat(1), Rat(-1, 2)}}));
    CHECK(neg_definite({{Rat(-1)}}));
    CHECK_THROWS_AS(neg_definite({{Rat(-1), Rat(1)}, {Rat(0), Rat(-1)}}), EngineError);
}

TEST_CASE("K3 self-intersections") {
    CHECK(k3_self_intersection({3, 6}) == Rat(-11, 28));
    CHECK(k3_self_intersection({1, 2}) == Rat(-5, 6));
    CHECK(k3_self_intersection({}) == Rat(-2));
}

TEST_CASE("variant flags") {
    auto atoms = parse_condition("c ≠ 0, a_1 = 0");
    REQUIRE(atoms.size() == 2);
    CHECK(atoms[0] == ConditionAtom{"c", "nonzero"});
    CHECK(atoms[1] == ConditionAtom{"a1", "0"});
    auto chain = parse_condition("a_1 = a_2 = 0");
    CHECK(chain == std::vector<ConditionAtom>{{"a1", "0"}, {"a2", "0"}});
    CHECK(parse_condition("Type II") == std::vector<ConditionAtom>{{"type", "II"}});
    CHECK(parse_condition("").empty());

    auto v = Variant::parse("a1=0,c=0");
    CHECK(v.satisfies(parse_condition("c = 0, a_1 = 0")));
    CHECK_FALSE(v.satisfies(atoms));
    CHECK(Variant::parse("special").str() == v.str());
    CHECK(Variant().value("b1") == "nonzero");
    CHECK(Variant().value("type") == "I");
    CHECK_THROWS_AS(v.require_declared({"a1"}), EngineError);
    CHECK(all_variants({"a1", "c"}).size() == 4);
}

TEST_CASE("certificates for table rows") {
    Family f95 = fam(5, 6, 22, 33);
    auto c95 = classify_point(f95, point(f95, "O_y"), Variant(), rows_at(95, "O_y"));
    CHECK(c95.valid());
    CHECK(c95.label.method == Method::B);

    Family f10 = fam(1, 1, 3, 5);
    auto c10 = classify_point(f10, point(f10, "O_t"), Variant(), rows_at(10, "O_t"));
    CHECK(c10.valid());
    CHECK(c10.label.method == Method::P);

    Family f23 = fam(2, 3, 4, 5);
    auto c23 = classify_point(f23, point(f23, "O_z"), Variant::parse("a1=0,c=0"), rows_at(23, "O_z"));
    CHECK(c23.valid());
    CHECK(c23.label.method == Method::IOTA1);

    CHECK_THROWS_AS(classify_point(f23, point(f23, "O_z"), Variant(), {}), EngineError);
}

TEST_CASE("weight order counts the point's coordinates as zero") {
    Family f52 = fam(2, 4, 5, 11);
    auto q = point(f52, "O_z");
    CHECK(weight_order(f52, q, parse_monomial_list("xz, t")) == 1);
    Family f95 = fam(5, 6, 22, 33);
    CHECK(weight_order(f95, point(f95, "O_y"), parse_monomial_list("w^2")) == 6);
}

}  // TEST_SUITE
