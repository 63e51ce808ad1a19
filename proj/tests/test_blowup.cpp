#include <doctest.h>

#include <random>

#include "fanorigid/blowup.hpp"
#include "fanorigid/members.hpp"

using namespace fr;

namespace {

Family fam(int a1, int a2, int a3, int a4) { return make_family({a1, a2, a3, a4}); }

BlowupContext ctx_at(const Family& f, const std::string& point) {
    for (const auto& q : census(f))
        if (q.location == Location::parse(point)) return BlowupContext::make(f, q);
    FAIL("no census point " << point);
    return {};
}

YClass random_class(std::mt19937& rng) {
    return {Rat(static_cast<long long>(rng() % 13) - 6, 1 + static_cast<long long>(rng() % 3)),
            Rat(static_cast<long long>(rng() % 13) - 6, 1 + static_cast<long long>(rng() % 3))};
}

}  // namespace

TEST_SUITE("blowup") {

TEST_CASE("class parsing") {
    CHECK(YClass::parse("B") == YClass::B());
    CHECK(YClass::parse("5B+2E") == YClass{Rat(5), Rat(2)});
    CHECK(YClass::parse("B-E") == YClass{Rat(1), Rat(-1)});
    CHECK(YClass::parse("7B") == YClass{Rat(7), Rat(0)});
    CHECK(YClass::parse(" 3B - E ") == YClass{Rat(3), Rat(-1)});
    CHECK_THROWS_AS(YClass::parse("E+B"), EngineError);
    CHECK(YClass::parse("5B+2E").str() == "5B+2E");
    CHECK(YClass::parse("B-E").str() == "B-E");
}

TEST_CASE("B cubed values") {
    CHECK(b_cubed(ctx_at(fam(1, 1, 3, 5), "O_t")) == Rat(1, 2));
    CHECK(b_cubed(ctx_at(fam(1, 2, 3, 3), "O_z")) == Rat(0));
    CHECK(b_cubed(ctx_at(fam(1, 2, 3, 4), "O_zO_w")) == Rat(-1, 12));
    CHECK(b_cubed(ctx_at(fam(5, 6, 22, 33), "O_tO_w")) == Rat(0));
    CHECK(b_cubed(ctx_at(fam(5, 6, 22, 33), "O_y")) == Rat(-1, 33));
    CHECK(sign_char(Rat(-1, 33)) == '-');
    CHECK(sign_char(Rat(0)) == '0');
}

TEST_CASE("triple products") {
    auto ctx = ctx_at(fam(5, 6, 22, 33), "O_y");
    YClass A = YClass::from_AE(ctx.r, Rat(1), Rat(0));
    CHECK(triple(ctx, A, A, A) == ctx.a_cubed);
    CHECK(triple(ctx, YClass::B(), YClass::B(), YClass::B()) == b_cubed(ctx));
    CHECK(triple(ctx, YClass::E(), YClass::E(), YClass::E()) == ctx.e_cubed());
    CHECK(triple(ctx, A, A, YClass::E()) == Rat(0));
}

TEST_CASE("triple product is symmetric and trilinear") {
    std::mt19937 rng(29);
    for (const auto& f : enumerate_families(33))
        for (const auto& q : census(f)) {
            auto ctx = BlowupContext::make(f, q);
            YClass x = random_class(rng), y = random_class(rng), z = random_class(rng), u = random_class(rng);
            Rat s = Rat(static_cast<long long>(rng() % 9) - 4);
            Rat v = triple(ctx, x, y, z);
            CHECK(v == triple(ctx, y, x, z));
            CHECK(v == triple(ctx, z, y, x));
            CHECK(v == triple(ctx, x, z, y));
            CHECK(triple(ctx, x + u, y, z) == v + triple(ctx, u, y, z));
            CHECK(triple(ctx, s * x, y, z) == s * v);
        }
}

TEST_CASE("proper transform classes") {
    auto c23 = ctx_at(fam(2, 3, 4, 5), "O_z");
    CHECK(proper_transform_class(c23, 2, Rat(2, 3)) == YClass::parse("2B"));
    auto c50 = ctx_at(fam(1, 3, 7, 11), "O_t");
    CHECK(proper_transform_class(c50, 1, Rat(8, 7)) == YClass::parse("B-E"));
    auto c95 = ctx_at(fam(5, 6, 22, 33), "O_y");
    CHECK(proper_transform_class(c95, 6, Rat(6, 5)) == YClass::parse("6B"));
    CHECK_THROWS_AS(proper_transform_class(c95, 6, Rat(5, 5)), EngineError);
}

TEST_CASE("divisor multiplicity through the series") {
    Family f50 = fam(1, 3, 7, 11);
    auto q = vertex_singularity(f50, 3);
    REQUIRE(q);
    REQUIRE(q->eliminated);
    Chart chart = Chart::make(f50.weights, 3, *q->eliminated);
    auto f = vertex_normal_form(generic_member(f50, 1), f50, 3, *q->eliminated);
    CHECK(divisor_multiplicity(f, Polynomial::parse("y"), chart, default_cutoff(chart.r)) == Rat(8, 7));
    CHECK(divisor_multiplicity(f, Polynomial::parse("x"), chart, default_cutoff(chart.r)) == Rat(1, 7));
}

TEST_CASE("surface classes of x") {
    auto c9 = ctx_at(fam(1, 2, 3, 3), "O_z");
    CHECK(s_class(fam(1, 2, 3, 3), c9) == std::vector<YClass>{YClass::B()});
    auto c95 = ctx_at(fam(5, 6, 22, 33), "O_y");
    CHECK(s_class(fam(5, 6, 22, 33), c95) == std::vector<YClass>{YClass::B(), YClass::parse("B-E")});
    auto c38 = ctx_at(fam(2, 3, 5, 8), "O_yO_w");
    CHECK(s_class(fam(2, 3, 5, 8), c38) == std::vector<YClass>{YClass::B()});
}

}  // TEST_SUITE
