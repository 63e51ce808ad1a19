#include <doctest.h>

#include <random>
#include <set>

#include "fanorigid/exactmath.hpp"

using namespace fr;

namespace {

// Brute-force oracle: nested loops over bounded exponents.
std::set<Exponents> brute_monomials(const Weights5& w, int d, unsigned mask) {
    std::set<Exponents> out;
    Exponents e{};
    std::array<int, 5> hi{};
    for (int k = 0; k < 5; ++k) hi[static_cast<size_t>(k)] = (mask >> k) & 1u ? d / w[static_cast<size_t>(k)] : 0;
    for (e[0] = 0; e[0] <= hi[0]; ++e[0])
        for (e[1] = 0; e[1] <= hi[1]; ++e[1])
            for (e[2] = 0; e[2] <= hi[2]; ++e[2])
                for (e[3] = 0; e[3] <= hi[3]; ++e[3])
                    for (e[4] = 0; e[4] <= hi[4]; ++e[4])
                        if (weighted_degree(e, w) == d) out.insert(e);
    return out;
}

Exponents ex(int x, int y, int z, int t, int w) { return {x, y, z, t, w}; }

}  // namespace

TEST_SUITE("exactmath") {

TEST_CASE("rationals are kept in lowest terms") {
    CHECK(Rat(6, 8).str() == "3/4");
    CHECK(Rat(3, -6).str() == "-1/2");
    CHECK(Rat(4, 2).str() == "2");
    CHECK(Rat(4, 2).is_integer());
    CHECK(Rat(0, 5).is_zero());
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) / Rat(1, 4) == Rat(2));
    CHECK(Rat(-1, 3) < Rat(1, 330));
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("rational parse round-trips") {
    std::mt19937 rng(7);
    for (int i = 0; i < 500; ++i) {
        long long n = static_cast<long long>(rng() % 2001) - 1000;
        long long d = static_cast<long long>(rng() % 999) + 1;
        Rat q(n, d);
        CHECK(Rat::parse(q.str()) == q);
        CHECK(q.den() > 0);
        CHECK(gcd(q.num(), q.den()) == 1);
    }
    CHECK(Rat::parse("7/60") == Rat(7, 60));
    CHECK(Rat::parse("-3") == Rat(-3));
    CHECK_THROWS_AS(Rat::parse("1/"), EngineError);
}

TEST_CASE("weighted monomials of restricted variables") {
    auto zt = weighted_monomials({1, 1, 2, 2, 3}, 8, 0b01100);
    CHECK(zt.size() == 5);
    auto tw = weighted_monomials({1, 1, 1, 4, 6}, 12, 0b11000);
    REQUIRE(tw.size() == 2);
    std::set<Exponents> got;
    for (const auto& m : tw) got.insert(m.e);
    CHECK(got == std::set<Exponents>{ex(0, 0, 0, 3, 0), ex(0, 0, 0, 0, 2)});
    auto zero = weighted_monomials({1, 1, 1, 1, 1}, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].e == Exponents{});
}

TEST_CASE("weighted monomials agree with a brute-force loop") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        Weights5 w{1, 1 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 5),
                   1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 7)};
        int d = 1 + static_cast<int>(rng() % 14);
        unsigned mask = 1u + rng() % 31u;
        std::set<Exponents> got;
        for (const auto& m : weighted_monomials(w, d, mask)) {
            CHECK(m.degree == d);
            got.insert(m.e);
        }
        CHECK(got == brute_monomials(w, d, mask));
        CHECK(representable(w, d, mask) == !got.empty());
    }
}

TEST_CASE("polynomial parsing") {
    auto p = Polynomial::parse("t*w^2 + 3yt^3 - 1/2 x^9w");
    CHECK(p.terms().size() == 3);
    CHECK(p.terms().at(ex(0, 1, 0, 3, 0)) == Rat(3));
    CHECK(p.terms().at(ex(9, 0, 0, 0, 1)) == Rat(-1, 2));
    CHECK(p.homogeneous_degree({1, 2, 3, 4, 5}) == 14);
    CHECK_FALSE(Polynomial::parse("x + y").homogeneous_degree({1, 2, 3, 4, 5}).has_value());
    CHECK(Polynomial::parse("x - x").is_zero());
    CHECK_THROWS_AS(Polynomial::parse("x + q"), EngineError);
    CHECK(Polynomial::parse(p.str()).terms() == p.terms());
}

TEST_CASE("charts at vertices") {
    // No. 23 at O_z eliminating y: parameters x, t, w with residues 1, 1, 2 mod 3.
    Chart c = Chart::make({1, 2, 3, 4, 5}, 2, 1);
    CHECK(c.r == 3);
    CHECK(c.params == std::array<int, 3>{0, 3, 4});
    CHECK(c.param_residues == std::array<int, 3>{1, 1, 2});
    CHECK(c.eliminated_residue == 2);
    CHECK_THROWS_AS(Chart::make({1, 1, 2, 4, 4}, 4, 2), EngineError);
}

TEST_CASE("implicit elimination") {
    Chart c = Chart::make({1, 2, 3, 4, 5}, 2, 1);
    const auto f = Polynomial::parse(
        "t*w^2 + y^2*w^2 + y*t^3 + y^3*t^2 - 2*y^5*t + z^4*y + x*t*z^3 + x*y*z^2*w + x^9*w + x^2*y^6");
    auto s = implicit_eliminate(f, c, 6);
    REQUIRE(s.min_degree() == 2);
    auto low = s.homogeneous_part(2);
    REQUIRE(low.terms().size() == 1);
    CHECK(low.terms().begin()->first == TruncSeries::Key{1, 1, 0});
    CHECK(low.terms().begin()->second == Rat(-1));

    // Nothing to balance: the eliminated coordinate vanishes identically.
    CHECK(implicit_eliminate(Polynomial::parse("z^4*y"), c, 6).is_zero());

    // O_w of P(1,2,3,4,5) eliminating t: w t + x^4 gives t = -x^4.
    Chart cw = Chart::make({1, 2, 3, 4, 5}, 4, 3);
    auto sw = implicit_eliminate(Polynomial::parse("w*t + x^4"), cw, 5);
    REQUIRE(sw.terms().size() == 1);
    CHECK(sw.terms().begin()->first == TruncSeries::Key{4, 0, 0});
    CHECK(sw.terms().begin()->second == Rat(-1));

    CHECK_THROWS_AS(implicit_eliminate(Polynomial::parse("x^14"), c, 6), EngineError);
}

TEST_CASE("re-substituting the elimination leaves nothing below the cutoff") {
    // Property over random members of No. 23 at O_z: f(local, s) has no term of degree < cutoff.
    const Weights5 w{1, 2, 3, 4, 5};
    Chart c = Chart::make(w, 2, 1);
    auto monos = weighted_monomials(w, 14);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial f;
        f.add_term(ex(0, 1, 4, 0, 0), Rat(1 + static_cast<long long>(rng() % 5)));
        for (const auto& m : monos)
            if (rng() % 3 == 0 && !(m.e[1] == 1 && m.e[2] == 4))
                f.add_term(m.e, Rat(static_cast<long long>(rng() % 11) - 5));
        const int cutoff = default_cutoff(c.r);
        auto s = implicit_eliminate(f, c, cutoff);
        TruncSeries total({1, 1, 2}, cutoff);
        for (const auto& [e, coef] : f.terms()) {
            TruncSeries term({1, 1, 2}, cutoff);
            TruncSeries::Key k{e[0], e[3], e[4]};
            term.add_term(k, coef);
            for (int p = 0; p < e[1]; ++p) term = term * s;
            total = total + term;
        }
        CHECK(total.is_zero());
    }
}

TEST_CASE("series orders") {
    Chart c = Chart::make({1, 2, 3, 4, 5}, 2, 1);
    const auto f = Polynomial::parse(
        "t*w^2 + y^2*w^2 + y*t^3 + y^3*t^2 - 2*y^5*t + z^4*y + x*t*z^3 + x*y*z^2*w + x^9*w + x^2*y^6");
    auto s = implicit_eliminate(f, c, default_cutoff(3));
    CHECK(series_order(Polynomial::parse("y"), c, s).order == Rat(2, 3));
    CHECK(series_order(Polynomial::parse("y*z + x*t"), c, s).order == Rat(5, 3));
    CHECK(series_order(Polynomial::parse("x"), c, s).order == Rat(1, 3));
    CHECK(naive_order(Polynomial::parse("y*z + x*t"), c) == Rat(2, 3));
    CHECK_THROWS_AS(series_order(Polynomial(), c, s), EngineError);

    // Everything cancels below the cutoff.
    auto tiny = implicit_eliminate(f, c, 3);
    CHECK(series_order(Polynomial::parse("y*z + x*t"), c, tiny).over_cutoff());
}

TEST_CASE("series order never undercuts the monomial bound") {
    const Weights5 w{1, 2, 3, 4, 5};
    Chart c = Chart::make(w, 2, 1);
    const auto f = Polynomial::parse(
        "t*w^2 + y^2*w^2 + y*t^3 + y^3*t^2 - 2*y^5*t + z^4*y + x*t*z^3 + x*y*z^2*w + x^9*w + x^2*y^6");
    auto s = implicit_eliminate(f, c, default_cutoff(3));
    std::mt19937 rng(5);
    auto monos = weighted_monomials(w, 5);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial g;
        for (const auto& m : monos)
            if (rng() % 2) g.add_term(m.e, Rat(static_cast<long long>(rng() % 7) - 3));
        if (g.is_zero()) continue;
        auto res = series_order(g, c, s);
        if (res.order) CHECK(*res.order >= naive_order(g, c));
    }
}

}  // TEST_SUITE
