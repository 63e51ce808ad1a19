#include "fanorigid/blowup.hpp"

#include <regex>

namespace fr {

BlowupContext BlowupContext::make(const Family& f, const QuotientSingularity& q) {
    BlowupContext ctx;
    ctx.a_cubed = anticanonical_degree(f);
    ctx.r = q.type.r;
    ctx.a = q.type.a;
    ctx.b = q.type.b();
    return ctx;
}

YClass YClass::from_AE(int r, const Rat& alpha_A, const Rat& alpha_E) {
    return {alpha_A, alpha_E + alpha_A / Rat(r)};
}

YClass YClass::parse(std::string_view text) {
    static const std::regex re(R"(^\s*(\d*)\s*B\s*(?:([+-])\s*(\d*)\s*E)?\s*$)");
    std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, re))
        throw EngineError(ErrorKind::ParseError, "not a class cB+bE: '" + s + "'");
    YClass c;
    c.beta_B = m[1].length() ? Rat::parse(m[1].str()) : Rat(1);
    if (m[2].matched) {
        Rat e = m[3].length() ? Rat::parse(m[3].str()) : Rat(1);
        c.beta_E = m[2].str() == "-" ? -e : e;
    }
    return c;
}

std::string YClass::str() const {
    auto coef = [](const Rat& v) {
        if (v == Rat(1)) return std::string();
        if (v.is_integer()) return v.str();
        return "(" + v.str() + ")";
    };
    std::string s;
    if (!beta_B.is_zero()) s += (beta_B.sign() < 0 ? "-" + coef(-beta_B) : coef(beta_B)) + "B";
    if (!beta_E.is_zero()) {
        Rat mag = beta_E.sign() < 0 ? -beta_E : beta_E;
        if (!s.empty()) s += beta_E.sign() < 0 ? "-" : "+";
        else if (beta_E.sign() < 0) s += "-";
        s += coef(mag) + "E";
    }
    return s.empty() ? "0" : s;
}

Rat triple(const BlowupContext& ctx, const YClass& c1, const YClass& c2, const YClass& c3) {
    // A^2 E = A E^2 = 0, so only the pure terms survive in the {A, E} basis.
    Rat pure_a = c1.alpha_A() * c2.alpha_A() * c3.alpha_A();
    Rat pure_e = c1.alpha_E(ctx.r) * c2.alpha_E(ctx.r) * c3.alpha_E(ctx.r);
    return ctx.a_cubed * pure_a + ctx.e_cubed() * pure_e;
}

Rat b_cubed(const BlowupContext& ctx) {
    return triple(ctx, YClass::B(), YClass::B(), YClass::B());
}

char sign_char(const Rat& value) {
    return value.sign() > 0 ? '+' : (value.sign() < 0 ? '-' : '0');
}

Rat divisor_multiplicity(const Polynomial& f, const Polynomial& g, const Chart& chart, int cutoff) {
    auto order = series_order(g, chart, implicit_eliminate(f, chart, cutoff));
    if (order.over_cutoff())
        throw EngineError(ErrorKind::OverCutoff,
                          "all terms cancel below degree " + std::to_string(cutoff) +
                              "; raise the cutoff");
    return *order.order;
}

YClass proper_transform_class(const BlowupContext& ctx, int c, const Rat& mult) {
    Rat m = mult * Rat(ctx.r);
    if (!m.is_integer())
        throw EngineError(ErrorKind::NonIntegral, "multiplicity " + mult.str() + " is not m/" +
                                                       std::to_string(ctx.r) + " with m integral");
    Rat coef_e = (Rat(c) - m) / Rat(ctx.r);
    if (!coef_e.is_integer())
        throw EngineError(ErrorKind::NonIntegral, "(c - m)/r = (" + std::to_string(c) + " - " +
                                                       m.str() + ")/" + std::to_string(ctx.r) +
                                                       " is not an integer");
    return {Rat(c), coef_e};
}

std::vector<YClass> s_class(const Family& f, const BlowupContext& ctx) {
    if (f.a(1) > 1 && (f.d - 1) % ctx.r == 0) return {YClass::B(), YClass::B() - YClass::E()};
    return {YClass::B()};
}

}  // namespace fr
