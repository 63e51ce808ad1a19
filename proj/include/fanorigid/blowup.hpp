#pragma once

#include <string>
#include <vector>

#include "fanorigid/census.hpp"

namespace fr {

// Kawamata blow-up of a terminal point 1/r(1,a,b), b = r - a.
struct BlowupContext {
    Rat a_cubed;
    int r = 1;
    int a = 1;
    int b = 0;

    static BlowupContext make(const Family& f, const QuotientSingularity& q);
    Rat e_cubed() const { return Rat(static_cast<long long>(r) * r, static_cast<long long>(a) * b); }
};

// beta_B * B + beta_E * E, where B = -K_Y = A - E/r.
struct YClass {
    Rat beta_B;
    Rat beta_E;

    static YClass B() { return {Rat(1), Rat(0)}; }
    static YClass E() { return {Rat(0), Rat(1)}; }
    static YClass from_AE(int r, const Rat& alpha_A, const Rat& alpha_E);

    Rat alpha_A() const { return beta_B; }
    Rat alpha_E(int r) const { return beta_E - beta_B / Rat(r); }

    // Accepts forms like "B", "2B", "B-E", "5B+2E", "7B".
    static YClass parse(std::string_view text);
    std::string str() const;

    friend YClass operator+(const YClass& x, const YClass& y) {
        return {x.beta_B + y.beta_B, x.beta_E + y.beta_E};
    }
    friend YClass operator-(const YClass& x, const YClass& y) {
        return {x.beta_B - y.beta_B, x.beta_E - y.beta_E};
    }
    friend YClass operator*(const Rat& s, const YClass& x) { return {s * x.beta_B, s * x.beta_E}; }
    bool operator==(const YClass& o) const = default;
};

Rat triple(const BlowupContext& ctx, const YClass& c1, const YClass& c2, const YClass& c3);

Rat b_cubed(const BlowupContext& ctx);

char sign_char(const Rat& value);  // '+', '0' or '-'

// m/r where m is the graded order of g at the vertex after eliminating
// one coordinate through f; throws OverCutoff when everything cancels.
Rat divisor_multiplicity(const Polynomial& f, const Polynomial& g, const Chart& chart, int cutoff);

// c*B + ((c - m)/r)*E for a surface cut by a degree-c polynomial vanishing
// to order m/r; throws NonIntegral when r does not divide c - m.
YClass proper_transform_class(const BlowupContext& ctx, int c, const Rat& mult);

// Possible classes of the surface S cut by x: {B}, or {B, B-E} when a1 > 1 and r | d-1.
std::vector<YClass> s_class(const Family& f, const BlowupContext& ctx);

}  // namespace fr
