#include "fanorigid/members.hpp"

#include <random>

namespace fr {

Polynomial generic_member(const Family& f, std::uint32_t seed) {
    std::mt19937 rng(seed);
    Polynomial p;
    for (const auto& e : general_support(f)) {
        long long c = static_cast<long long>(rng() % 61) + 1;
        if (rng() & 1u) c = -c;
        p.add_term(e, Rat(c));
    }
    return p;
}

Polynomial vertex_normal_form(const Polynomial& f, const Family& family, int vertex, int eliminated) {
    Polynomial out;
    const int target = family.a(eliminated);
    for (const auto& [e, c] : f.terms()) {
        Exponents rest = e;
        rest[static_cast<size_t>(vertex)] = 0;
        bool absorbed = e[static_cast<size_t>(vertex)] > 0 && weighted_degree(rest, family.weights) == target;
        Exponents key{};
        key[static_cast<size_t>(eliminated)] = 1;
        if (absorbed && rest != key) continue;
        out.add_term(e, c);
    }
    return out;
}

std::optional<int> eliminated_in(const Polynomial& f, const Family& family, int vertex) {
    std::optional<int> best;
    for (const auto& [e, c] : f.terms()) {
        if (e[static_cast<size_t>(vertex)] == 0) continue;
        int other = -1, total = 0;
        for (int k = 0; k < kNumCoords; ++k) {
            if (k == vertex) continue;
            total += e[static_cast<size_t>(k)];
            if (e[static_cast<size_t>(k)] == 1) other = k;
        }
        if (total != 1 || other < 0) continue;
        if (!best || family.a(other) > family.a(*best) ||
            (family.a(other) == family.a(*best) && other > *best))
            best = other;
    }
    return best;
}

Polynomial special_member_23() {
    // (t + y^2) w^2 + y t (t - y^2)(t + 2y^2) + z^4 y + x t z^3 + w (x y z^2 + x^9) + x^2 y^6
    return Polynomial::parse(
        "t*w^2 + y^2*w^2 + y*t^3 + y^3*t^2 - 2*y^5*t + z^4*y + x*t*z^3 + x*y*z^2*w + x^9*w + x^2*y^6");
}

}  // namespace fr
