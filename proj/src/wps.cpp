#include "fanorigid/wps.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fanorigid/census.hpp"

namespace fr {

std::string Family::label() const {
    std::string s = "X_" + std::to_string(d) + " in P(";
    for (int i = 0; i < kNumCoords; ++i) s += (i ? "," : "") + std::to_string(a(i));
    return s + ")";
}

Family make_family(const std::array<int, 4>& a, std::optional<int> entry_no) {
    for (size_t i = 0; i < 4; ++i) {
        if (a[i] <= 0) throw std::invalid_argument("weights must be positive");
        if (i > 0 && a[i] < a[i - 1]) throw std::invalid_argument("weights must be nondecreasing");
    }
    Family f;
    f.weights = {1, a[0], a[1], a[2], a[3]};
    f.d = a[0] + a[1] + a[2] + a[3];
    f.entry_no = entry_no;
    return f;
}

Rat anticanonical_degree(const Family& f) {
    long long prod = 1;
    for (int i = 1; i < kNumCoords; ++i) prod *= f.a(i);
    return Rat(f.d, prod);
}

std::array<long long, 3> hat_lcms(const Family& f) {
    std::array<long long, 3> out{};
    for (int skip = 2; skip <= 4; ++skip) {
        long long l = 1;
        for (int i = 1; i <= 4; ++i)
            if (i != skip) l = std::lcm(l, static_cast<long long>(f.a(i)));
        out[static_cast<size_t>(skip - 2)] = l;
    }
    return out;
}

bool is_wellformed(const Weights5& w) {
    // Every 4-subset of the five weights must have gcd 1.
    for (int skip = 0; skip < kNumCoords; ++skip) {
        int g = 0;
        for (int i = 0; i < kNumCoords; ++i)
            if (i != skip) g = std::gcd(g, w[static_cast<size_t>(i)]);
        if (g != 1) return false;
    }
    return true;
}

std::string subset_str(unsigned mask) {
    std::string s = "{";
    for (int i = 0; i < kNumCoords; ++i)
        if (mask & (1u << i)) {
            if (s.size() > 1) s += ",";
            s += coord_name(i);
        }
    return s + "}";
}

std::vector<Exponents> general_support(const Family& f) {
    std::vector<Exponents> out;
    for (const auto& m : weighted_monomials(f.weights, f.d)) out.push_back(m.e);
    return out;
}

namespace {

int popcount(unsigned m) { return __builtin_popcount(m); }

QuasiSmoothness failure(unsigned mask) {
    return {false, mask, "no monomial of degree d in " + subset_str(mask) +
                             " and too few monomials linear in outside coordinates"};
}

}  // namespace

QuasiSmoothness general_quasismooth(const Family& f) {
    // Subsets containing x pass through x^d, so only subsets of {y,z,t,w} matter.
    for (unsigned mask = 1; mask < 32; ++mask) {
        if (mask & 1u) continue;
        if (representable(f.weights, f.d, mask)) continue;
        int linear = 0;
        for (int e = 0; e < kNumCoords; ++e) {
            if (mask & (1u << e)) continue;
            if (representable(f.weights, f.d - f.a(e), mask)) ++linear;
        }
        if (linear < popcount(mask)) return failure(mask);
    }
    return {};
}

QuasiSmoothness support_quasismooth(const std::vector<Exponents>& support) {
    for (unsigned mask = 1; mask < 32; ++mask) {
        bool pure = false;
        std::array<bool, kNumCoords> linear_in{};
        for (const auto& e : support) {
            int outside_total = 0;
            int outside_idx = -1;
            for (int i = 0; i < kNumCoords; ++i) {
                if (mask & (1u << i)) continue;
                outside_total += e[static_cast<size_t>(i)];
                if (e[static_cast<size_t>(i)] > 0) outside_idx = i;
            }
            if (outside_total == 0) pure = true;
            else if (outside_total == 1) linear_in[static_cast<size_t>(outside_idx)] = true;
        }
        if (pure) continue;
        int linear = static_cast<int>(std::count(linear_in.begin(), linear_in.end(), true));
        if (linear < popcount(mask)) return failure(mask);
    }
    return {};
}

std::vector<Family> enumerate_families(int max_weight) {
    std::vector<Family> out;
    for (int a1 = 1; a1 <= max_weight; ++a1)
        for (int a2 = a1; a2 <= max_weight; ++a2)
            for (int a3 = a2; a3 <= max_weight; ++a3) {
                // A triple with a common factor gives a singular curve.
                if (std::gcd(std::gcd(a1, a2), a3) != 1) continue;
                for (int a4 = a3; a4 <= max_weight; ++a4) {
                    if (std::gcd(std::gcd(a1, a2), a4) != 1 || std::gcd(std::gcd(a1, a3), a4) != 1 ||
                        std::gcd(std::gcd(a2, a3), a4) != 1)
                        continue;
                    Family f = make_family({a1, a2, a3, a4});
                    if (!is_wellformed(f.weights)) continue;
                    if (!general_quasismooth(f).ok) continue;
                    if (!is_terminal_family(f)) continue;
                    out.push_back(f);
                }
            }
    std::sort(out.begin(), out.end(), [](const Family& x, const Family& y) {
        if (x.d != y.d) return x.d < y.d;
        return x.weights < y.weights;
    });
    for (size_t i = 0; i < out.size(); ++i) out[i].entry_no = static_cast<int>(i) + 1;
    return out;
}

}  // namespace fr
