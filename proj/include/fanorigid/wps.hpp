#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fanorigid/exactmath.hpp"

namespace fr {

// Hypersurface of degree d = a1+a2+a3+a4 in P(1,a1,a2,a3,a4).
struct Family {
    Weights5 weights{};  // weights[0] == 1, nondecreasing
    int d = 0;
    std::optional<int> entry_no;

    int a(int i) const { return weights[static_cast<size_t>(i)]; }
    std::string label() const;  // e.g. "X_14 in P(1,2,3,4,5)"
    bool operator==(const Family& o) const { return weights == o.weights && d == o.d; }
};

// Validates ordering and positivity; d is the anticanonical degree.
Family make_family(const std::array<int, 4>& a, std::optional<int> entry_no = std::nullopt);

Rat anticanonical_degree(const Family& f);

// Index k in the result is the lcm of the three weights among a1..a4 other than a_{k+2}.
std::array<long long, 3> hat_lcms(const Family& f);

bool is_wellformed(const Weights5& w);

struct QuasiSmoothness {
    bool ok = true;
    unsigned failing_subset = 0;  // bit mask over coordinates; 0 when ok
    std::string diagnostic;
};

std::string subset_str(unsigned mask);

// Every monomial of degree d.
std::vector<Exponents> general_support(const Family& f);

// Subset criterion evaluated from weights alone (general member).
QuasiSmoothness general_quasismooth(const Family& f);

// Subset criterion evaluated on an explicit monomial support.
QuasiSmoothness support_quasismooth(const std::vector<Exponents>& support);

// All families with a4 <= max_weight, sorted by (d, a1..a4) and numbered from 1.
std::vector<Family> enumerate_families(int max_weight);

}  // namespace fr
