#pragma once

#include <cstdint>
#include <optional>

#include "fanorigid/wps.hpp"

namespace fr {

// Every monomial of degree d with a pseudo-random nonzero integer coefficient.
Polynomial generic_member(const Family& f, std::uint32_t seed);

// Removes x_i^k * m with m free of x_i, deg m = a_e and m != x_e: a coordinate
// change x_e -> x_e + (those terms)/c absorbs them, so the general member may
// be taken without them in the chart at vertex i eliminating x_e.
Polynomial vertex_normal_form(const Polynomial& f, const Family& family, int vertex, int eliminated);

// Largest-weight x_e (ties to the larger index) with x_vertex^k * x_e present in f.
std::optional<int> eliminated_in(const Polynomial& f, const Family& family, int vertex);

// No. 23 with a1 = c = 0: no w z^3 and no z^2 t^2 term.
Polynomial special_member_23();

}  // namespace fr
