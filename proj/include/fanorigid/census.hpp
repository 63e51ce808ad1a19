#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fanorigid/wps.hpp"

namespace fr {

struct Location {
    enum class Kind { Vertex, Edge };
    Kind kind = Kind::Vertex;
    int i = 0;   // the vertex, or the lower edge index
    int j = -1;  // upper edge index; -1 for vertices

    static Location vertex(int i) { return {Kind::Vertex, i, -1}; }
    static Location edge(int i, int j) { return {Kind::Edge, i, j}; }
    static Location parse(std::string_view id);  // "O_z", "O_zO_t"

    bool is_vertex() const { return kind == Kind::Vertex; }
    bool contains(int coord) const { return coord == i || coord == j; }
    std::string id() const;
    auto operator<=>(const Location&) const = default;
};

// Terminal type 1/r(1, a, r-a).
struct TerminalType {
    int r = 1;
    int a = 0;
    int b() const { return r - a; }
    // Multiset form (1, min, max) for comparisons.
    std::array<int, 3> canonical() const;
    std::string str() const;
    bool operator==(const TerminalType& o) const { return r == o.r && canonical() == o.canonical(); }
};

struct QuotientSingularity {
    Location location;
    int count = 1;
    int r = 1;
    std::array<int, 3> local_params{};
    std::array<int, 3> residues{};  // weights of local_params mod r
    TerminalType type;
    std::optional<int> eliminated;  // vertices only
};

// Multiplies the residues by a unit mod r to reach (1, a, r-a); throws NonTerminal.
TerminalType normalize_type(int r, const std::array<int, 3>& residues);

// Coordinate x_e for which x_i^k * x_e has degree d with k >= 1, preferring the
// largest weight and then the larger index; nullopt if there is none.
std::optional<int> default_eliminated(const Family& f, int vertex);
bool has_eliminating_monomial(const Family& f, int vertex, int eliminated);

std::optional<QuotientSingularity> vertex_singularity(const Family& f, int i);
std::optional<QuotientSingularity> edge_singularities(const Family& f, int i, int j);

// Vertices w, t, z, y, then edges tw, zw, yw, zt, yt, yz.
std::vector<QuotientSingularity> census(const Family& f);

bool is_terminal_family(const Family& f);

}  // namespace fr
